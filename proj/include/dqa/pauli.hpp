#ifndef DQA_PAULI_HPP
#define DQA_PAULI_HPP

#include <string>
#include <utility>
#include <vector>

#include "dqa/state.hpp"

namespace dqa {

enum class PauliAxis { X, Y, Z, Plus, Minus };

/// One weighted Pauli product. Plus/Minus factors are the raising/lowering
/// operators |0><1| and |1><0| in the spin-up-is-|0> convention.
struct PauliTerm {
    double coefficient = 0.0;
    std::vector<std::pair<int, PauliAxis>> factors;  // distinct qubits, sorted

    PauliTerm() = default;
    PauliTerm(double c, std::vector<std::pair<int, PauliAxis>> f);

    bool has_ladder() const;
    /// Adjoint term: Plus <-> Minus, coefficient unchanged (real coefficients).
    PauliTerm conjugated() const;
};

/// Weighted sum of Pauli terms. Construction enforces hermiticity at the term
/// level: every ladder term must be accompanied by its conjugate.
class HamiltonianSpec {
  public:
    HamiltonianSpec() = default;
    HamiltonianSpec(int n_qubits, std::vector<PauliTerm> terms);

    int n_qubits() const { return n_qubits_; }
    const std::vector<PauliTerm>& terms() const { return terms_; }

    /// Upper bound on the spectral norm: sum of |coefficient| (every Pauli
    /// product, ladder pairs included, has operator norm <= 1).
    double norm_bound() const;

    /// out += coefficient * (term product) |in>, matrix-free.
    void accumulate_term(const PauliTerm& term, const Vector& in, Vector& out) const;

    /// H|in>, matrix-free; never materializes the 2^N x 2^N matrix.
    Vector apply(const Vector& in) const;

    /// Dense matrix; requires n_qubits <= max_dense_qubits.
    Matrix dense() const;

    static constexpr int max_dense_qubits = 12;

  private:
    int n_qubits_ = 0;
    std::vector<PauliTerm> terms_;
};

struct Eigensystem {
    Matrix h;
    Eigen::VectorXd eigenvalues;  // ascending
    Matrix eigenvectors;          // columns
};

/// Dense build + full Hermitian diagonalization; n_qubits <= 12.
Eigensystem dense_and_eigensystem(const HamiltonianSpec& h);

double expectation(const StateVector& psi, const HamiltonianSpec& obs);
double expectation(const DensityMatrix& rho, const HamiltonianSpec& obs);

/// a*A + b*B with matching qubit counts (term concatenation).
HamiltonianSpec combine(double a, const HamiltonianSpec& A, double b, const HamiltonianSpec& B);

}  // namespace dqa

#endif

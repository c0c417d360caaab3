#ifndef DQA_STATE_HPP
#define DQA_STATE_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace dqa {

using cxd = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

enum class Spin { Up, Down };  // Up = |0> = sz eigenvalue +1

/// Pure state of n qubits. Amplitude index i encodes the basis bitstring of i
/// with qubit 0 as the most significant bit; bit 0 means |0> (spin up).
struct StateVector {
    int n_qubits = 0;
    Vector amps;

    StateVector() = default;
    explicit StateVector(int n);

    std::size_t dim() const { return static_cast<std::size_t>(amps.size()); }
    double norm() const { return amps.norm(); }

    /// Bit of qubit q inside basis index i.
    int bit(std::size_t i, int q) const {
        return static_cast<int>((i >> (n_qubits - 1 - q)) & 1u);
    }
};

/// Mixed state of n qubits, same index convention as StateVector.
struct DensityMatrix {
    int n_qubits = 0;
    Matrix rho;

    DensityMatrix() = default;
    explicit DensityMatrix(int n);
    static DensityMatrix from_pure(const StateVector& psi);

    std::size_t dim() const { return static_cast<std::size_t>(rho.rows()); }
    double trace_real() const { return rho.trace().real(); }

    /// Throws if the matrix is not Hermitian/trace-one/PSD within tolerances
    /// (1e-9 hermiticity and trace, -1e-8 eigenvalue slack).
    void validate() const;
};

StateVector state_from_bits(const std::vector<Spin>& bits);

/// In-place u on one target qubit; u is 2x2 and unitary within 1e-10.
void apply_1q(StateVector& psi, int target, const Matrix& u);
/// In-place u on an ordered qubit pair; u is 4x4 in the |q1 q2> basis.
void apply_2q(StateVector& psi, int q1, int q2, const Matrix& u);
/// Dispatches on targets.size(); validates unitarity and target ranges.
void apply_gate(StateVector& psi, const std::vector<int>& targets, const Matrix& u);

void apply_1q(DensityMatrix& rho, int target, const Matrix& u);
void apply_2q(DensityMatrix& rho, int q1, int q2, const Matrix& u);
void apply_gate(DensityMatrix& rho, const std::vector<int>& targets, const Matrix& u);

/// Kraus channel {K_i} on a single qubit of a density matrix.
void apply_channel_1q(DensityMatrix& rho, int target, const std::vector<Matrix>& kraus);

DensityMatrix partial_trace(const StateVector& psi, const std::vector<int>& keep);
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

/// Second-order Renyi entropy -log2 tr(rho^2), clamped to >= 0 for pure states
/// only through the numerics (no explicit clamp).
double renyi2_exact(const DensityMatrix& rho);

double purity(const DensityMatrix& rho);

/// |<a|b>|^2
double fidelity(const StateVector& a, const StateVector& b);

}  // namespace dqa

#endif

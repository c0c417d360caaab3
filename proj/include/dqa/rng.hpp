#ifndef DQA_RNG_HPP
#define DQA_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace dqa {

/// SplitMix64 step; used both as a stream generator and to derive child seeds.
inline std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seed-splitting rule: child(master, k) = splitmix64(master XOR golden*(k+1)).
/// Independent work items (noise seeds, measurement instances) must each be
/// given their own child seed so results do not depend on execution order.
inline std::uint64_t child_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t x = master ^ (0x9e3779b97f4a7c15ULL * (index + 1));
    return splitmix64(x);
}

/// mt19937_64 wrapped with explicit floating-point samplers. The standard
/// pins down the raw engine but not the distributions, so uniform/normal
/// draws are implemented here to keep outputs identical across toolchains.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller; draws exactly two uniforms per pair.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    /// Uniform direction on the unit sphere: z uniform in [-1,1], azimuth
    /// uniform in [0,2pi). Consumes exactly two uniforms.
    void unit_vector3(double& x, double& y, double& z) {
        z = 1.0 - 2.0 * uniform();
        double phi = 2.0 * M_PI * uniform();
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        x = r * std::cos(phi);
        y = r * std::sin(phi);
    }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace dqa

#endif

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "descm/polynomial.hpp"

namespace descm {

// A complex pole of the potential in the upper half plane, split into
// real part delta and imaginary part eps > 0.
struct Singularity {
    double delta;
    double eps;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Rational anharmonic oscillator V(x) = omega x^{2m} + p(x)/q(x) with
// q > 0 on the real line and q(0) = 1. Immutable after construction.
class RationalPotential {
public:
    // default: the harmonic oscillator V(x) = x^2
    RationalPotential() : numerator_{0.0}, q_coeffs_{1.0} {}

    // q given by its ascending coefficients (first entry must be 1);
    // the conjugate root pairs are computed.
    static RationalPotential from_coeffs(double omega, int m,
                                         std::vector<double> numerator,
                                         std::vector<double> q_coeffs);

    // q given by its upper-half-plane roots; the coefficients are computed
    // and normalized so q(0) = 1. An empty root list yields q = 1.
    static RationalPotential from_roots(double omega, int m,
                                        std::vector<double> numerator,
                                        std::vector<Complex> q_roots);

    ValidationReport validate() const;
    double evaluate(double x) const;

    // Distinct upper-half-plane poles of V, deduplicated to 1e-10 and
    // sorted by ascending delta (ties by eps).
    std::vector<Singularity> singularities() const;

    double omega() const { return omega_; }
    int m() const { return m_; }
    const std::vector<double>& numerator() const { return numerator_; }
    const std::vector<double>& q_coeffs() const { return q_coeffs_; }
    const std::vector<Complex>& q_roots() const { return q_roots_; }
    int l() const { return static_cast<int>(q_roots_.size()); }
    int numerator_degree() const;

private:
    double omega_ = 1.0;
    int m_ = 1;
    std::vector<double> numerator_; // lambda_0 .. lambda_k, ascending
    std::vector<double> q_coeffs_;  // 1, g_1 .. g_{2l}, ascending
    std::vector<Complex> q_roots_;  // upper-half-plane roots, one per pair
};

// Potential drawn from the randomized-study distribution:
// omega ~ U(0,10), k ~ U{0..2m+2l-1}, lambda_i ~ U(-10,10),
// Re{z_i} ~ U(-5,5), Im{z_i} ~ U(0,10). Pairs with Im{z_i} < 1e-3 are
// resampled so the study cannot stall on a near-real pole. Deterministic
// for a fixed (m, l, seed).
RationalPotential random_potential(int m, int l, std::uint64_t seed);

} // namespace descm

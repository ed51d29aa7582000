#pragma once

#include <complex>
#include <vector>

namespace descm {

using Complex = std::complex<double>;

// Univariate polynomial with complex coefficients stored in ascending
// degree, so coeffs()[0] is the constant term. Real polynomials are a
// special case; real_coefficients() recovers them.
class Polynomial {
public:
    Polynomial() : coeffs_{Complex(0.0)} {}
    explicit Polynomial(std::vector<Complex> coeffs);
    static Polynomial from_real(const std::vector<double>& coeffs);

    // Real-coefficient polynomial prod_i (x - z_i)(x - conj(z_i)) / prod_i |z_i|^2.
    // Every root must lie strictly in the upper half plane and away from the
    // origin; the constant term of the result is exactly 1.
    static Polynomial from_conjugate_roots(const std::vector<Complex>& upper_roots);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const;
    const std::vector<Complex>& coefficients() const { return coeffs_; }
    std::vector<double> real_coefficients(double imag_tol = 1e-12) const;

    Complex eval(Complex x) const;      // Horner
    double eval_real(double x) const;   // Horner over doubles, real coeffs assumed
    Polynomial derivative() const;

    // All complex roots with multiplicity, by Aberth-Ehrlich simultaneous
    // iteration. Throws std::invalid_argument on the zero polynomial and
    // std::runtime_error if the iteration cap is hit.
    std::vector<Complex> roots(double tol_resid = 1e-12, int max_iter = 200) const;

private:
    std::vector<Complex> coeffs_;
};

} // namespace descm

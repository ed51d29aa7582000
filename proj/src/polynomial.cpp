#include "descm/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "descm/rng.hpp"

namespace descm {

namespace {

void trim(std::vector<Complex>& c) {
    while (c.size() > 1 && std::abs(c.back()) == 0.0) {
        c.pop_back();
    }
}

} // namespace

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        coeffs_.push_back(Complex(0.0));
    }
    trim(coeffs_);
}

Polynomial Polynomial::from_real(const std::vector<double>& coeffs) {
    std::vector<Complex> c(coeffs.begin(), coeffs.end());
    return Polynomial(std::move(c));
}

Polynomial Polynomial::from_conjugate_roots(const std::vector<Complex>& upper_roots) {
    for (const Complex& z : upper_roots) {
        if (!(z.imag() > 0.0)) {
            throw std::invalid_argument("from_conjugate_roots: root must have Im > 0");
        }
        if (z == Complex(0.0)) {
            throw std::invalid_argument("from_conjugate_roots: root at origin");
        }
    }
    // Each conjugate pair contributes the normalized real quadratic
    //   (x^2 - 2 Re{z} x + |z|^2) / |z|^2 = 1 - (2 Re{z}/|z|^2) x + x^2/|z|^2,
    // whose constant term is exactly 1, so the product's constant term is too.
    std::vector<double> acc{1.0};
    for (const Complex& z : upper_roots) {
        const double n2 = std::norm(z);
        const double quad[3] = {1.0, -2.0 * z.real() / n2, 1.0 / n2};
        std::vector<double> next(acc.size() + 2, 0.0);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            for (int j = 0; j < 3; ++j) {
                next[i + j] += acc[i] * quad[j];
            }
        }
        acc = std::move(next);
    }
    acc[0] = 1.0;
    return from_real(acc);
}

bool Polynomial::is_zero() const {
    return coeffs_.size() == 1 && coeffs_[0] == Complex(0.0);
}

std::vector<double> Polynomial::real_coefficients(double imag_tol) const {
    std::vector<double> out;
    out.reserve(coeffs_.size());
    for (const Complex& c : coeffs_) {
        if (std::abs(c.imag()) > imag_tol * (1.0 + std::abs(c.real()))) {
            throw std::runtime_error("real_coefficients: imaginary residue too large");
        }
        out.push_back(c.real());
    }
    return out;
}

Complex Polynomial::eval(Complex x) const {
    Complex acc = coeffs_.back();
    for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

double Polynomial::eval_real(double x) const {
    double acc = coeffs_.back().real();
    for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) {
        acc = acc * x + it->real();
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() == 1) {
        return Polynomial();
    }
    std::vector<Complex> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d[i - 1] = coeffs_[i] * static_cast<double>(i);
    }
    return Polynomial(std::move(d));
}

std::vector<Complex> Polynomial::roots(double tol_resid, int max_iter) const {
    if (is_zero()) {
        throw std::invalid_argument("roots: zero polynomial");
    }
    const int n = degree();
    if (n < 1) {
        return {};
    }
    if (n == 1) {
        return {-coeffs_[0] / coeffs_[1]};
    }

    double max_coeff = 0.0;
    for (const Complex& c : coeffs_) {
        max_coeff = std::max(max_coeff, std::abs(c));
    }
    const double accept = tol_resid * (1.0 + max_coeff);

    // Cauchy bound on root moduli
    double radius = 0.0;
    for (int i = 0; i < n; ++i) {
        radius = std::max(radius, std::abs(coeffs_[i] / coeffs_[n]));
    }
    radius = 1.0 + radius;

    // Starting points on a circle with a fixed-seed angular jitter so that
    // no initial guess coincides with a symmetry axis of the polynomial.
    SplitMix64 rng(0x5eedull);
    std::vector<Complex> z(n);
    for (int i = 0; i < n; ++i) {
        const double theta = 2.0 * std::numbers::pi * (i + 0.25) / n
                             + 0.05 * (rng.next_double() - 0.5);
        z[i] = 0.5 * radius * std::polar(1.0, theta);
    }

    const Polynomial dp = derivative();
    for (int iter = 0; iter < max_iter; ++iter) {
        bool all_ok = true;
        for (int i = 0; i < n; ++i) {
            const Complex pi = eval(z[i]);
            if (std::abs(pi) <= accept) {
                continue;
            }
            all_ok = false;
            const Complex dpi = dp.eval(z[i]);
            Complex ratio;
            if (dpi == Complex(0.0)) {
                ratio = Complex(0.0);
            } else {
                ratio = pi / dpi;
            }
            Complex sum(0.0);
            for (int j = 0; j < n; ++j) {
                if (j != i) {
                    sum += 1.0 / (z[i] - z[j]);
                }
            }
            Complex denom = 1.0 - ratio * sum;
            Complex step;
            if (std::abs(denom) < 1e-300 || dpi == Complex(0.0)) {
                // coincident guesses or a critical point: nudge off
                step = Complex(1e-3 * radius, 1e-3 * radius);
            } else {
                step = ratio / denom;
            }
            z[i] -= step;
        }
        if (all_ok) {
            std::sort(z.begin(), z.end(), [](const Complex& a, const Complex& b) {
                if (a.real() != b.real()) return a.real() < b.real();
                return a.imag() < b.imag();
            });
            return z;
        }
    }
    throw std::runtime_error("roots: Aberth iteration did not converge (ill-conditioned polynomial)");
}

} // namespace descm

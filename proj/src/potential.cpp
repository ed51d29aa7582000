#include "descm/potential.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "descm/rng.hpp"

namespace descm {

namespace {

std::vector<Complex> upper_half_roots(const std::vector<double>& q_coeffs) {
    Polynomial q = Polynomial::from_real(q_coeffs);
    if (q.degree() < 1) {
        return {};
    }
    std::vector<Complex> upper;
    for (const Complex& r : q.roots()) {
        if (r.imag() > 1e-10) {
            upper.push_back(r);
        }
    }
    return upper;
}

} // namespace

RationalPotential RationalPotential::from_coeffs(double omega, int m,
                                                 std::vector<double> numerator,
                                                 std::vector<double> q_coeffs) {
    if (q_coeffs.empty()) {
        q_coeffs.push_back(1.0);
    }
    RationalPotential p;
    p.omega_ = omega;
    p.m_ = m;
    p.numerator_ = std::move(numerator);
    p.q_roots_ = upper_half_roots(q_coeffs);
    p.q_coeffs_ = std::move(q_coeffs);
    if (p.numerator_.empty()) {
        p.numerator_.push_back(0.0);
    }
    return p;
}

RationalPotential RationalPotential::from_roots(double omega, int m,
                                                std::vector<double> numerator,
                                                std::vector<Complex> q_roots) {
    RationalPotential p;
    p.omega_ = omega;
    p.m_ = m;
    p.numerator_ = std::move(numerator);
    if (p.numerator_.empty()) {
        p.numerator_.push_back(0.0);
    }
    p.q_coeffs_ = Polynomial::from_conjugate_roots(q_roots).real_coefficients();
    p.q_roots_ = std::move(q_roots);
    return p;
}

int RationalPotential::numerator_degree() const {
    for (int i = static_cast<int>(numerator_.size()) - 1; i >= 0; --i) {
        if (numerator_[i] != 0.0) {
            return i;
        }
    }
    return 0;
}

ValidationReport RationalPotential::validate() const {
    ValidationReport report;
    auto fail = [&report](const std::string& msg) {
        report.ok = false;
        report.violations.push_back(msg);
    };

    if (!(omega_ > 0.0)) {
        fail("omega must be positive");
    }
    if (m_ < 1) {
        fail("m must be a positive integer");
    }
    if (q_coeffs_.empty() || q_coeffs_[0] != 1.0) {
        fail("denominator constant term must be exactly 1 (normalization q(0) = 1 removes the p/q representation ambiguity)");
    }

    Polynomial q = Polynomial::from_real(q_coeffs_);
    const int deg_q = q.degree();
    if (deg_q % 2 != 0) {
        fail("denominator degree must be even");
    }
    if (deg_q >= 1) {
        try {
            for (const Complex& r : q.roots()) {
                if (std::abs(r.imag()) <= 1e-9 * (1.0 + std::abs(r))) {
                    fail("denominator has a real root (q must be nonvanishing on the real line)");
                    break;
                }
            }
        } catch (const std::exception& e) {
            fail(std::string("denominator root finding failed: ") + e.what());
        }
    }

    // growth condition k - 2l < 2m so that p/q = o(x^{2m})
    const int k = numerator_degree();
    if (k - deg_q >= 2 * m_) {
        fail("degree condition violated: deg p - deg q must be < 2m");
    }
    return report;
}

double RationalPotential::evaluate(double x) const {
    const double p = Polynomial::from_real(numerator_).eval_real(x);
    const double q = Polynomial::from_real(q_coeffs_).eval_real(x);
    return omega_ * std::pow(x, 2 * m_) + p / q;
}

std::vector<Singularity> RationalPotential::singularities() const {
    std::vector<Singularity> out;
    for (const Complex& r : q_roots_) {
        bool dup = false;
        for (const Singularity& s : out) {
            if (std::abs(s.delta - r.real()) <= 1e-10 && std::abs(s.eps - r.imag()) <= 1e-10) {
                dup = true;
                break;
            }
        }
        if (!dup) {
            out.push_back({r.real(), r.imag()});
        }
    }
    std::sort(out.begin(), out.end(), [](const Singularity& a, const Singularity& b) {
        if (a.delta != b.delta) return a.delta < b.delta;
        return a.eps < b.eps;
    });
    return out;
}

RationalPotential random_potential(int m, int l, std::uint64_t seed) {
    if (m < 1 || l < 1) {
        throw std::invalid_argument("random_potential: m and l must be >= 1");
    }
    SplitMix64 rng(seed);
    const double omega = rng.uniform(0.0, 10.0);
    const int k = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(2 * m + 2 * l)));
    std::vector<double> lambda(k + 1);
    for (double& c : lambda) {
        c = rng.uniform(-10.0, 10.0);
    }
    std::vector<Complex> pairs(l);
    for (Complex& z : pairs) {
        double re = rng.uniform(-5.0, 5.0);
        double im = rng.uniform(0.0, 10.0);
        while (im < 1e-3) {
            re = rng.uniform(-5.0, 5.0);
            im = rng.uniform(0.0, 10.0);
        }
        z = Complex(re, im);
    }
    return RationalPotential::from_roots(omega, m, std::move(lambda), std::move(pairs));
}

} // namespace descm

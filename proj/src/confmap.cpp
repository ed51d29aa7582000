#include "descm/confmap.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

namespace descm {

std::string to_string(MapKind kind) {
    switch (kind) {
        case MapKind::plain: return "plain";
        case MapKind::single: return "single";
        case MapKind::multi: return "multi";
        case MapKind::fallback: return "fallback";
    }
    return "unknown";
}

PhiDerivatives phi_derivatives(const ConformalMap& map, double t) {
    PhiDerivatives out;
    const double sh = std::sinh(t);
    const double ch = std::cosh(t);
    out.phi = map.u0 * sh;
    out.d1 = map.u0 * ch;
    out.d2 = map.u0 * sh;
    out.d3 = map.u0 * ch;
    // adjust[i] multiplies t^i
    double tp = 1.0;
    for (std::size_t i = 0; i < map.adjust.size(); ++i) {
        const double c = map.adjust[i];
        const double di = static_cast<double>(i);
        out.phi += c * tp;
        if (i >= 1) out.d1 += c * di * (i >= 1 ? std::pow(t, di - 1.0) : 0.0);
        if (i >= 2) out.d2 += c * di * (di - 1.0) * std::pow(t, di - 2.0);
        if (i >= 3) out.d3 += c * di * (di - 1.0) * (di - 2.0) * std::pow(t, di - 3.0);
        tp *= t;
    }
    return out;
}

Complex phi_complex(const ConformalMap& map, Complex z) {
    Complex out = map.u0 * std::sinh(z);
    Complex zp(1.0, 0.0);
    for (double c : map.adjust) {
        out += c * zp;
        zp *= z;
    }
    return out;
}

std::pair<double, double> decay_constants(const RationalPotential& potential,
                                          const ConformalMap& map) {
    const double gamma = potential.m() + 1.0;
    const double B = std::sqrt(potential.omega()) / gamma
                     * std::pow(map.u0 / 2.0, gamma);
    return {gamma, B};
}

ConformalMap map_plain_sinh(const RationalPotential& potential) {
    ConformalMap map;
    map.u0 = 1.0;
    map.gamma = potential.m() + 1.0;
    map.d = std::numbers::pi / (2.0 * map.gamma);
    map.kind = MapKind::plain;
    return map;
}

ConformalMap map_single_singularity(const RationalPotential& potential) {
    const auto sing = potential.singularities();
    if (sing.size() != 1) {
        throw std::invalid_argument("map_single_singularity: potential must have exactly one singularity pair");
    }
    ConformalMap map;
    map.gamma = potential.m() + 1.0;
    map.d = std::numbers::pi / (2.0 * map.gamma);
    map.u0 = sing[0].eps / std::sin(map.d);
    // root-finder noise in the real part would otherwise produce a
    // spurious constant shift
    if (std::abs(sing[0].delta) > 1e-12 * (1.0 + sing[0].eps)) {
        map.adjust = {sing[0].delta};
    }
    map.preimages = {0.0};
    map.kind = MapKind::single;
    const Complex got = phi_complex(map, Complex(0.0, map.d));
    map.residuals = {std::abs(got - Complex(sing[0].delta, sing[0].eps))};
    return map;
}

namespace {

// Constraint values phi(x_k + i d) - (delta_k + i eps_k), interleaved
// (Re_1, Im_1, Re_2, Im_2, ...). y = (u0, u_1..u_n, x_1..x_n).
Eigen::VectorXd constraint_values(const Eigen::VectorXd& y, double d,
                                  const std::vector<Singularity>& sing) {
    const int n = static_cast<int>(sing.size());
    ConformalMap m;
    m.u0 = y(0);
    m.adjust.assign(y.data() + 1, y.data() + 1 + n);
    Eigen::VectorXd g(2 * n);
    for (int k = 0; k < n; ++k) {
        const Complex z(y(1 + n + k), d);
        const Complex r = phi_complex(m, z) - Complex(sing[k].delta, sing[k].eps);
        g(2 * k) = r.real();
        g(2 * k + 1) = r.imag();
    }
    return g;
}

// Jacobian of the constraints with respect to y, computed analytically.
Eigen::MatrixXd constraint_jacobian(const Eigen::VectorXd& y, double d,
                                    const std::vector<Singularity>& sing) {
    const int n = static_cast<int>(sing.size());
    ConformalMap m;
    m.u0 = y(0);
    m.adjust.assign(y.data() + 1, y.data() + 1 + n);
    Eigen::MatrixXd J(2 * n, 2 * n + 1);
    J.setZero();
    for (int k = 0; k < n; ++k) {
        const Complex z(y(1 + n + k), d);
        const Complex dphi_du0 = std::sinh(z);
        J(2 * k, 0) = dphi_du0.real();
        J(2 * k + 1, 0) = dphi_du0.imag();
        Complex zp(1.0, 0.0);
        for (int j = 0; j < n; ++j) {
            J(2 * k, 1 + j) = zp.real();
            J(2 * k + 1, 1 + j) = zp.imag();
            zp *= z;
        }
        // d phi / dx_k = phi'(z)
        Complex dphi = m.u0 * std::cosh(z);
        Complex zq(1.0, 0.0);
        for (int j = 1; j < n; ++j) {
            dphi += m.adjust[j] * static_cast<double>(j) * zq;
            zq *= z;
        }
        J(2 * k, 1 + n + k) = dphi.real();
        J(2 * k + 1, 1 + n + k) = dphi.imag();
    }
    return J;
}

// KKT residual for "maximize u0 subject to the constraints":
// [ G(y) ; e_{u0} - J_G(y)^T mu ].
Eigen::VectorXd kkt_residual(const Eigen::VectorXd& v, int n, double d,
                             const std::vector<Singularity>& sing) {
    const Eigen::VectorXd y = v.head(2 * n + 1);
    const Eigen::VectorXd mu = v.tail(2 * n);
    const Eigen::MatrixXd J = constraint_jacobian(y, d, sing);
    Eigen::VectorXd r(4 * n + 1);
    r.head(2 * n) = constraint_values(y, d, sing);
    Eigen::VectorXd grad = Eigen::VectorXd::Zero(2 * n + 1);
    grad(0) = 1.0;
    r.tail(2 * n + 1) = grad - J.transpose() * mu;
    return r;
}

bool solve_kkt(Eigen::VectorXd& v, int n, double d,
               const std::vector<Singularity>& sing) {
    const int dim = 4 * n + 1;
    Eigen::VectorXd r = kkt_residual(v, n, d, sing);
    for (int iter = 0; iter < 200; ++iter) {
        if (constraint_values(v.head(2 * n + 1), d, sing).lpNorm<Eigen::Infinity>() < 1e-11
            && r.lpNorm<Eigen::Infinity>() < 1e-9) {
            return true;
        }
        // finite-difference Jacobian of the KKT residual
        Eigen::MatrixXd Jr(dim, dim);
        for (int j = 0; j < dim; ++j) {
            const double step = 1e-7 * std::max(1.0, std::abs(v(j)));
            Eigen::VectorXd vp = v, vm = v;
            vp(j) += step;
            vm(j) -= step;
            Jr.col(j) = (kkt_residual(vp, n, d, sing) - kkt_residual(vm, n, d, sing)) / (2.0 * step);
        }
        const Eigen::VectorXd dv = Jr.colPivHouseholderQr().solve(-r);
        if (!dv.allFinite()) {
            return false;
        }
        double alpha = 1.0;
        const double rn = r.norm();
        bool stepped = false;
        while (alpha >= 1.0 / 1024.0) {
            Eigen::VectorXd vn = v + alpha * dv;
            Eigen::VectorXd rnew = kkt_residual(vn, n, d, sing);
            if (rnew.allFinite() && rnew.norm() < (1.0 - 1e-4 * alpha) * rn) {
                v = vn;
                r = rnew;
                stepped = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!stepped) {
            return false;
        }
    }
    return false;
}

bool strictly_increasing_on_grid(const ConformalMap& map) {
    double prev = phi_derivatives(map, -6.0).phi;
    for (int i = 1; i <= 240; ++i) {
        const double t = -6.0 + i * 0.05;
        const PhiDerivatives p = phi_derivatives(map, t);
        if (!(p.phi > prev) || !(p.d1 > 0.0)) {
            return false;
        }
        prev = p.phi;
    }
    return true;
}

ConformalMap fallback_map(const RationalPotential& potential, std::string reason) {
    ConformalMap map = map_plain_sinh(potential);
    map.kind = MapKind::fallback;
    map.fallback_reason = std::move(reason);
    return map;
}

} // namespace

ConformalMap map_multi_singularity(const RationalPotential& potential) {
    const auto sing = potential.singularities();
    if (sing.empty()) {
        throw std::invalid_argument("map_multi_singularity: potential has no singularities");
    }
    const double gamma = potential.m() + 1.0;
    const double d = std::numbers::pi / (2.0 * gamma);

    double min_eps = sing[0].eps;
    double max_eps = sing[0].eps;
    for (const Singularity& s : sing) {
        min_eps = std::min(min_eps, s.eps);
        max_eps = std::max(max_eps, s.eps);
    }
    if (min_eps < 1e-3) {
        return fallback_map(potential, "singularity too close to the real axis");
    }

    const int n = static_cast<int>(sing.size());
    if (n == 1) {
        // distinct singularities collapsed to one; the analytic map applies
        ConformalMap map;
        map.gamma = gamma;
        map.d = d;
        map.u0 = sing[0].eps / std::sin(d);
        map.adjust.assign(1, sing[0].delta);
        map.preimages = {0.0};
        map.kind = MapKind::multi;
        map.residuals = {std::abs(phi_complex(map, Complex(0.0, d))
                                  - Complex(sing[0].delta, sing[0].eps))};
        return map;
    }

    // Homotopy: solve first with all imaginary parts lifted to max_eps,
    // then relax toward the true singularities, warm-starting each stage.
    const double stages[3] = {0.0, 0.5, 1.0};
    Eigen::VectorXd v(4 * n + 1);
    bool have_start = false;
    std::string failure = "solver did not converge";
    for (double s : stages) {
        std::vector<Singularity> target = sing;
        for (Singularity& t : target) {
            t.eps = max_eps + s * (t.eps - max_eps);
        }
        if (!have_start) {
            double u0 = target[0].eps;
            for (const Singularity& t : target) {
                u0 = std::min(u0, t.eps);
            }
            u0 /= std::sin(d);
            v.setZero();
            v(0) = u0;
            for (int k = 0; k < n; ++k) {
                v(1 + n + k) = std::asinh(target[k].delta / u0);
            }
            // multipliers from the least-squares stationarity system
            const Eigen::MatrixXd J = constraint_jacobian(v.head(2 * n + 1), d, target);
            Eigen::VectorXd grad = Eigen::VectorXd::Zero(2 * n + 1);
            grad(0) = 1.0;
            v.tail(2 * n) = J.transpose().colPivHouseholderQr().solve(grad);
            have_start = true;
        }
        if (!solve_kkt(v, n, d, target)) {
            failure = "KKT iteration failed at homotopy stage";
            have_start = false;  // restart cold at the next stage
        }
    }
    if (!have_start) {
        return fallback_map(potential, failure);
    }

    ConformalMap map;
    map.gamma = gamma;
    map.d = d;
    map.u0 = v(0);
    map.adjust.assign(v.data() + 1, v.data() + 1 + n);
    map.preimages.assign(v.data() + 1 + n, v.data() + 1 + 2 * n);
    map.kind = MapKind::multi;
    map.residuals.resize(n);
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
        const Complex got = phi_complex(map, Complex(map.preimages[k], d));
        map.residuals[k] = std::abs(got - Complex(sing[k].delta, sing[k].eps));
        worst = std::max(worst, map.residuals[k]);
    }
    if (!(map.u0 > 0.0)) {
        return fallback_map(potential, "solver produced nonpositive u0");
    }
    if (worst > 1e-8) {
        return fallback_map(potential, "constraint residual above tolerance");
    }
    if (!strictly_increasing_on_grid(map)) {
        return fallback_map(potential, "map not strictly increasing on the real line");
    }
    return map;
}

double transformed_potential(const ConformalMap& map,
                             const RationalPotential& potential, double x) {
    const PhiDerivatives p = phi_derivatives(map, x);
    const double ratio = p.d2 / p.d1;
    return -p.d3 / (2.0 * p.d1) + 0.75 * ratio * ratio
           + p.d1 * p.d1 * potential.evaluate(p.phi);
}

} // namespace descm

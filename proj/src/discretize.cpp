#include "descm/discretize.hpp"

#include <cmath>
#include <stdexcept>

namespace descm {

double lambert_w(double x) {
    if (x < 0.0) {
        throw std::domain_error("lambert_w: argument must be nonnegative");
    }
    if (x == 0.0) {
        return 0.0;
    }
    // initial guess: series for small x, asymptotic log form otherwise
    double w = (x < 1.0) ? x * (1.0 - x) : std::log(x) - std::log(std::log(x) + 1.0);
    if (w < 0.0) w = 0.0;
    for (int i = 0; i < 60; ++i) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        // Halley step
        const double denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0);
        const double dw = f / denom;
        w -= dw;
        if (std::abs(dw) <= 1e-16 * (1.0 + std::abs(w))) {
            break;
        }
    }
    return w;
}

double mesh_size(int N, double gamma, double B, double d) {
    if (N < 1 || gamma <= 0.0 || B <= 0.0 || d <= 0.0) {
        throw std::invalid_argument("mesh_size: N >= 1 and gamma, B, d > 0 required");
    }
    const double pi = 3.14159265358979323846;
    return lambert_w(pi * d * gamma * N / B) / (gamma * N);
}

GeneralizedEigenSystem build_system(const RationalPotential& potential,
                                    const ConformalMap& map, int N) {
    GeneralizedEigenSystem sys;
    sys.N = N;
    const auto [gamma, B] = decay_constants(potential, map);
    sys.h = mesh_size(std::max(N, 1), gamma, B, map.d);
    sys.delta2 = delta2_stencil(N);
    sys.vtilde.resize(2 * N + 1);
    sys.d2.resize(2 * N + 1);
    for (int k = -N; k <= N; ++k) {
        const double x = k * sys.h;
        sys.vtilde[k + N] = transformed_potential(map, potential, x);
        const double dphi = phi_derivatives(map, x).d1;
        sys.d2[k + N] = dphi * dphi;
    }
    return sys;
}

} // namespace descm

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "descm/potential.hpp"

namespace descm {

enum class MapKind { plain, single, multi, fallback };

std::string to_string(MapKind kind);

// Double-exponential conformal map phi(t) = u0 sinh(t) + sum_j u_j t^{j-1}.
// For singularity-aware maps the pre-images x_k satisfy
// phi(x_k + i d) = delta_k + i eps_k with d = pi/(2 gamma).
struct ConformalMap {
    double u0 = 1.0;
    std::vector<double> adjust;     // u_1 .. u_n
    double gamma = 2.0;
    double d = 0.0;                 // strip half-width pi/(2 gamma)
    std::vector<double> preimages;  // x_k, empty for analytic maps
    MapKind kind = MapKind::plain;
    std::vector<double> residuals;  // |phi(x_k + i d) - (delta_k + i eps_k)|
    std::string fallback_reason;
};

struct PhiDerivatives {
    double phi;
    double d1;
    double d2;
    double d3;
};

// Analytic derivatives of phi through third order.
PhiDerivatives phi_derivatives(const ConformalMap& map, double t);

Complex phi_complex(const ConformalMap& map, Complex z);

// gamma = m+1 and B = (sqrt(omega)/(m+1)) (u0/2)^{m+1}: the double
// exponential decay constants of the transformed solution.
std::pair<double, double> decay_constants(const RationalPotential& potential,
                                          const ConformalMap& map);

// Basic non-optimal map phi(t) = sinh(t).
ConformalMap map_plain_sinh(const RationalPotential& potential);

// Analytic optimal map for a single singularity pair delta + i eps:
// u0 = eps / sin(pi/(2 gamma)), constant shift u1 = delta, pre-image 0.
ConformalMap map_single_singularity(const RationalPotential& potential);

// Optimal map for n >= 2 singularity pairs: maximizes u0 subject to the
// pre-image constraints. Returns a fallback-tagged plain sinh map when the
// solve fails; the reason is recorded on the map.
ConformalMap map_multi_singularity(const RationalPotential& potential);

// Effective potential after the symmetrizing substitution:
// -phi'''/(2 phi') + (3/4)(phi''/phi')^2 + (phi')^2 V(phi).
double transformed_potential(const ConformalMap& map,
                             const RationalPotential& potential, double x);

} // namespace descm

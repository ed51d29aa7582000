#pragma once

#include <vector>

#include "descm/confmap.hpp"
#include "descm/sinc.hpp"

namespace descm {

// Principal branch of the Lambert W function on [0, inf):
// returns w >= 0 with w e^w = x. Throws on negative input.
double lambert_w(double x);

// Optimal mesh size h = W(pi d gamma N / B) / (gamma N).
double mesh_size(int N, double gamma, double B, double d);

// H = -(1/h^2) delta^(2) + diag(Vtilde(kh)), D^2 = diag(phi'(kh)^2),
// collocated at x_k = kh for k = -N..N. H is held as the raw Toeplitz
// stencil plus a diagonal; index 0 corresponds to k = -N.
struct GeneralizedEigenSystem {
    int N = 0;
    double h = 1.0;
    ToeplitzSymmetric delta2;
    std::vector<double> vtilde;  // transformed potential at the collocation points
    std::vector<double> d2;      // diagonal of D^2

    int size() const { return 2 * N + 1; }
    double h_entry(int j, int k) const {
        double v = -delta2.entry(j, k) / (h * h);
        if (j == k) v += vtilde[k];
        return v;
    }
};

GeneralizedEigenSystem build_system(const RationalPotential& potential,
                                    const ConformalMap& map, int N);

} // namespace descm

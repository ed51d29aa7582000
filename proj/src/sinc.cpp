#include "descm/sinc.hpp"

#include <cmath>
#include <numbers>

namespace descm {

double sinc(double z) {
    const double t = std::numbers::pi * z;
    if (std::abs(z) < 1e-4) {
        const double t2 = t * t;
        return 1.0 - t2 / 6.0 * (1.0 - t2 / 20.0);
    }
    return std::sin(t) / t;
}

double sinc_basis(int j, double h, double x) {
    return sinc(x / h - j);
}

ToeplitzSymmetric delta2_stencil(int N) {
    ToeplitzSymmetric t;
    t.first_row.resize(2 * N + 1);
    t.first_row[0] = -std::numbers::pi * std::numbers::pi / 3.0;
    for (int r = 1; r <= 2 * N; ++r) {
        const double sign = (r % 2 == 0) ? 1.0 : -1.0;
        t.first_row[r] = -2.0 * sign / (static_cast<double>(r) * r);
    }
    return t;
}

} // namespace descm

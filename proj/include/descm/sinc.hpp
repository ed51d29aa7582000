#pragma once

#include <cstdlib>
#include <vector>

namespace descm {

// Symmetric Toeplitz matrix of size (2N+1) stored by its first row.
struct ToeplitzSymmetric {
    std::vector<double> first_row; // t_0 .. t_{2N}
    int size() const { return static_cast<int>(first_row.size()); }
    // j, k are 0-based matrix indices
    double entry(int j, int k) const { return first_row[std::abs(j - k)]; }
};

// sin(pi z)/(pi z), continuous through z = 0 (series branch for small |z|)
double sinc(double z);

// Translated, scaled Sinc basis S(j,h)(x) = sinc(x/h - j)
double sinc_basis(int j, double h, double x);

// Second-derivative collocation stencil delta^(2)_{j,k} = h^2 S(j,h)''(kh),
// depending only on |j-k|: t_0 = -pi^2/3, t_r = -2(-1)^r/r^2.
ToeplitzSymmetric delta2_stencil(int N);

} // namespace descm

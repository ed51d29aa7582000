#pragma once

#include <vector>

#include "descm/discretize.hpp"

namespace descm {

struct Spectrum {
    std::vector<double> eigenvalues;  // ascending
    int N = 0;
    double h = 1.0;
};

// The `count` smallest generalized eigenvalues of (H, D^2), computed via
// the exact diagonal reduction A = D^{-1} H D^{-1} followed by a dense
// symmetric eigensolve.
Spectrum generalized_eigs(const GeneralizedEigenSystem& system, int count);

// Generalized eigenvector for the index-th smallest eigenvalue, normalized
// so v^T D^2 v = 1.
std::vector<double> eigenvector(const GeneralizedEigenSystem& system, int index);

} // namespace descm

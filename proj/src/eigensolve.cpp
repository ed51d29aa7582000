#include "descm/eigensolve.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace descm {

namespace {

Eigen::MatrixXd reduced_matrix(const GeneralizedEigenSystem& sys) {
    const int n = sys.size();
    Eigen::VectorXd dinv(n);
    for (int i = 0; i < n; ++i) {
        if (!(sys.d2[i] > 0.0)) {
            throw std::invalid_argument("generalized_eigs: D^2 must be positive");
        }
        dinv(i) = 1.0 / std::sqrt(sys.d2[i]);
    }
    Eigen::MatrixXd a(n, n);
    for (int j = 0; j < n; ++j) {
        for (int k = j; k < n; ++k) {
            const double v = sys.h_entry(j, k) * dinv(j) * dinv(k);
            a(j, k) = v;
            a(k, j) = v;
        }
    }
    return a;
}

} // namespace

Spectrum generalized_eigs(const GeneralizedEigenSystem& system, int count) {
    const int n = system.size();
    if (count < 1 || count > n) {
        throw std::invalid_argument("generalized_eigs: count out of range");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(reduced_matrix(system),
                                                          Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("generalized_eigs: eigensolver failed to converge");
    }
    Spectrum s;
    s.N = system.N;
    s.h = system.h;
    s.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + count);
    return s;
}

std::vector<double> eigenvector(const GeneralizedEigenSystem& system, int index) {
    const int n = system.size();
    if (index < 0 || index >= n) {
        throw std::invalid_argument("eigenvector: index out of range");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(reduced_matrix(system));
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigenvector: eigensolver failed to converge");
    }
    // y is a unit eigenvector of A = D^{-1} H D^{-1}; v = D^{-1} y then
    // satisfies v^T D^2 v = y^T y = 1.
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) {
        v[i] = solver.eigenvectors()(i, index) / std::sqrt(system.d2[i]);
    }
    return v;
}

} // namespace descm

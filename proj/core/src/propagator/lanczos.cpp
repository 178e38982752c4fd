#include "mzsplit/propagator/lanczos.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>

namespace mz::propagator {

Eigen::VectorXcd lanczosExp(const LinearOperator& a, const Eigen::VectorXcd& v, int iterations) {
    if (iterations < 1) throw std::invalid_argument("Lanczos needs at least one iteration");
    const double beta0 = v.norm();
    if (beta0 == 0.0) return v;
    const auto n = v.size();
    const int maxDim = static_cast<int>(std::min<Eigen::Index>(iterations, n));

    std::vector<Eigen::VectorXcd> basis;
    basis.reserve(static_cast<std::size_t>(maxDim));
    basis.push_back(v / beta0);
    std::vector<double> alpha;
    std::vector<double> beta;
    double scale = 0;

    for (int j = 0; j < maxDim; ++j) {
        Eigen::VectorXcd w = std::complex<double>(0, 1) * a(basis[static_cast<std::size_t>(j)]);
        const double aj = basis[static_cast<std::size_t>(j)].dot(w).real();
        alpha.push_back(aj);
        // two passes of Gram-Schmidt against the whole basis
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& q : basis) w -= q.dot(w) * q;
        const double bj = w.norm();
        scale = std::max({scale, std::abs(aj), bj});
        if (j + 1 == maxDim) break;
        if (bj <= 1e-13 * scale) break;  // invariant subspace found
        beta.push_back(bj);
        basis.push_back(w / bj);
    }

    const int k = static_cast<int>(alpha.size());
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k, k);
    for (int i = 0; i < k; ++i) {
        t(i, i) = alpha[static_cast<std::size_t>(i)];
        if (i + 1 < k) t(i, i + 1) = t(i + 1, i) = beta[static_cast<std::size_t>(i)];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(t);
    const Eigen::MatrixXd& q = eig.eigenvectors();
    Eigen::VectorXcd phases(k);
    for (int i = 0; i < k; ++i) phases[i] = q(0, i) * std::exp(std::complex<double>(0, -eig.eigenvalues()[i]));
    const Eigen::VectorXcd y = q.cast<std::complex<double>>() * phases;

    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n);
    for (int i = 0; i < k; ++i) out += y[i] * basis[static_cast<std::size_t>(i)];
    return beta0 * out;
}

grid::WaveFunction lanczosExpApply(const LinearOperator& a, const grid::WaveFunction& v, int iterations) {
    return grid::WaveFunction(v.grid, lanczosExp(a, v.values, iterations));
}

}  // namespace mz::propagator

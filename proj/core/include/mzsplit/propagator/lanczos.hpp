#pragma once

#include <functional>

#include <Eigen/Dense>

#include "mzsplit/grid/grid.hpp"

namespace mz::propagator {

using LinearOperator = std::function<Eigen::VectorXcd(const Eigen::VectorXcd&)>;

/// e^{A} v for skew-Hermitian A from `iterations` Lanczos steps on the Hermitian
/// H = iA (full reorthogonalization): beta V exp(-i T) e1. On breakdown the
/// exact exponential in the invariant subspace is returned.
Eigen::VectorXcd lanczosExp(const LinearOperator& a, const Eigen::VectorXcd& v, int iterations);

grid::WaveFunction lanczosExpApply(const LinearOperator& a, const grid::WaveFunction& v, int iterations);

}  // namespace mz::propagator

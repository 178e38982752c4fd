#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <stdexcept>

#include <Eigen/Dense>

#include "mzsplit/grid/fourier.hpp"

namespace mz::grid {

using Complex = std::complex<double>;

/// M = 2N+1 equispaced nodes x_n = n/(N+1/2), n = -N..N, on the period [-1, 1).
class SpatialGrid {
public:
    static std::shared_ptr<const SpatialGrid> create(std::size_t halfWidth);
    /// M must be odd.
    static std::shared_ptr<const SpatialGrid> withPoints(std::size_t points);

    std::size_t halfWidth() const noexcept { return n_; }
    std::size_t size() const noexcept { return 2 * n_ + 1; }
    /// Node at array index j (j = 0 is x = -N/(N+1/2)).
    double node(std::size_t j) const noexcept {
        return (static_cast<double>(j) - static_cast<double>(n_)) / (static_cast<double>(n_) + 0.5);
    }
    const Eigen::VectorXd& nodes() const noexcept { return nodes_; }

    /// Signed mode number m in -N..N stored in DFT bin q.
    long modeOfBin(std::size_t q) const noexcept {
        return q <= n_ ? static_cast<long>(q) : static_cast<long>(q) - static_cast<long>(size());
    }
    std::size_t binOfMode(long m) const noexcept {
        return m >= 0 ? static_cast<std::size_t>(m) : static_cast<std::size_t>(m + static_cast<long>(size()));
    }

    const FourierPlan& plan() const noexcept { return *plan_; }

private:
    explicit SpatialGrid(std::size_t halfWidth);
    std::size_t n_;
    Eigen::VectorXd nodes_;
    std::shared_ptr<const FourierPlan> plan_;
};

using GridPtr = std::shared_ptr<const SpatialGrid>;

class GridMismatchError : public std::invalid_argument {
public:
    GridMismatchError(std::size_t a, std::size_t b);
};

/// u_n ~ u(x_n).
struct WaveFunction {
    GridPtr grid;
    Eigen::VectorXcd values;

    WaveFunction() = default;
    explicit WaveFunction(GridPtr g) : grid(std::move(g)), values(Eigen::VectorXcd::Zero(grid->size())) {}
    WaveFunction(GridPtr g, Eigen::VectorXcd v);
    std::size_t size() const noexcept { return static_cast<std::size_t>(values.size()); }
};

/// Real samples f(x_n) of a scalar field.
struct GridField {
    GridPtr grid;
    Eigen::VectorXd values;

    GridField() = default;
    explicit GridField(GridPtr g) : grid(std::move(g)), values(Eigen::VectorXd::Zero(grid->size())) {}
    GridField(GridPtr g, Eigen::VectorXd v);
    std::size_t size() const noexcept { return static_cast<std::size_t>(values.size()); }
};

void requireSameGrid(const SpatialGrid& a, const SpatialGrid& b);

/// Raw DFT bins of samples (bin q holds mode modeOfBin(q), unnormalized).
Eigen::VectorXcd toBins(const SpatialGrid& grid, const Eigen::VectorXcd& samples);
Eigen::VectorXcd fromBins(const SpatialGrid& grid, const Eigen::VectorXcd& bins);

/// Multiplies bin q by multiplier[q] and transforms back.
WaveFunction applyFourierMultiplier(const WaveFunction& v, const Eigen::VectorXcd& multiplier);

/// Spectral d^order/dx^order: mode m multiplied by (i pi m)^order.
WaveFunction fourierDifferentiate(const WaveFunction& v, int order);
/// Real in, real out. The imaginary residue is checked (<= 1e-12 relative to
/// the operator bound) and dropped.
GridField fourierDifferentiate(const GridField& f, int order);

/// 1/2 (f K^k v + K^k (f v)), K the spectral derivative.
WaveFunction applyJordan(int k, const GridField& f, const WaveFunction& v);

/// sqrt(2/M) times the Euclidean norm.
double l2Norm(const WaveFunction& v);
double linfNorm(const WaveFunction& v);

/// Trigonometric interpolation onto a grid of odd size newPoints (zero-padding
/// or mode truncation).
WaveFunction resample(const WaveFunction& v, std::size_t newPoints);

/// (delta pi)^{-1/4} exp(i k0 (x - x0)/delta - (x - x0)^2 / (2 delta)).
WaveFunction gaussianWavePacket(const GridPtr& grid, double x0, double k0, double delta);

/// Fraction of spectral mass in the top `fraction` of |m| (largest modes).
double highModeMass(const WaveFunction& v, double fraction = 0.1);

}  // namespace mz::grid

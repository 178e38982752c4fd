#include "mzsplit/grid/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace mz::grid {

SpatialGrid::SpatialGrid(std::size_t halfWidth)
    : n_(halfWidth), nodes_(2 * halfWidth + 1), plan_(FourierPlan::forSize(2 * halfWidth + 1)) {
    for (std::size_t j = 0; j < size(); ++j) nodes_[static_cast<Eigen::Index>(j)] = node(j);
}

std::shared_ptr<const SpatialGrid> SpatialGrid::create(std::size_t halfWidth) {
    return std::shared_ptr<const SpatialGrid>(new SpatialGrid(halfWidth));
}

std::shared_ptr<const SpatialGrid> SpatialGrid::withPoints(std::size_t points) {
    if (points % 2 == 0) throw std::invalid_argument("grid size must be odd, got " + std::to_string(points));
    return create(points / 2);
}

GridMismatchError::GridMismatchError(std::size_t a, std::size_t b)
    : std::invalid_argument("grid mismatch: " + std::to_string(a) + " vs " + std::to_string(b) + " points") {}

void requireSameGrid(const SpatialGrid& a, const SpatialGrid& b) {
    if (a.size() != b.size()) throw GridMismatchError(a.size(), b.size());
}

WaveFunction::WaveFunction(GridPtr g, Eigen::VectorXcd v) : grid(std::move(g)), values(std::move(v)) {
    if (static_cast<std::size_t>(values.size()) != grid->size())
        throw GridMismatchError(grid->size(), static_cast<std::size_t>(values.size()));
}

GridField::GridField(GridPtr g, Eigen::VectorXd v) : grid(std::move(g)), values(std::move(v)) {
    if (static_cast<std::size_t>(values.size()) != grid->size())
        throw GridMismatchError(grid->size(), static_cast<std::size_t>(values.size()));
}

Eigen::VectorXcd toBins(const SpatialGrid& grid, const Eigen::VectorXcd& samples) {
    Eigen::VectorXcd out(samples.size());
    grid.plan().forward(samples.data(), out.data());
    return out;
}

Eigen::VectorXcd fromBins(const SpatialGrid& grid, const Eigen::VectorXcd& bins) {
    Eigen::VectorXcd out(bins.size());
    grid.plan().backward(bins.data(), out.data());
    out /= static_cast<double>(grid.size());
    return out;
}

WaveFunction applyFourierMultiplier(const WaveFunction& v, const Eigen::VectorXcd& multiplier) {
    Eigen::VectorXcd bins = toBins(*v.grid, v.values);
    bins.array() *= multiplier.array();
    return WaveFunction(v.grid, fromBins(*v.grid, bins));
}

namespace {

Eigen::VectorXcd derivativeSymbol(const SpatialGrid& grid, int order) {
    Eigen::VectorXcd symbol(static_cast<Eigen::Index>(grid.size()));
    for (std::size_t q = 0; q < grid.size(); ++q) {
        const Complex ik(0.0, std::numbers::pi * static_cast<double>(grid.modeOfBin(q)));
        symbol[static_cast<Eigen::Index>(q)] = order == 0 ? Complex(1.0) : std::pow(ik, order);
    }
    return symbol;
}

}  // namespace

WaveFunction fourierDifferentiate(const WaveFunction& v, int order) {
    if (order < 0) throw std::invalid_argument("derivative order must be nonnegative");
    if (order == 0) return v;
    return applyFourierMultiplier(v, derivativeSymbol(*v.grid, order));
}

GridField fourierDifferentiate(const GridField& f, int order) {
    if (order < 0) throw std::invalid_argument("derivative order must be nonnegative");
    if (order == 0) return f;
    WaveFunction complexResult = fourierDifferentiate(WaveFunction(f.grid, f.values.cast<Complex>()), order);
    const double bound = std::pow(std::numbers::pi * static_cast<double>(std::max<std::size_t>(f.grid->halfWidth(), 1)),
                                  order) *
                         std::max(f.values.cwiseAbs().maxCoeff(), 1e-300);
    const double residue = complexResult.values.imag().cwiseAbs().maxCoeff();
    if (residue > 1e-12 * bound)
        throw std::logic_error("real spectral derivative left imaginary residue " + std::to_string(residue));
    return GridField(f.grid, complexResult.values.real());
}

WaveFunction applyJordan(int k, const GridField& f, const WaveFunction& v) {
    requireSameGrid(*f.grid, *v.grid);
    if (k < 0) throw std::invalid_argument("height must be nonnegative");
    if (k == 0) return WaveFunction(v.grid, (f.values.cast<Complex>().array() * v.values.array()).matrix());
    const WaveFunction kv = fourierDifferentiate(v, k);
    const WaveFunction fv(v.grid, (f.values.cast<Complex>().array() * v.values.array()).matrix());
    const WaveFunction kfv = fourierDifferentiate(fv, k);
    return WaveFunction(v.grid, 0.5 * ((f.values.cast<Complex>().array() * kv.values.array()).matrix() + kfv.values));
}

double l2Norm(const WaveFunction& v) {
    return std::sqrt(2.0 / static_cast<double>(v.size())) * v.values.norm();
}

double linfNorm(const WaveFunction& v) {
    return v.size() == 0 ? 0.0 : v.values.cwiseAbs().maxCoeff();
}

WaveFunction resample(const WaveFunction& v, std::size_t newPoints) {
    auto target = SpatialGrid::withPoints(newPoints);
    const SpatialGrid& src = *v.grid;
    if (target->size() == src.size()) return WaveFunction(target, v.values);
    const Eigen::VectorXcd bins = toBins(src, v.values);
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(target->size()));
    const long keep = static_cast<long>(std::min(src.halfWidth(), target->halfWidth()));
    const double mSrc = static_cast<double>(src.size());
    const double mDst = static_cast<double>(target->size());
    const double nSrc = static_cast<double>(src.halfWidth());
    const double nDst = static_cast<double>(target->halfWidth());
    for (long m = -keep; m <= keep; ++m) {
        // bins carry the node offset exp(-2 pi i m N / M); undo and reapply for the new grid
        const double phase = 2.0 * std::numbers::pi * static_cast<double>(m) * (nSrc / mSrc - nDst / mDst);
        const Complex c = bins[static_cast<Eigen::Index>(src.binOfMode(m))] * std::polar(mDst / mSrc, phase);
        out[static_cast<Eigen::Index>(target->binOfMode(m))] = c;
    }
    return WaveFunction(target, fromBins(*target, out));
}

WaveFunction gaussianWavePacket(const GridPtr& grid, double x0, double k0, double delta) {
    if (!(delta > 0)) throw std::invalid_argument("wave packet width delta must be positive");
    WaveFunction u(grid);
    const double amp = std::pow(delta * std::numbers::pi, -0.25);
    for (std::size_t j = 0; j < grid->size(); ++j) {
        const double y = grid->node(j) - x0;
        u.values[static_cast<Eigen::Index>(j)] = amp * std::exp(Complex(-y * y / (2.0 * delta), k0 * y / delta));
    }
    return u;
}

double highModeMass(const WaveFunction& v, double fraction) {
    const SpatialGrid& g = *v.grid;
    const Eigen::VectorXcd bins = toBins(g, v.values);
    const double total = bins.squaredNorm();
    if (total == 0) return 0.0;
    const long n = static_cast<long>(g.halfWidth());
    const long cutoff = n - static_cast<long>(std::ceil(fraction * static_cast<double>(n)));
    double tail = 0;
    for (std::size_t q = 0; q < g.size(); ++q)
        if (std::abs(g.modeOfBin(q)) > cutoff) tail += std::norm(bins[static_cast<Eigen::Index>(q)]);
    return tail / total;
}

}  // namespace mz::grid

#include "mzsplit/reference/reference.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <cmath>
#include <numbers>
#include <vector>

namespace mz::reference {

namespace {

using grid::Complex;

Eigen::VectorXcd kineticMultiplier(const grid::SpatialGrid& g, double tau, double eps) {
    Eigen::VectorXcd mult(static_cast<Eigen::Index>(g.size()));
    for (std::size_t q = 0; q < g.size(); ++q) {
        const double m = static_cast<double>(g.modeOfBin(q));
        mult[static_cast<Eigen::Index>(q)] = std::exp(Complex(0, -tau * eps * std::numbers::pi * std::numbers::pi * m * m));
    }
    return mult;
}

Eigen::VectorXcd potentialPhase(const potential::PotentialModel& model, double t, double tau, double eps,
                                const grid::GridPtr& g) {
    const auto v = potential::evaluateOnGrid(model, t, g);
    return (Complex(0, -tau / eps) * v.values.cast<Complex>().array()).exp().matrix();
}

}  // namespace

grid::WaveFunction strangStep(const grid::WaveFunction& u, double t, double hR, const potential::PotentialModel& model,
                              double eps) {
    if (!(hR > 0)) throw std::invalid_argument("reference step must be positive");
    const auto half = kineticMultiplier(*u.grid, 0.5 * hR, eps);
    auto w = grid::applyFourierMultiplier(u, half);
    w.values.array() *= potentialPhase(model, t + 0.5 * hR, hR, eps, u.grid).array();
    return grid::applyFourierMultiplier(w, half);
}

grid::WaveFunction strangEvolve(const grid::WaveFunction& u0, double t0, double T, long steps,
                                const potential::PotentialModel& model, double eps) {
    if (steps <= 0 || T <= t0) return u0;
    const auto& g = *u0.grid;
    const double tau = (T - t0) / static_cast<double>(steps);
    const auto half = kineticMultiplier(g, 0.5 * tau, eps);
    const auto full = kineticMultiplier(g, tau, eps);
    Eigen::VectorXcd frozen;
    if (model.timeIndependent()) frozen = potentialPhase(model, t0, tau, eps, u0.grid);

    Eigen::VectorXcd bins = grid::toBins(g, u0.values);
    bins.array() *= half.array();
    for (long n = 0; n < steps; ++n) {
        Eigen::VectorXcd values = grid::fromBins(g, bins);
        const double mid = t0 + (static_cast<double>(n) + 0.5) * tau;
        values.array() *= model.timeIndependent() ? frozen.array()
                                                  : potentialPhase(model, mid, tau, eps, u0.grid).array();
        bins = grid::toBins(g, values);
        bins.array() *= (n + 1 == steps ? half : full).array();
    }
    return grid::WaveFunction(u0.grid, grid::fromBins(g, bins));
}

ErrorNorms errorAgainstReference(const grid::WaveFunction& u, const grid::WaveFunction& uRef) {
    const grid::WaveFunction onGrid =
        uRef.size() == u.size() ? uRef : grid::resample(uRef, u.size());
    const grid::WaveFunction diff(u.grid, u.values - onGrid.values);
    return {grid::l2Norm(diff), grid::linfNorm(diff)};
}

namespace {

/// Romberg table over step halving; symmetric Strang has an even error expansion.
grid::WaveFunction extrapolatedStrang(const grid::WaveFunction& u0, double t0, double T, long steps,
                                      const potential::PotentialModel& model, double eps, int levels,
                                      double& estimate) {
    std::vector<Eigen::VectorXcd> row;
    for (int i = 0; i <= levels; ++i) {
        std::vector<Eigen::VectorXcd> next;
        next.push_back(strangEvolve(u0, t0, T, steps << i, model, eps).values);
        for (int j = 1; j <= i; ++j) {
            const double f = std::pow(4.0, j) - 1.0;
            next.push_back(next[static_cast<std::size_t>(j - 1)] +
                           (next[static_cast<std::size_t>(j - 1)] - row[static_cast<std::size_t>(j - 1)]) / f);
        }
        row = std::move(next);
    }
    estimate = 0;
    if (levels > 0) {
        const grid::WaveFunction d(u0.grid, row[static_cast<std::size_t>(levels)] - row[static_cast<std::size_t>(levels - 1)]);
        estimate = grid::l2Norm(d);
    }
    return grid::WaveFunction(u0.grid, row.back());
}

}  // namespace

ReferenceResult solveReference(const potential::PotentialModel& model, const InitialState& u0, double t0, double T,
                               const ReferenceConfig& cfg) {
    if (cfg.MR % 2 == 0 || cfg.MR == 0) throw std::invalid_argument("reference grid size must be odd");
    if (!(cfg.hR > 0)) throw std::invalid_argument("reference step must be positive");
    if (cfg.refinementFactor < 2) throw std::invalid_argument("refinement factor must be at least 2");
    const auto start = std::chrono::steady_clock::now();
    const long steps = T > t0 ? static_cast<long>(std::ceil((T - t0) / cfg.hR - 1e-9)) : 0;

    auto solveOn = [&](std::size_t points) {
        ReferenceResult r;
        const auto g = grid::SpatialGrid::withPoints(points);
        r.MR = points;
        r.steps = steps;
        r.u = extrapolatedStrang(u0(g), t0, T, steps, model, cfg.eps, cfg.extrapolationLevels, r.timeErrorEstimate);
        r.tailMass = grid::highModeMass(r.u, 0.1);
        return r;
    };

    ReferenceResult prev = solveOn(cfg.MR);
    // at least one refinement, otherwise there is nothing to compare against
    const int levels = std::max(cfg.maxRefinements, 1);
    for (int level = 1; level <= levels; ++level) {
        ReferenceResult next = solveOn(static_cast<std::size_t>(cfg.refinementFactor) * (prev.MR - 1) + 1);
        next.refinements = level;
        next.lastChange = errorAgainstReference(prev.u, next.u).l2;
        if (prev.tailMass < cfg.tailTolerance && next.lastChange <= cfg.agreementTolerance) {
            next.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            return next;
        }
        prev = std::move(next);
    }
    prev.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream msg;
    msg << "reference did not converge after " << levels << " refinements (MR=" << prev.MR
        << ", tail mass=" << prev.tailMass << ", change=" << prev.lastChange << ")";
    throw ReferenceNotConvergedError(msg.str(), prev);
}

}  // namespace mz::reference

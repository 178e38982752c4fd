#include "mzsplit/propagator/propagator.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "mzsplit/potential/quadrature.hpp"

namespace mz::propagator {

grid::WaveFunction stepOnce(const grid::WaveFunction& u, double t, double h, const potential::PotentialModel& model,
                            const StepOptions& options) {
    const auto sample = potential::sampleQuadrature(model, t, h, u.grid);
    return compileStep(options, sample, h, u.grid).apply(u);
}

EvolveReport evolve(const grid::WaveFunction& u0, double t0, double T, double h,
                    const potential::PotentialModel& model, const StepOptions& options,
                    const EvolveOptions& evolveOptions) {
    if (!(h > 0)) throw std::invalid_argument("step size must be positive");
    if (T < t0) throw std::invalid_argument("final time precedes start time");
    const auto start = std::chrono::steady_clock::now();

    EvolveReport report;
    report.final = u0;
    report.tFinal = t0;
    const double norm0 = grid::l2Norm(u0);
    // tolerate rounding in (T - t0)/h so an exact multiple does not grow a sliver step
    const double span = T - t0;
    const long steps = span <= 0 ? 0 : static_cast<long>(std::ceil(span / h - 1e-9));
    for (long n = 0; n < steps; ++n) {
        const double t = t0 + static_cast<double>(n) * h;
        const double hn = (n + 1 == steps) ? T - t : h;
        report.final = stepOnce(report.final, t, hn, model, options);
        report.tFinal = (n + 1 == steps) ? T : t + h;
        const double drift = norm0 == 0 ? 0.0 : std::abs(grid::l2Norm(report.final) - norm0) / norm0;
        report.normDrift.push_back(drift);
        report.maxNormDrift = std::max(report.maxNormDrift, drift);
        if (drift > evolveOptions.driftTolerance) ++report.flaggedSteps;
        if (evolveOptions.snapshotEvery > 0 && (n + 1) % evolveOptions.snapshotEvery == 0)
            report.snapshots.push_back({report.tFinal, report.final});
    }
    report.steps = static_cast<int>(steps);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

double transmittedMass(const grid::WaveFunction& u) {
    double mass = 0;
    for (std::size_t j = 0; j < u.size(); ++j)
        if (u.grid->node(j) > 0) mass += std::norm(u.values[static_cast<Eigen::Index>(j)]);
    return 2.0 * mass / static_cast<double>(u.size());
}

}  // namespace mz::propagator

#pragma once

#include <vector>

#include "mzsplit/grid/grid.hpp"
#include "mzsplit/potential/potential.hpp"
#include "mzsplit/propagator/compiled_step.hpp"

namespace mz::propagator {

/// One step over [t, t+h]: quadrature sample, compile, apply.
grid::WaveFunction stepOnce(const grid::WaveFunction& u, double t, double h, const potential::PotentialModel& model,
                            const StepOptions& options);

struct Snapshot {
    double t = 0;
    grid::WaveFunction u;
};

struct EvolveOptions {
    /// Keep every n-th state (0 = none).
    int snapshotEvery = 0;
    /// Drift entries above this are counted in flaggedSteps.
    double driftTolerance = 1e-12;
};

struct EvolveReport {
    grid::WaveFunction final;
    double tFinal = 0;
    int steps = 0;
    /// |‖u_n‖ - ‖u_0‖| / ‖u_0‖ after each step.
    std::vector<double> normDrift;
    double maxNormDrift = 0;
    int flaggedSteps = 0;
    double seconds = 0;
    std::vector<Snapshot> snapshots;
};

/// Steps of size h from t0 to T; the last step is shortened to land on T.
EvolveReport evolve(const grid::WaveFunction& u0, double t0, double T, double h,
                    const potential::PotentialModel& model, const StepOptions& options,
                    const EvolveOptions& evolveOptions = {});

/// (2/M) sum over x_n > 0 of |u_n|^2.
double transmittedMass(const grid::WaveFunction& u);

}  // namespace mz::propagator

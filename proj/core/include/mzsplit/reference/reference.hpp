#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

#include "mzsplit/grid/grid.hpp"
#include "mzsplit/potential/potential.hpp"

namespace mz::reference {

/// e^{hR eps K^2 / 2} e^{-i hR V(t + hR/2)/eps} e^{hR eps K^2 / 2}
grid::WaveFunction strangStep(const grid::WaveFunction& u, double t, double hR, const potential::PotentialModel& model,
                              double eps);

/// `steps` Strang steps of equal size (T - t0)/steps, adjacent half kinetic factors merged.
grid::WaveFunction strangEvolve(const grid::WaveFunction& u0, double t0, double T, long steps,
                                const potential::PotentialModel& model, double eps);

struct ReferenceConfig {
    double eps = 1.0 / 256.0;
    /// Largest reference step; the step count is rounded up so steps land on T.
    double hR = 0;
    /// Initial grid size (odd).
    std::size_t MR = 0;
    int refinementFactor = 2;
    int maxRefinements = 3;
    /// Mass allowed in the top 10% of Fourier modes.
    double tailTolerance = 1e-12;
    /// l2 distance allowed between successive resolutions.
    double agreementTolerance = 1e-10;
    /// Richardson levels on step halving (0 = plain Strang; each level removes one even power of hR).
    int extrapolationLevels = 2;
};

/// Initial data on a requested grid.
using InitialState = std::function<grid::WaveFunction(const grid::GridPtr&)>;

struct ReferenceResult {
    grid::WaveFunction u;
    std::size_t MR = 0;
    long steps = 0;
    /// Grid refinements performed before agreement (at least 1).
    int refinements = 0;
    double tailMass = 0;
    /// l2 distance to the previous resolution.
    double lastChange = 0;
    /// Difference between the two highest extrapolation levels (a step-size error estimate).
    double timeErrorEstimate = 0;
    double seconds = 0;
};

class ReferenceNotConvergedError : public std::runtime_error {
public:
    ReferenceNotConvergedError(const std::string& what, ReferenceResult last)
        : std::runtime_error(what), last_(std::move(last)) {}
    const ReferenceResult& last() const noexcept { return last_; }

private:
    ReferenceResult last_;
};

/// Strang (optionally extrapolated) on successively finer grids until the
/// mode tail is below tailTolerance and two successive grids agree.
ReferenceResult solveReference(const potential::PotentialModel& model, const InitialState& u0, double t0, double T,
                               const ReferenceConfig& cfg);

struct ErrorNorms {
    double l2 = 0;
    double linf = 0;
};

/// Brings uRef onto u's grid by trigonometric interpolation, then measures u - uRef.
ErrorNorms errorAgainstReference(const grid::WaveFunction& u, const grid::WaveFunction& uRef);

}  // namespace mz::reference

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mzsplit/grid/grid.hpp"
#include "mzsplit/potential/potential.hpp"
#include "mzsplit/propagator/compiled_step.hpp"
#include "mzsplit/reference/reference.hpp"

namespace mz::app {

/// Schema violation; pointer is a JSON pointer such as "/initial/gaussian/delta".
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string pointer, const std::string& message);
    const std::string& pointer() const noexcept { return pointer_; }

private:
    std::string pointer_;
};

struct PotentialSpec {
    /// zero, constant, lattice, pulse, lattice_with_pulse; empty when expr is set.
    std::string builtin = "lattice_with_pulse";
    std::string expr;
    double c = 0;

    potential::PotentialModel model() const;
    nlohmann::json toJson() const;
};

struct GaussianSpec {
    double x0 = -0.3;
    double k0 = 0.1;
    double delta = 1.22e-4;
    /// When set, delta = deltaOverEps * epsilon.
    std::optional<double> deltaOverEps;

    double deltaFor(double eps) const { return deltaOverEps ? *deltaOverEps * eps : delta; }
};

struct SweepSpec {
    /// "epsilon" or "hOverEps".
    std::string variable;
    std::vector<double> values;
};

struct ReferenceSpec {
    /// hR = h / stepRatio.
    double stepRatio = 200;
    /// MR = gridRatio * M, rounded up to odd.
    double gridRatio = 3;
    int refinementFactor = 2;
    int maxRefinements = 3;
    double tailTolerance = 1e-12;
    double agreementTolerance = 1e-10;
    int extrapolationLevels = 2;
};

struct RunConfig {
    double epsilon = 1.0 / 256.0;
    double T = 0.75;
    double hOverEps = 2.0;
    double MTimesEps = 5.0;
    double sigma = 1.0;
    propagator::SchemeKind scheme = propagator::SchemeKind::Full;
    PotentialSpec potential;
    GaussianSpec initial;
    std::string outDir = "out";
    int snapshotEvery = 0;
    int outerLanczos = 3;
    int centralLanczos = 2;
    std::optional<SweepSpec> sweep;
    ReferenceSpec reference;

    double h() const { return hOverEps * epsilon; }
    std::size_t M() const;
    /// ceil(T / h); zero when T = 0.
    long steps() const;

    propagator::StepOptions stepOptions() const;
    grid::WaveFunction initialState(const grid::GridPtr& g) const;
    reference::ReferenceConfig referenceConfig() const;

    nlohmann::json toJson() const;
};

/// Smallest odd integer >= x.
std::size_t oddCeil(double x);

RunConfig parseConfig(const nlohmann::json& j);
RunConfig loadConfig(const std::filesystem::path& path);

}  // namespace mz::app

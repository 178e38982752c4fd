#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mzsplit/grid/grid.hpp"
#include "mzsplit/potential/quadrature.hpp"
#include "mzsplit/propagator/lanczos.hpp"
#include "mzsplit/symlie/zassenhaus.hpp"

namespace mz::propagator {

/// strang: e^{W0/2} e^{W1} e^{W0/2}
/// mid:    e^{W0/2} e^{W1/2} e^{W2} e^{W1/2} e^{W0/2}
/// full:   e^{W0/2} e^{W1/2} e^{W2/2} e^{central} e^{W2/2} e^{W1/2} e^{W0/2}
enum class SchemeKind { Strang, Mid, Full };

std::string_view toString(SchemeKind kind) noexcept;
std::optional<SchemeKind> parseSchemeKind(std::string_view name) noexcept;

struct StepOptions {
    SchemeKind scheme = SchemeKind::Full;
    double eps = 1.0 / 256.0;
    /// Lanczos iterations for the outer exponents from W2 on, and for the central one.
    int outerLanczos = 3;
    int centralLanczos = 2;
    /// Symbolic exponents; derivedScheme() when null.
    const symlie::SplittingScheme* symbolic = nullptr;
};

enum class FactorMethod { Fourier, Diagonal, Lanczos };

std::string_view toString(FactorMethod m) noexcept;

/// i^{iExp} <height|field>, coefficients (including h, eps and the factor weight) folded into field.
struct JordanPart {
    int height = 0;
    int iExp = 0;
    grid::GridField field;
};

struct Factor {
    std::string label;  // "W0", "W1", ..., "central"
    double weight = 1;
    FactorMethod method = FactorMethod::Diagonal;
    Eigen::VectorXcd fourier;   // per DFT bin
    Eigen::VectorXcd diagonal;  // per node
    std::vector<JordanPart> parts;
    int iterations = 0;

    grid::WaveFunction apply(const grid::WaveFunction& v) const;
    /// v -> sum_parts i^{iExp} <height|field> v, the exponent itself (weight included).
    Eigen::VectorXcd applyExponent(const grid::GridPtr& grid, const Eigen::VectorXcd& v) const;
};

struct CompiledStep {
    std::vector<Factor> factors;

    grid::WaveFunction apply(const grid::WaveFunction& v) const;
    bool palindromic() const;
};

/// Numeric values of a symbolic field from the derivative table of a sample.
Eigen::VectorXd evaluateField(const symlie::ScalarField& f, const potential::QuadratureSample& sample,
                              const grid::GridPtr& grid);

/// Turns a weighted symbolic exponent into a Fourier, diagonal or Lanczos factor.
Factor compileExponent(const symlie::LieElement& exponent, double weight, std::string label, int lanczosIterations,
                       const potential::QuadratureSample& sample, double eps, double h, const grid::GridPtr& grid);

CompiledStep compileStep(const StepOptions& options, const potential::QuadratureSample& sample, double h,
                         const grid::GridPtr& grid);

}  // namespace mz::propagator

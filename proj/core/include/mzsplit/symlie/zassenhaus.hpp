#pragma once

#include <vector>

#include "mzsplit/symlie/lie_element.hpp"
#include "mzsplit/symlie/sbch.hpp"

namespace mz::symlie {

/// exp(omega) ~ e^{W0/2} ... e^{Ws/2} e^{central} e^{Ws/2} ... e^{W0/2}.
struct SplittingScheme {
    std::vector<LieElement> outer;
    LieElement central;
    /// Truncation order the scheme was derived at.
    int order = 5;

    friend bool operator==(const SplittingScheme&, const SplittingScheme&) = default;
};

/// Symmetric Zassenhaus splitting. W0 = i h eps <2|1>; each stage computes
/// the next central exponent sbch(-Wk, Wk_central) and extracts as W(k+1) the
/// terms with hExp = 2k+1 and epsExp - height = -1. After the last stage the
/// final extracted exponent is removed from the central one. Stops early if a
/// stage extracts nothing.
SplittingScheme zassenhausSplit(const LieElement& omega, int stages, Truncation rule = {},
                                const SbchCoefficients& coefficients = {});

/// Derivation used by the propagator: zassenhausSplit(magnusOmega5(), 2). Computed once.
const SplittingScheme& derivedScheme();

}  // namespace mz::symlie

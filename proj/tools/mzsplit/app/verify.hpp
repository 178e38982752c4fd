#pragma once

#include <string>
#include <vector>

#include "mzsplit/symlie/sbch.hpp"

namespace mz::app {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    /// Swapped in for mutation testing.
    symlie::SbchCoefficients coefficients;
};

struct SbchOracleReport {
    std::vector<double> deltas;
    /// Largest Frobenius residual over the random pairs at each delta.
    std::vector<double> residuals;
    double order = 0;
};

/// log(e^{X/2} e^Y e^{X/2}) against the truncated series on random 8x8
/// skew-Hermitian pairs of Frobenius norm delta. Fixed seed.
SbchOracleReport sbchMatrixOracle(const symlie::SbchCoefficients& coefficients = {},
                                  const std::vector<double>& deltas = {0.2, 0.1, 0.05}, int pairs = 6);

/// max over k = 0..4 of ||A + A^H|| / ||A|| with A = i^{k+1} applyJordan(k, f, .) on M points, f random.
double skewHermitianDefect(int k, std::size_t points = 33);

std::vector<CheckResult> runVerify(const VerifyOptions& options = {});

}  // namespace mz::app

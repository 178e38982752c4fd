#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "app/config.hpp"

namespace mz::app {

/// Evolves the configured packet to T. Writes initial.mzwf, final.mzwf,
/// snapshot_NNNNNN.mzwf (if snapshotEvery > 0) and summary.json into outDir.
/// Returns the summary.
nlohmann::json cmdRun(const RunConfig& cfg, const std::filesystem::path& outDir);

struct ConvergenceRow {
    double eps = 0;
    double h = 0;
    std::size_t M = 0;
    double l2 = 0;
    double linf = 0;
    double seconds = 0;
    bool ok = false;
    /// Set when the row was aborted.
    std::string failure;
    /// Reference diagnostics.
    std::size_t MR = 0;
    double referenceTimeError = 0;
    double referenceTail = 0;
};

struct ConvergenceResult {
    /// "epsilon" or "hOverEps".
    std::string variable;
    std::vector<ConvergenceRow> rows;
    /// Least-squares slopes of log2(error) against log2(eps) or log2(h); empty with < 2 good rows.
    std::optional<double> l2Slope;
    std::optional<double> linfSlope;
};

double leastSquaresSlope(const std::vector<double>& x, const std::vector<double>& y);

/// One case per sweep value. References are solved once per epsilon with the
/// smallest h of that epsilon. Rows are streamed to csv (if given) in case
/// order; slopes follow as '#' lines.
ConvergenceResult cmdConvergence(const RunConfig& cfg, int jobs, std::ostream* csv = nullptr);

/// Writes reference.mzwf and reference.json for the configured case.
nlohmann::json cmdReference(const RunConfig& cfg, const std::filesystem::path& outDir);

enum class DeriveFormat { Pretty, Json, Latex };
std::optional<DeriveFormat> parseDeriveFormat(std::string_view name) noexcept;

/// Splitting of the order-5 (or order-3) Magnus exponent, two Zassenhaus stages.
std::string cmdDerive(int order, DeriveFormat format);

}  // namespace mz::app

#pragma once
// "MZWF" | u32 version = 1 | u64 M | f64 eps | f64 t | M x (f64 re, f64 im), little-endian.

#include <filesystem>
#include <stdexcept>

#include "mzsplit/grid/grid.hpp"

namespace mz::app {

class SnapshotError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SnapshotData {
    double eps = 0;
    double t = 0;
    grid::WaveFunction u;
};

void writeSnapshot(const std::filesystem::path& path, const grid::WaveFunction& u, double eps, double t);
SnapshotData readSnapshot(const std::filesystem::path& path);

}  // namespace mz::app

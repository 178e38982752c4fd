#include "app/snapshot.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

namespace mz::app {

namespace {

constexpr char kMagic[4] = {'M', 'Z', 'W', 'F'};
constexpr std::uint32_t kVersion = 1;

template <class T>
void put(std::ostream& os, T value) {
    std::array<char, sizeof(T)> bytes;
    std::memcpy(bytes.data(), &value, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
    os.write(bytes.data(), sizeof(T));
}

template <class T>
T get(std::istream& is, const std::filesystem::path& path) {
    std::array<char, sizeof(T)> bytes;
    if (!is.read(bytes.data(), sizeof(T))) throw SnapshotError("truncated snapshot '" + path.string() + "'");
    if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
    T value;
    std::memcpy(&value, bytes.data(), sizeof(T));
    return value;
}

}  // namespace

void writeSnapshot(const std::filesystem::path& path, const grid::WaveFunction& u, double eps, double t) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw SnapshotError("cannot write snapshot '" + path.string() + "'");
    os.write(kMagic, 4);
    put<std::uint32_t>(os, kVersion);
    put<std::uint64_t>(os, u.size());
    put<double>(os, eps);
    put<double>(os, t);
    for (const auto& z : u.values) {
        put<double>(os, z.real());
        put<double>(os, z.imag());
    }
    if (!os) throw SnapshotError("write failed for '" + path.string() + "'");
}

SnapshotData readSnapshot(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw SnapshotError("cannot open snapshot '" + path.string() + "'");
    char magic[4];
    if (!is.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0)
        throw SnapshotError("'" + path.string() + "' is not an MZWF snapshot");
    const auto version = get<std::uint32_t>(is, path);
    if (version != kVersion) throw SnapshotError("unsupported snapshot version " + std::to_string(version));
    const auto m = get<std::uint64_t>(is, path);
    if (m % 2 == 0) throw SnapshotError("snapshot grid size must be odd");
    SnapshotData s;
    s.eps = get<double>(is, path);
    s.t = get<double>(is, path);
    s.u = grid::WaveFunction(grid::SpatialGrid::withPoints(m));
    for (std::uint64_t n = 0; n < m; ++n) {
        const double re = get<double>(is, path);
        const double im = get<double>(is, path);
        s.u.values[static_cast<Eigen::Index>(n)] = {re, im};
    }
    if (is.peek() != std::char_traits<char>::eof()) throw SnapshotError("trailing bytes in '" + path.string() + "'");
    return s;
}

}  // namespace mz::app

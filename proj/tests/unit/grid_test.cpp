#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "../oracles/dense_operator.hpp"
#include "mzsplit/grid/grid.hpp"

using namespace mz::grid;
using Eigen::Index;

namespace {

constexpr double pi = std::numbers::pi;

WaveFunction planeWave(const GridPtr& g, int m) {
    WaveFunction u(g);
    for (std::size_t j = 0; j < g->size(); ++j) u.values[static_cast<Index>(j)] = std::polar(1.0, m * pi * g->node(j));
    return u;
}

WaveFunction randomWave(const GridPtr& g, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    WaveFunction u(g);
    for (auto& z : u.values) z = {gauss(rng), gauss(rng)};
    return u;
}

}  // namespace

TEST_CASE("grid nodes and mode bookkeeping") {
    auto g = SpatialGrid::create(16);
    CHECK(g->size() == 33);
    CHECK(g->node(16) == 0.0);
    CHECK(g->node(0) == doctest::Approx(-16.0 / 16.5));
    CHECK(g->node(32) < 1.0);
    CHECK(g->modeOfBin(16) == 16);
    CHECK(g->modeOfBin(17) == -16);
    for (long m = -16; m <= 16; ++m) CHECK(g->modeOfBin(g->binOfMode(m)) == m);
    CHECK_THROWS_AS(SpatialGrid::withPoints(32), std::invalid_argument);
}

TEST_CASE("wave function size must match its grid") {
    auto g = SpatialGrid::withPoints(9);
    CHECK_THROWS_AS(WaveFunction(g, Eigen::VectorXcd::Zero(8)), GridMismatchError);
    CHECK_THROWS_AS(GridField(g, Eigen::VectorXd::Zero(10)), GridMismatchError);
}

TEST_CASE("spectral derivative of Fourier modes") {
    auto g = SpatialGrid::withPoints(65);
    const auto u = planeWave(g, 1);
    const auto du = fourierDifferentiate(u, 1);
    CHECK((du.values - Complex(0, pi) * u.values).norm() < 1e-12 * std::sqrt(65.0) * pi);

    WaveFunction one(g, Eigen::VectorXcd::Ones(65));
    for (int k = 1; k <= 4; ++k) CHECK(linfNorm(fourierDifferentiate(one, k)) < 1e-12);

    GridField s(g);
    for (std::size_t j = 0; j < g->size(); ++j) s.values[static_cast<Index>(j)] = std::sin(20 * pi * g->node(j));
    const auto d2 = fourierDifferentiate(s, 2);
    CHECK((d2.values + 400 * pi * pi * s.values).lpNorm<Eigen::Infinity>() < 1e-9 * 400 * pi * pi);
}

TEST_CASE("derivative orders compose and act linearly") {
    auto g = SpatialGrid::withPoints(33);
    const auto u = randomWave(g, 1);
    const auto w = randomWave(g, 2);
    for (int a = 0; a <= 3; ++a) {
        for (int b = 0; b <= 3; ++b) {
            const auto lhs = fourierDifferentiate(fourierDifferentiate(u, a), b);
            const auto rhs = fourierDifferentiate(u, a + b);
            CHECK((lhs.values - rhs.values).norm() <= 1e-10 * rhs.values.norm() + 1e-12);
        }
    }
    WaveFunction sum(g, 2.0 * u.values + Complex(0, 3) * w.values);
    const auto d = fourierDifferentiate(sum, 3);
    const Eigen::VectorXcd expected = 2.0 * fourierDifferentiate(u, 3).values + Complex(0, 3) * fourierDifferentiate(w, 3).values;
    CHECK((d.values - expected).norm() <= 1e-10 * expected.norm());
}

TEST_CASE("real fields keep real derivatives") {
    auto g = SpatialGrid::withPoints(33);
    GridField f(g);
    for (std::size_t j = 0; j < g->size(); ++j) f.values[static_cast<Index>(j)] = std::exp(std::cos(pi * g->node(j)));
    const auto d1 = fourierDifferentiate(f, 1);
    for (std::size_t j = 0; j < g->size(); ++j) {
        const double x = g->node(j);
        CHECK(d1.values[static_cast<Index>(j)] == doctest::Approx(-pi * std::sin(pi * x) * std::exp(std::cos(pi * x))).epsilon(1e-9));
    }
}

TEST_CASE("Jordan operator special cases") {
    auto g = SpatialGrid::withPoints(33);
    const auto v = randomWave(g, 3);
    GridField f(g);
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> uni(-1, 1);
    for (auto& x : f.values) x = uni(rng);
    const auto j0 = applyJordan(0, f, v);
    CHECK((j0.values - f.values.cast<Complex>().cwiseProduct(v.values)).norm() < 1e-14);

    GridField one(g, Eigen::VectorXd::Ones(33));
    const auto j2 = applyJordan(2, one, v);
    CHECK((j2.values - fourierDifferentiate(v, 2).values).norm() < 1e-10 * j2.values.norm());

    auto other = SpatialGrid::withPoints(35);
    CHECK_THROWS_AS(applyJordan(1, GridField(other), v), GridMismatchError);
}

TEST_CASE("i^(k+1) Jordan matrices are skew-Hermitian") {
    auto g = SpatialGrid::withPoints(33);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> uni(-1, 1);
    Eigen::VectorXd f(33);
    for (auto& x : f) x = uni(rng);
    GridField field(g, f);
    for (int k = 0; k <= 4; ++k) {
        Eigen::MatrixXcd a(33, 33);
        for (Index c = 0; c < 33; ++c) {
            WaveFunction e(g);
            e.values[c] = 1;
            a.col(c) = applyJordan(k, field, e).values;
        }
        a *= std::pow(Complex(0, 1), k + 1);
        CHECK((a + a.adjoint()).norm() <= 1e-12 * a.norm());
        // same matrix as the oracle's assembly
        const Eigen::MatrixXcd b = std::pow(Complex(0, 1), k + 1) * oracle::jordanMatrix(g, k, f);
        CHECK((a - b).norm() <= 1e-12 * a.norm());
    }
}

TEST_CASE("scaled norms") {
    for (std::size_t m : {9u, 33u, 101u}) {
        auto g = SpatialGrid::withPoints(m);
        WaveFunction c(g, Eigen::VectorXcd::Constant(static_cast<Index>(m), 1 / std::sqrt(2.0)));
        CHECK(l2Norm(c) == doctest::Approx(1.0).epsilon(1e-14));
        WaveFunction z(g);
        CHECK(l2Norm(z) == 0);
        CHECK(linfNorm(z) == 0);
        for (unsigned s = 0; s < 5; ++s) {
            const auto v = randomWave(g, s);
            CHECK(linfNorm(v) <= std::sqrt(m / 2.0) * l2Norm(v) * (1 + 1e-14));
        }
    }
}

TEST_CASE("resampling") {
    auto coarse = SpatialGrid::withPoints(33);
    const auto u = planeWave(coarse, 1);
    const auto up = resample(u, 65);
    CHECK((up.values - planeWave(up.grid, 1).values).norm() < 1e-12);

    const auto v = randomWave(coarse, 6);
    const auto v2 = resample(v, 99);
    CHECK(l2Norm(v2) == doctest::Approx(l2Norm(v)).epsilon(1e-12));
    CHECK((resample(v2, 33).values - v.values).norm() < 1e-12 * v.values.norm());

    const auto down = resample(v, 17);
    CHECK(l2Norm(down) < l2Norm(v));
    CHECK_THROWS_AS(resample(v, 40), std::invalid_argument);
}

TEST_CASE("Gaussian packet") {
    auto g = SpatialGrid::withPoints(1281);
    const auto u = gaussianWavePacket(g, -0.3, 0.1, 1.22e-4);
    CHECK(l2Norm(u) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(std::abs(u.values[0]) < 1e-300);

    auto h = SpatialGrid::withPoints(201);
    const auto r = gaussianWavePacket(h, 0.0, 0.0, 0.01);
    for (std::size_t j = 0; j < h->size(); ++j) {
        CHECK(std::abs(r.values[static_cast<Index>(j)].imag()) < 1e-15);
        CHECK(std::abs(r.values[static_cast<Index>(j)] - r.values[static_cast<Index>(h->size() - 1 - j)]) < 1e-14);
    }
    CHECK_THROWS(gaussianWavePacket(h, 0, 0, 0));
}

TEST_CASE("high mode mass") {
    auto g = SpatialGrid::withPoints(101);
    CHECK(highModeMass(planeWave(g, 3)) < 1e-28);
    CHECK(highModeMass(planeWave(g, 48)) == doctest::Approx(1.0));
}

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mzsplit/expr/expr.hpp"
#include "mzsplit/potential/potential.hpp"
#include "mzsplit/potential/quadrature.hpp"

using namespace mz;
using potential::PotentialModel;
using Eigen::Index;

namespace {

constexpr double pi = std::numbers::pi;

double g(double x) {
    return std::cos(pi * x) + 0.25 * std::sin(3 * pi * x);
}

double maxAbs(const Eigen::VectorXd& v) {
    return v.lpNorm<Eigen::Infinity>();
}

}  // namespace

TEST_CASE("builtin potentials on the grid") {
    auto grid = grid::SpatialGrid::withPoints(257);
    CHECK(maxAbs(potential::evaluateOnGrid(PotentialModel::zero(), 0.4, grid).values) == 0);

    const auto lat = potential::evaluateOnGrid(PotentialModel::lattice(), 0.7, grid);
    for (std::size_t j = 0; j < grid->size(); ++j) {
        const double x = grid->node(j);
        const double want = std::abs(x) >= 0.25 ? 0.0 : expr::bump(4 * x) * std::sin(20 * pi * x);
        CHECK(lat.values[static_cast<Index>(j)] == doctest::Approx(want).epsilon(1e-14));
    }

    const auto pulse = potential::evaluateOnGrid(PotentialModel::pulse(), 1.0 / 3.0, grid);
    for (std::size_t j = 0; j < grid->size(); j += 16) {
        const double x = grid->node(j);
        CHECK(pulse.values[static_cast<Index>(j)] ==
              doctest::Approx(expr::bump(0) * expr::bump(std::sin(2 * pi * (x - 1.0 / 3.0)))));
    }
    CHECK(maxAbs(potential::evaluateOnGrid(PotentialModel::pulse(), 0.0, grid).values) == 0);
    CHECK(maxAbs(potential::evaluateOnGrid(PotentialModel::pulse(), 2.0 / 3.0, grid).values) == 0);

    const auto both = potential::evaluateOnGrid(PotentialModel::latticeWithPulse(), 0.3, grid);
    const Eigen::VectorXd sum = potential::evaluateOnGrid(PotentialModel::lattice(), 0.3, grid).values +
                     potential::evaluateOnGrid(PotentialModel::pulse(), 0.3, grid).values;
    CHECK(maxAbs(both.values - sum) < 1e-15);
}

TEST_CASE("expression potentials") {
    const auto m = PotentialModel::expression(expr::parseExpr("bump(4*x)*sin(20*pi*x)"));
    CHECK(m.timeIndependent());
    CHECK(m(0.05, 0.0) == doctest::Approx(PotentialModel::lattice()(0.05, 9.0)));
    const auto p = PotentialModel::expression(expr::parseExpr("t*x"));
    CHECK_FALSE(p.timeIndependent());
    const auto bad = PotentialModel::expression(expr::parseExpr("1/x"));
    auto grid = grid::SpatialGrid::withPoints(9);
    CHECK_THROWS_AS(potential::evaluateOnGrid(bad, 0, grid), expr::EvalError);
}

TEST_CASE("quadrature of a time-independent potential") {
    auto grid = grid::SpatialGrid::withPoints(129);
    const auto s = potential::sampleQuadrature(PotentialModel::lattice(), 0.2, 0.01, grid);
    CHECK(s.timeIndependent);
    CHECK(maxAbs(s.field(0).values - potential::evaluateOnGrid(PotentialModel::lattice(), 0, grid).values) == 0);
    for (int m = 0; m <= potential::kDerivativeCaps[1]; ++m) CHECK(maxAbs(s.derivative(1, m).values) == 0);
    for (int m = 0; m <= potential::kDerivativeCaps[2]; ++m) CHECK(maxAbs(s.derivative(2, m).values) == 0);
}

TEST_CASE("quadrature of linear and quadratic time dependence") {
    auto grid = grid::SpatialGrid::withPoints(33);
    const double h = 0.125;
    const auto gField = potential::evaluateOnGrid(PotentialModel::separable(0, g), 0, grid).values;

    const auto lin = potential::sampleQuadrature(PotentialModel::separable(1, g), 0, h, grid);
    CHECK(maxAbs(lin.field(1).values - gField) < 1e-13);
    CHECK(maxAbs(lin.field(2).values) < 1e-12);
    CHECK(maxAbs(lin.field(0).values - 0.5 * h * gField) < 1e-15);

    const auto quad = potential::sampleQuadrature(PotentialModel::separable(2, g), 0, h, grid);
    CHECK(maxAbs(quad.field(2).values - gField) < 1e-12);
}

TEST_CASE("derivative table") {
    auto grid = grid::SpatialGrid::withPoints(65);
    const auto s = potential::sampleQuadrature(PotentialModel::separable(1, g), 0.3, 0.05, grid);
    for (int j = 0; j < 3; ++j) {
        REQUIRE(s.deriv[j].size() == static_cast<std::size_t>(potential::kDerivativeCaps[j] + 1));
        CHECK(s.deriv[j][0].values == s.field(j).values);
        for (int m = 1; m <= potential::kDerivativeCaps[j]; ++m) {
            const auto want = grid::fourierDifferentiate(s.field(j), m).values;
            CHECK(maxAbs(s.derivative(j, m).values - want) <= 1e-10 * std::max(1.0, maxAbs(want)));
        }
    }
    // d/dx of V~0 = (t + h/2) g'(x)
    for (std::size_t n = 0; n < grid->size(); n += 8) {
        const double x = grid->node(n);
        const double gp = -pi * std::sin(pi * x) + 0.75 * pi * std::cos(3 * pi * x);
        CHECK(s.derivative(0, 1).values[static_cast<Index>(n)] == doctest::Approx(0.325 * gp).epsilon(1e-10));
    }
    CHECK_THROWS_AS(s.derivative(1, 4), potential::MissingDerivativeError);
    CHECK_THROWS_AS(s.derivative(3, 0), potential::MissingDerivativeError);
}

TEST_CASE("reversing the step flips V~1 only") {
    auto grid = grid::SpatialGrid::withPoints(65);
    const auto model = PotentialModel::latticeWithPulse();
    const double t = 0.31, h = 0.03;
    const auto fwd = potential::sampleQuadrature(model, t, h, grid);
    const auto bwd = potential::sampleQuadrature(model.reversed(2 * t + h), t, h, grid);
    CHECK(maxAbs(fwd.field(0).values - bwd.field(0).values) < 1e-14);
    CHECK(maxAbs(fwd.field(1).values + bwd.field(1).values) < 1e-12);
    CHECK(maxAbs(fwd.field(2).values - bwd.field(2).values) < 1e-10);
}

TEST_CASE("quadrature nodes") {
    const auto n = potential::quadratureNodes();
    CHECK(n[0] == doctest::Approx(0.5 - std::sqrt(15.0) / 10));
    CHECK(n[1] == 0.5);
    CHECK(n[0] + n[2] == doctest::Approx(1.0));
}

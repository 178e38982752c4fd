#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mzsplit/grid/grid.hpp"
#include "mzsplit/symlie/commutator.hpp"

// Checks each closed-form bracket rule against operators applied on a grid.
// Fields and the test vector are low-mode trigonometric polynomials, so every
// product stays resolved and spectral differentiation is exact.

using namespace mz;
using symlie::ScalarField;

namespace {

constexpr double pi = std::numbers::pi;

grid::GridField sampled(const grid::GridPtr& g, double (*fn)(double)) {
    grid::GridField f(g);
    for (std::size_t j = 0; j < g->size(); ++j) f.values[static_cast<Eigen::Index>(j)] = fn(g->node(j));
    return f;
}

double fShape(double x) {
    return 0.7 + std::sin(pi * x) + 0.3 * std::cos(2 * pi * x);
}
double gShape(double x) {
    return std::cos(pi * x) - 0.4 * std::sin(2 * pi * x);
}

grid::GridField evaluate(const ScalarField& field, const grid::GridField& f, const grid::GridField& g) {
    grid::GridField out(f.grid);
    for (const auto& m : field.monomials()) {
        Eigen::VectorXd term = Eigen::VectorXd::Constant(out.values.size(), m.coeff.convert_to<double>());
        for (const auto& atom : m.factors)
            term = term.cwiseProduct(grid::fourierDifferentiate(atom.slot == 0 ? f : g, atom.order).values);
        out.values += term;
    }
    return out;
}

}  // namespace

TEST_CASE("bracket rules match commutators of grid operators") {
    auto g = grid::SpatialGrid::withPoints(65);
    const auto f = sampled(g, fShape);
    const auto gg = sampled(g, gShape);
    grid::WaveFunction v(g);
    for (std::size_t j = 0; j < g->size(); ++j) {
        const double x = g->node(j);
        v.values[static_cast<Eigen::Index>(j)] = std::polar(1.0, 3 * pi * x) + 0.5 * std::polar(1.0, -2 * pi * x) + 0.2;
    }

    const ScalarField F = ScalarField::atom(0);
    const ScalarField G = ScalarField::atom(1);
    for (auto [k, l] : symlie::supportedHeightPairs()) {
        for (int swap = 0; swap < 2; ++swap) {
            const int a = swap ? l : k;
            const int b = swap ? k : l;
            CAPTURE(a);
            CAPTURE(b);
            const auto ab = grid::applyJordan(a, f, grid::applyJordan(b, gg, v));
            const auto ba = grid::applyJordan(b, gg, grid::applyJordan(a, f, v));
            Eigen::VectorXcd lhs = ab.values - ba.values;
            Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(lhs.size());
            for (const auto& [j, field] : symlie::jordanBracket(a, F, b, G))
                rhs += grid::applyJordan(j, evaluate(field, f, gg), v).values;
            const double scale = std::max(1.0, lhs.norm());
            CHECK((lhs - rhs).norm() / scale < 1e-10);
        }
    }
}

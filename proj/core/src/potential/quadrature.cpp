#include "mzsplit/potential/quadrature.hpp"

#include <cmath>
#include <string>

namespace mz::potential {

MissingDerivativeError::MissingDerivativeError(int slot, int order)
    : std::out_of_range("quadrature sample has no derivative of order " + std::to_string(order) + " for V~" +
                        std::to_string(slot)) {}

const grid::GridField& QuadratureSample::derivative(int slot, int order) const {
    if (slot < 0 || slot > 2 || order < 0 || order >= static_cast<int>(deriv[slot].size()))
        throw MissingDerivativeError(slot, order);
    return deriv[slot][static_cast<std::size_t>(order)];
}

std::array<double, 3> quadratureNodes() {
    const double r = std::sqrt(15.0) / 10.0;
    return {0.5 - r, 0.5, 0.5 + r};
}

QuadratureSample sampleQuadrature(const PotentialModel& model, double t, double h, const grid::GridPtr& grid) {
    if (!(h > 0)) throw std::invalid_argument("step size must be positive");
    QuadratureSample s;
    s.t = t;
    s.h = h;
    s.timeIndependent = model.timeIndependent();

    const auto c = quadratureNodes();
    std::array<grid::GridField, 3> base;
    if (model.timeIndependent()) {
        base[0] = evaluateOnGrid(model, t + h * c[1], grid);
        base[1] = grid::GridField(grid);
        base[2] = grid::GridField(grid);
    } else {
        const auto v1 = evaluateOnGrid(model, t + h * c[0], grid);
        const auto v2 = evaluateOnGrid(model, t + h * c[1], grid);
        const auto v3 = evaluateOnGrid(model, t + h * c[2], grid);
        base[0] = v2;
        base[1] = grid::GridField(grid, (std::sqrt(15.0) / (3.0 * h)) * (v3.values - v1.values));
        base[2] = grid::GridField(grid, (10.0 / (3.0 * h * h)) * (v3.values - 2.0 * v2.values + v1.values));
    }

    for (int j = 0; j < 3; ++j) {
        auto& table = s.deriv[static_cast<std::size_t>(j)];
        table.reserve(static_cast<std::size_t>(kDerivativeCaps[static_cast<std::size_t>(j)]) + 1);
        table.push_back(base[static_cast<std::size_t>(j)]);
        // constant fields: skip the FFT, its rounding gets amplified by (pi N)^m
        const auto& v = base[static_cast<std::size_t>(j)].values;
        const bool flat = v.size() == 0 || v.maxCoeff() == v.minCoeff();
        for (int m = 1; m <= kDerivativeCaps[static_cast<std::size_t>(j)]; ++m)
            table.push_back(flat ? grid::GridField(grid) : grid::fourierDifferentiate(table.front(), m));
    }
    return s;
}

}  // namespace mz::potential

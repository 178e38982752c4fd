#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "mzsplit/grid/grid.hpp"
#include "mzsplit/potential/potential.hpp"

namespace mz::potential {

/// Highest spatial derivative kept for each of V~0, V~1, V~2.
inline constexpr std::array<int, 3> kDerivativeCaps{4, 3, 2};

class MissingDerivativeError : public std::out_of_range {
public:
    MissingDerivativeError(int slot, int order);
};

/// Gauss-Legendre samples of one step [t, t+h] with nodes t + h(1/2 -+ sqrt(15)/10), t + h/2:
///   V~0 = V(t2),  V~1 = sqrt(15)/(3h) (V(t3) - V(t1)),  V~2 = 10/(3h^2) (V(t3) - 2V(t2) + V(t1))
struct QuadratureSample {
    double t = 0;
    double h = 0;
    bool timeIndependent = false;
    /// deriv[j][m] = d^m/dx^m V~j, m = 0..kDerivativeCaps[j]
    std::array<std::vector<grid::GridField>, 3> deriv;

    const grid::GridField& field(int slot) const { return derivative(slot, 0); }
    const grid::GridField& derivative(int slot, int order) const;
};

/// Quadrature node offsets in [0, 1].
std::array<double, 3> quadratureNodes();

QuadratureSample sampleQuadrature(const PotentialModel& model, double t, double h, const grid::GridPtr& grid);

}  // namespace mz::potential

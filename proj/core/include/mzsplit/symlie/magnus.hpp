#pragma once

#include "mzsplit/symlie/lie_element.hpp"

namespace mz::symlie {

/// Quadrature generators of the Magnus expansion for A(t) = i(eps d_x^2 - V/eps):
///   B1 = i h eps <2|1> - i h eps^-1 <0|V~0>
///   B2 = -i h^2 eps^-1 <0|V~1>
///   B3 = -i h^3 eps^-1 <0|V~2>
struct MagnusGenerators {
    LieElement b1;
    LieElement b2;
    LieElement b3;
};

MagnusGenerators magnusGenerators();

/// Sixth-order quadrature Magnus exponent, commutator-free and truncated
/// (terms O(eps^{7 sigma - 1}) removed).
LieElement magnusOmega5();

/// Fourth-order two-node analogue B1 - [B1, B2]/12 truncated at O(eps^{5 sigma - 1}).
/// Here V~0 is the two-node average and V~1 = sqrt(3)/h (V(t+) - V(t-)).
LieElement magnusOmega3();

}  // namespace mz::symlie

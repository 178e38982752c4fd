#include "mzsplit/symlie/magnus.hpp"

#include "mzsplit/symlie/commutator.hpp"

namespace mz::symlie {

MagnusGenerators magnusGenerators() {
    MagnusGenerators g;
    g.b1.add(1, 1, 1, 1, 2, ScalarField::one());
    g.b1.add(-1, 1, 1, -1, 0, ScalarField::atom(kSlotV0));
    g.b2.add(-1, 1, 2, -1, 0, ScalarField::atom(kSlotV1));
    g.b3.add(-1, 1, 3, -1, 0, ScalarField::atom(kSlotV2));
    return g;
}

LieElement magnusOmega5() {
    const Truncation rule{5};
    const auto [b1, b2, b3] = magnusGenerators();

    const LieElement b12 = commute(b1, b2, rule);
    LieElement omega = b1;
    omega += Rational(1, 12) * b3;
    omega -= Rational(1, 12) * b12;
    omega += Rational(1, 240) * commute(b2, b3, rule);
    omega += Rational(1, 360) * commute(b1, commute(b1, b3, rule), rule);
    omega -= Rational(1, 240) * commute(b2, b12, rule);
    omega += Rational(1, 720) * commute(b1, commute(b1, b12, rule), rule);
    return truncate(omega, rule);
}

LieElement magnusOmega3() {
    const Truncation rule{3};
    const auto g = magnusGenerators();
    LieElement omega = g.b1;
    omega -= Rational(1, 12) * commute(g.b1, g.b2, rule);
    return truncate(omega, rule);
}

}  // namespace mz::symlie

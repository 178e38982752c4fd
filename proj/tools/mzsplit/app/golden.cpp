#include "app/golden.hpp"

#include "mzsplit/symlie/commutator.hpp"
#include "mzsplit/symlie/magnus.hpp"

namespace mz::app::golden {

using symlie::LieElement;
using symlie::Rational;
using symlie::ScalarField;

namespace {

ScalarField d(int slot, int order = 0) {
    return ScalarField::atom(slot, order);
}

const ScalarField one = ScalarField::one();

// c i^iExp h^hExp eps^epsExp <height|field>
LieElement term(Rational c, int iExp, int hExp, int epsExp, int height, const ScalarField& field) {
    return LieElement::term(c, iExp, hExp, epsExp, height, field);
}

Rational q(long n, long m = 1) {
    return Rational(n, m);
}

}  // namespace

std::vector<NamedIdentity> bracketTableSamples() {
    const ScalarField f = d(0);
    const ScalarField g = d(1);
    auto raw = [](int k, const ScalarField& a, int l, const ScalarField& b) {
        return symlie::commute(LieElement::term(1, 0, 0, 0, k, a), LieElement::term(1, 0, 0, 0, l, b));
    };
    auto at = [](int k, const ScalarField& a) { return LieElement::term(1, 0, 0, 0, k, a); };
    std::vector<NamedIdentity> out;

    out.push_back({"[<4|f>,<0|g>]", raw(4, f, 0, g),
                   q(4) * at(3, f * d(1, 1)) - q(2) * at(1, q(3) * (d(0, 1) * d(1, 2)) + f * d(1, 3))});
    out.push_back({"[<3|f>,<0|g>]", raw(3, f, 0, g),
                   q(3) * at(2, f * d(1, 1)) - q(1, 2) * at(0, q(3) * (d(0, 1) * d(1, 2)) + f * d(1, 3))});
    out.push_back({"[<2|f>,<2|g>]", raw(2, f, 2, g),
                   q(2) * at(3, f * d(1, 1) - d(0, 1) * g) +
                       at(1, q(2) * (d(0, 2) * d(1, 1)) - q(2) * (d(0, 1) * d(1, 2)) + d(0, 3) * g - f * d(1, 3))});
    out.push_back({"[<2|f>,<1|g>]", raw(2, f, 1, g),
                   at(2, q(2) * (f * d(1, 1)) - d(0, 1) * g) -
                       q(1, 2) * at(0, q(2) * (d(0, 1) * d(1, 2)) + f * d(1, 3))});
    out.push_back({"[<2|f>,<0|g>]", raw(2, f, 0, g), q(2) * at(1, f * d(1, 1))});
    out.push_back({"[<1|f>,<1|g>]", raw(1, f, 1, g), at(1, f * d(1, 1) - d(0, 1) * g)});
    out.push_back({"[<1|f>,<0|g>]", raw(1, f, 0, g), at(0, f * d(1, 1))});
    out.push_back({"[<2|1>,<0|g>]", raw(2, one, 0, g), q(2) * at(1, d(1, 1))});
    out.push_back({"[<0|f>,<0|g>]", raw(0, f, 0, g), LieElement{}});
    return out;
}

std::vector<NamedIdentity> generatorCommutators() {
    const auto [b1, b2, b3] = symlie::magnusGenerators();
    using symlie::commute;
    std::vector<NamedIdentity> out;
    out.push_back({"[B1,B2]", commute(b1, b2), term(2, 0, 3, 0, 1, d(1, 1))});
    out.push_back({"[B1,B3]", commute(b1, b3), term(2, 0, 4, 0, 1, d(2, 1))});
    out.push_back({"[B2,B3]", commute(b2, b3), LieElement{}});
    out.push_back({"[B1,[B1,B3]]", commute(b1, commute(b1, b3)),
                   term(4, 1, 5, 1, 2, d(2, 2)) - term(1, 1, 5, 1, 0, d(2, 4)) +
                       term(2, 1, 5, -1, 0, d(2, 1) * d(0, 1))});
    out.push_back({"[B2,[B1,B2]]", commute(b2, commute(b1, b2)), term(2, 1, 5, -1, 0, d(1, 1) * d(1, 1))});
    out.push_back({"[B1,[B1,B2]]", commute(b1, commute(b1, b2)),
                   term(4, 1, 4, 1, 2, d(1, 2)) - term(1, 1, 4, 1, 0, d(1, 4)) +
                       term(2, 1, 4, -1, 0, d(1, 1) * d(0, 1))});
    out.push_back({"[B1,[B1,[B1,B2]]]", commute(b1, commute(b1, commute(b1, b2))),
                   term(-8, 0, 5, 2, 3, d(1, 3)) + term(6, 0, 5, 2, 1, d(1, 5)) -
                       term(1, 0, 5, 0, 1, q(12) * (d(1, 2) * d(0, 1)) + q(4) * (d(1, 1) * d(0, 2)))});
    return out;
}

LieElement tripleCommutatorPrinted() {
    return term(-8, 0, 5, 2, 3, d(1, 3)) + term(3, 0, 5, 2, 1, d(1, 5)) -
           term(1, 0, 5, 0, 1, q(12) * (d(1, 2) * d(0, 1)) + q(4) * (d(1, 1) * d(0, 2)));
}

LieElement omega5() {
    LieElement w;
    w += term(1, 1, 1, 1, 2, one);
    w += term(-1, 1, 1, -1, 0, d(0));
    w += term(q(-1, 12), 1, 3, -1, 0, d(2));
    w += term(q(-1, 6), 0, 3, 0, 1, d(1, 1));
    w += term(q(1, 360), 1, 5, -1, 0, q(2) * (d(2, 1) * d(0, 1)) - q(3) * (d(1, 1) * d(1, 1)));
    w += term(q(-1, 180), 0, 5, 0, 1, d(1, 1) * d(0, 2) + q(3) * (d(0, 1) * d(1, 2)));
    w += term(q(1, 90), 1, 5, 1, 2, d(2, 2));
    w += term(q(-1, 90), 0, 5, 2, 3, d(1, 3));
    return w;
}

std::vector<LieElement> outerExponents() {
    return {term(1, 1, 1, 1, 2, one), term(-1, 1, 1, -1, 0, d(0)),
            term(q(1, 12), 1, 3, -1, 0, q(2) * (d(0, 1) * d(0, 1)) - d(2)) + term(q(-1, 6), 0, 3, 0, 1, d(1, 1)) +
                term(q(1, 6), 1, 3, 1, 2, d(0, 2))};
}

LieElement centralAgreed() {
    LieElement w;
    w += term(q(-1, 24), 1, 3, 1, 0, d(0, 4));
    w += term(q(-1, 360), 1, 5, -1, 0, q(3) * (d(1, 1) * d(1, 1)) - q(12) * (d(2, 1) * d(0, 1)));
    w += term(q(1, 30), 0, 5, 0, 1, q(2) * (d(0, 1) * d(1, 2)) - d(1, 1) * d(0, 2));
    w += term(q(18, 720), 1, 5, 1, 2, d(2, 2));
    w += term(q(1, 60), 0, 5, 2, 3, d(1, 3));
    return w;
}

LieElement centralPrintedDisputed() {
    LieElement w;
    w += term(q(-13, 360), 1, 5, -1, 0, d(0, 1) * d(0, 1) * d(0, 2));
    w += term(q(-127, 720), 1, 5, 1, 2, d(0, 1) * d(0, 3));
    w += term(q(-130, 720), 1, 5, 1, 2, d(0, 2) * d(0, 2));
    w += term(q(-13, 90), 1, 5, 3, 4, d(0, 4));
    return w;
}

LieElement centralDerivedDisputed() {
    LieElement w;
    w += term(q(-21, 360), 1, 5, -1, 0, d(0, 1) * d(0, 1) * d(0, 2));
    w += term(q(-48, 720), 1, 5, 1, 2, d(0, 1) * d(0, 3));
    w += term(q(24, 720), 1, 5, 1, 2, d(0, 2) * d(0, 2));
    w += term(q(-1, 120), 1, 5, 3, 4, d(0, 4));
    return w;
}

LieElement centralDerived() {
    return centralAgreed() + centralDerivedDisputed();
}

symlie::SplittingScheme scheme() {
    symlie::SplittingScheme s;
    s.outer = outerExponents();
    s.central = centralDerived();
    s.order = 5;
    return s;
}

}  // namespace mz::app::golden

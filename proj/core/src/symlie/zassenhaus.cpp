#include "mzsplit/symlie/zassenhaus.hpp"

#include <stdexcept>

#include "mzsplit/symlie/magnus.hpp"

namespace mz::symlie {

SplittingScheme zassenhausSplit(const LieElement& omega, int stages, Truncation rule,
                                const SbchCoefficients& coefficients) {
    if (stages < 1) throw std::invalid_argument("zassenhausSplit needs at least one stage");

    SplittingScheme scheme;
    scheme.order = rule.order;

    LieElement extracted = LieElement::term(1, 1, 1, 1, 2, ScalarField::one());
    LieElement central = truncate(omega, rule);
    scheme.outer.push_back(extracted);

    for (int k = 0; k < stages; ++k) {
        central = sbch(-extracted, central, rule, coefficients);
        const int hPower = 2 * k + 1;
        LieElement next =
            central.filter([hPower](const TermKey& key) { return key.hExp == hPower && key.epsExp - key.height == -1; });
        if (next.isZero()) break;
        if (k == stages - 1) central -= next;
        scheme.outer.push_back(next);
        extracted = std::move(next);
    }
    scheme.central = std::move(central);
    return scheme;
}

const SplittingScheme& derivedScheme() {
    static const SplittingScheme scheme = zassenhausSplit(magnusOmega5(), 2);
    return scheme;
}

}  // namespace mz::symlie

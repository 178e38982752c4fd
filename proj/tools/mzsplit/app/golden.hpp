#pragma once
// Expected symbolic results, transcribed by hand. Kept apart from the engine
// so that checks never compare the engine with itself.

#include <string>
#include <vector>

#include "mzsplit/symlie/lie_element.hpp"
#include "mzsplit/symlie/zassenhaus.hpp"

namespace mz::app::golden {

struct NamedIdentity {
    std::string name;
    symlie::LieElement computed;
    symlie::LieElement expected;
};

/// Closed-form bracket rules applied to sample fields f = V~0, g = V~1.
std::vector<NamedIdentity> bracketTableSamples();

/// Commutators of the quadrature generators B1, B2, B3.
std::vector<NamedIdentity> generatorCommutators();

/// [B1,[B1,[B1,B2]]] as printed, with 3 h^5 eps^2 <1|d5V1>. Summing the
/// preceding expansion gives 6; generatorCommutators() uses 6.
symlie::LieElement tripleCommutatorPrinted();

/// Truncated sixth-order Magnus exponent.
symlie::LieElement omega5();

/// Outer exponents W0, W1, W2.
std::vector<symlie::LieElement> outerExponents();

/// Central exponent with the coefficients this engine derives.
symlie::LieElement centralDerived();

/// Terms of the central exponent on which derivation and the printed splitting agree.
symlie::LieElement centralAgreed();

/// Printed pure-V~0 h^5 terms of the central exponent.
symlie::LieElement centralPrintedDisputed();
/// The same four monomials with derived coefficients.
symlie::LieElement centralDerivedDisputed();

/// outerExponents() + centralDerived(), order 5.
symlie::SplittingScheme scheme();

}  // namespace mz::app::golden

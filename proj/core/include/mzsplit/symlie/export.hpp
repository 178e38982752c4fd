#pragma once

#include <string>

#include <json.hpp>

#include "mzsplit/symlie/lie_element.hpp"
#include "mzsplit/symlie/zassenhaus.hpp"

namespace mz::symlie {

/// {"terms":[{"coeff":"p/q","iExp":..,"hExp":..,"epsExp":..,"height":..,
///            "field":[{"coeff":"p/q","atoms":[[order,slot],...]}]}]}
nlohmann::json toJson(const LieElement& e);
LieElement lieElementFromJson(const nlohmann::json& j);

/// {"order":5,"exponents":[{"role":"W0","weight":"1/2","terms":[...]}, ...,
///                         {"role":"central","weight":"1","terms":[...]}]}
nlohmann::json toJson(const SplittingScheme& s);
SplittingScheme schemeFromJson(const nlohmann::json& j);

/// Angle-bracket notation, e.g. "(1/12) i h^3 eps^-1 <0| 2(dV0)^2 - V2 >".
std::string prettyPrint(const LieElement& e);
std::string prettyPrint(const SplittingScheme& s);

std::string toLatex(const LieElement& e);
std::string toLatex(const SplittingScheme& s);

}  // namespace mz::symlie

#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "mzsplit/symlie/field.hpp"
#include "mzsplit/symlie/lie_element.hpp"

namespace mz::symlie {

/// Raised when a bracket [<k|f>, <l|g>] has no closed-form rule.
class TableIncompleteError : public std::runtime_error {
public:
    TableIncompleteError(int k, int l);
    int k() const noexcept { return k_; }
    int l() const noexcept { return l_; }

private:
    int k_;
    int l_;
};

/// Height pairs (k >= l) with a closed-form rule.
const std::vector<std::pair<int, int>>& supportedHeightPairs();
bool hasRule(int k, int l) noexcept;

/// [<k|f>, <l|g>] = sum_j <j|F_j>, returned as (j, F_j) pairs with nonzero F_j.
std::vector<std::pair<int, ScalarField>> jordanBracket(int k, const ScalarField& f, int l, const ScalarField& g);

/// Bilinear extension of jordanBracket; i, h and eps exponents add.
LieElement commute(const LieElement& a, const LieElement& b);

/// As commute, but term pairs whose every product term would be discarded by
/// `rule` are skipped (the bound uses height reduction, ht <= k + l - 1), and
/// the result is truncated.
LieElement commute(const LieElement& a, const LieElement& b, Truncation rule);

}  // namespace mz::symlie

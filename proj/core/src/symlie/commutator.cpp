#include "mzsplit/symlie/commutator.hpp"

#include <algorithm>
#include <string>

namespace mz::symlie {

namespace {

using Bracket = std::vector<std::pair<int, ScalarField>>;

ScalarField d(const ScalarField& f, int n) {
    return fieldDifferentiate(f, n);
}

Rational q(long num, long den = 1) {
    return Rational(num, den);
}

void push(Bracket& out, int height, ScalarField f) {
    if (!f.isZero()) out.emplace_back(height, std::move(f));
}

// Rules for k >= l. D = d/dx.
Bracket rule40(const ScalarField& f, const ScalarField& g) {
    Bracket out;
    push(out, 3, q(4) * (f * d(g, 1)));
    push(out, 1, q(-6) * (d(f, 1) * d(g, 2)) + q(-2) * (f * d(g, 3)));
    return out;
}

Bracket rule30(const ScalarField& f, const ScalarField& g) {
    Bracket out;
    push(out, 2, q(3) * (f * d(g, 1)));
    push(out, 0, q(-3, 2) * (d(f, 1) * d(g, 2)) + q(-1, 2) * (f * d(g, 3)));
    return out;
}

Bracket rule32(const ScalarField& f, const ScalarField& g) {
    Bracket out;
    push(out, 4, q(3) * (f * d(g, 1)) + q(-2) * (d(f, 1) * g));
    push(out, 2,
         q(-7, 2) * (f * d(g, 3)) + q(-15, 2) * (d(f, 1) * d(g, 2)) + q(3) * (d(f, 2) * d(g, 1)) +
             q(3, 2) * (d(f, 3) * g));
    push(out, 0,
         q(3, 4) * (f * d(g, 5)) + q(3) * (d(f, 1) * d(g, 4)) + q(7, 2) * (d(f, 2) * d(g, 3)) -
             d(f, 4) * d(g, 1) + q(-1, 4) * (d(f, 5) * g));
    return out;
}

Bracket rule22(const ScalarField& f, const ScalarField& g) {
    Bracket out;
    push(out, 3, q(2) * (f * d(g, 1)) + q(-2) * (d(f, 1) * g));
    push(out, 1,
         q(2) * (d(f, 2) * d(g, 1)) + q(-2) * (d(f, 1) * d(g, 2)) + d(f, 3) * g - f * d(g, 3));
    return out;
}

Bracket rule21(const ScalarField& f, const ScalarField& g) {
    Bracket out;
    push(out, 2, q(2) * (f * d(g, 1)) - d(f, 1) * g);
    push(out, 0, -(d(f, 1) * d(g, 2)) + q(-1, 2) * (f * d(g, 3)));
    return out;
}

Bracket rule20(const ScalarField& f, const ScalarField& g) {
    Bracket out;
    push(out, 1, q(2) * (f * d(g, 1)));
    return out;
}

Bracket rule11(const ScalarField& f, const ScalarField& g) {
    Bracket out;
    push(out, 1, f * d(g, 1) - d(f, 1) * g);
    return out;
}

Bracket rule10(const ScalarField& f, const ScalarField& g) {
    Bracket out;
    push(out, 0, f * d(g, 1));
    return out;
}

Bracket ordered(int k, const ScalarField& f, int l, const ScalarField& g) {
    switch (k * 10 + l) {
        case 40: return rule40(f, g);
        case 30: return rule30(f, g);
        case 32: return rule32(f, g);
        case 22: return rule22(f, g);
        case 21: return rule21(f, g);
        case 20: return rule20(f, g);
        case 11: return rule11(f, g);
        case 10: return rule10(f, g);
        case 0: return {};
        default: throw TableIncompleteError(k, l);
    }
}

}  // namespace

TableIncompleteError::TableIncompleteError(int k, int l)
    : std::runtime_error("identity table incomplete: no rule for height pair (" + std::to_string(k) + "," +
                         std::to_string(l) + ")"),
      k_(k),
      l_(l) {}

const std::vector<std::pair<int, int>>& supportedHeightPairs() {
    static const std::vector<std::pair<int, int>> pairs{{4, 0}, {3, 0}, {3, 2}, {2, 2}, {2, 1},
                                                        {2, 0}, {1, 1}, {1, 0}, {0, 0}};
    return pairs;
}

bool hasRule(int k, int l) noexcept {
    if (k < l) std::swap(k, l);
    const auto& pairs = supportedHeightPairs();
    return std::find(pairs.begin(), pairs.end(), std::make_pair(k, l)) != pairs.end();
}

std::vector<std::pair<int, ScalarField>> jordanBracket(int k, const ScalarField& f, int l, const ScalarField& g) {
    if (k < 0 || l < 0) throw std::invalid_argument("heights must be nonnegative");
    if (k >= l) return ordered(k, f, l, g);
    if (!hasRule(k, l)) throw TableIncompleteError(l, k);
    auto out = ordered(l, g, k, f);
    for (auto& [j, field] : out) field *= Rational(-1);
    return out;
}

namespace {

LieElement commuteImpl(const LieElement& a, const LieElement& b, const Truncation* rule) {
    LieElement out;
    for (const auto& [ka, fa] : a.groups()) {
        for (const auto& [kb, fb] : b.groups()) {
            const int hExp = ka.hExp + kb.hExp;
            const int epsExp = ka.epsExp + kb.epsExp;
            if (rule) {
                // Largest possible height is ka + kb - 1, i.e. the largest size class.
                const int maxHeight = std::max(ka.height + kb.height - 1, 0);
                if (rule->drops(hExp, epsExp, maxHeight)) continue;
            }
            for (auto& [j, field] : jordanBracket(ka.height, fa, kb.height, fb))
                out.add(1, ka.iExp + kb.iExp, hExp, epsExp, j, field);
        }
    }
    return rule ? truncate(out, *rule) : out;
}

}  // namespace

LieElement commute(const LieElement& a, const LieElement& b) {
    return commuteImpl(a, b, nullptr);
}

LieElement commute(const LieElement& a, const LieElement& b, Truncation rule) {
    return commuteImpl(a, b, &rule);
}

}  // namespace mz::symlie

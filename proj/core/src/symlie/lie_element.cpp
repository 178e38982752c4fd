#include "mzsplit/symlie/lie_element.hpp"

#include <algorithm>
#include <sstream>

namespace mz::symlie {

namespace {

using boost::multiprecision::cpp_int;

int mod4(int v) {
    return ((v % 4) + 4) % 4;
}

/// Rational content (gcd of numerators over lcm of denominators), signed so
/// that the first monomial of f / content is positive.
Rational contentOf(const ScalarField& f) {
    cpp_int num = 0;
    cpp_int den = 1;
    for (const auto& [key, c] : f.terms()) {
        num = gcd(num, boost::multiprecision::numerator(c));
        den = lcm(den, boost::multiprecision::denominator(c));
    }
    Rational content(abs(num), den);
    if (f.terms().begin()->second < 0) content = -content;
    return content;
}

}  // namespace

bool TermKeyOrder::operator()(const TermKey& a, const TermKey& b) const noexcept {
    if (a.hExp != b.hExp) return a.hExp < b.hExp;
    const int ca = a.epsExp - a.height;
    const int cb = b.epsExp - b.height;
    if (ca != cb) return ca < cb;
    if (a.height != b.height) return a.height < b.height;
    return a.iExp < b.iExp;
}

LieElement::LieElement(const AlgebraTerm& t) {
    add(t.coeff, t.iExp, t.hExp, t.epsExp, t.height, t.field);
}

LieElement LieElement::term(const Rational& coeff, int iExp, int hExp, int epsExp, int height,
                            const ScalarField& field) {
    LieElement e;
    e.add(coeff, iExp, hExp, epsExp, height, field);
    return e;
}

void LieElement::add(const Rational& c, int iExp, int hExp, int epsExp, int height, const ScalarField& field) {
    if (height < 0) throw std::invalid_argument("term height must be nonnegative");
    if (c == 0 || field.isZero()) return;
    int ip = mod4(iExp);
    Rational sign = 1;
    if (ip >= 2) {
        ip -= 2;
        sign = -1;
    }
    TermKey key{ip, hExp, epsExp, height};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, field * (c * sign));
        return;
    }
    it->second += field * (c * sign);
    if (it->second.isZero()) terms_.erase(it);
}

std::vector<AlgebraTerm> LieElement::terms() const {
    std::vector<AlgebraTerm> out;
    out.reserve(terms_.size());
    for (const auto& [key, f] : terms_) {
        Rational content = contentOf(f);
        Rational inverse = 1 / content;
        out.push_back({content, key.iExp, key.hExp, key.epsExp, key.height, f * inverse});
    }
    return out;
}

ScalarField LieElement::fieldAt(const TermKey& key) const {
    TermKey k = key;
    Rational sign = 1;
    k.iExp = mod4(k.iExp);
    if (k.iExp >= 2) {
        k.iExp -= 2;
        sign = -1;
    }
    auto it = terms_.find(k);
    return it == terms_.end() ? ScalarField{} : it->second * sign;
}

bool LieElement::skewParity() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) {
        return (kv.first.iExp + kv.first.height + 1) % 2 == 0;
    });
}

LieElement& LieElement::operator+=(const LieElement& other) {
    for (const auto& [k, f] : other.terms_) add(1, k.iExp, k.hExp, k.epsExp, k.height, f);
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& other) {
    for (const auto& [k, f] : other.terms_) add(-1, k.iExp, k.hExp, k.epsExp, k.height, f);
    return *this;
}

LieElement& LieElement::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, f] : terms_) f *= c;
    return *this;
}

LieElement LieElement::scaled(int iShift, int hShift, int epsShift) const {
    LieElement out;
    for (const auto& [k, f] : terms_) out.add(1, k.iExp + iShift, k.hExp + hShift, k.epsExp + epsShift, k.height, f);
    return out;
}

LieElement LieElement::filter(const std::function<bool(const TermKey&)>& keep) const {
    LieElement out;
    for (const auto& [k, f] : terms_)
        if (keep(k)) out.terms_.emplace(k, f);
    return out;
}

LieElement LieElement::withSlotZeroed(int slot) const {
    LieElement out;
    for (const auto& [k, f] : terms_) out.add(1, k.iExp, k.hExp, k.epsExp, k.height, f.withSlotZeroed(slot));
    return out;
}

int heightOf(const LieElement& a) {
    if (a.isZero()) throw UndefinedHeightError();
    int best = 0;
    for (const auto& [k, f] : a.groups()) best = std::max(best, k.height);
    return best;
}

Rational sizeExponent(const AlgebraTerm& t, const Rational& sigma) {
    if (sigma <= 0 || sigma > 1) throw std::domain_error("sigma must lie in (0, 1]");
    return sigma * t.hExp + t.epsExp - t.height;
}

LieElement truncate(const LieElement& a, Truncation rule) {
    return a.filter([rule](const TermKey& k) { return !rule.drops(k.hExp, k.epsExp, k.height); });
}

std::string toString(const AlgebraTerm& t) {
    std::ostringstream os;
    os << toString(t.coeff);
    const int ip = mod4(t.iExp);
    if (ip != 0) os << " i^" << ip;
    if (t.hExp != 0) os << " h^" << t.hExp;
    if (t.epsExp != 0) os << " eps^" << t.epsExp;
    os << " <" << t.height << "|" << toString(t.field) << ">";
    return os.str();
}

}  // namespace mz::symlie

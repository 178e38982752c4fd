#include "mzsplit/symlie/field.hpp"

#include <algorithm>
#include <sstream>

namespace mz::symlie {

std::string toString(const Rational& q) {
    return q.str();
}

Rational parseRational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(s));
        boost::multiprecision::cpp_int num(s.substr(0, slash));
        boost::multiprecision::cpp_int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in rational literal '" + s + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational literal '" + s + "'");
    }
}

DerivativeCapError::DerivativeCapError(int requested, int cap)
    : std::runtime_error("derivative order " + std::to_string(requested) + " exceeds cap " +
                         std::to_string(cap)),
      requested_(requested),
      cap_(cap) {}

ScalarField ScalarField::constant(const Rational& c) {
    ScalarField f;
    f.addTerm({}, c);
    return f;
}

ScalarField ScalarField::atom(int slot, int order) {
    if (slot < 0 || slot >= kSlotCount) throw std::invalid_argument("atom slot must be 0, 1 or 2");
    if (order < 0) throw std::invalid_argument("atom order must be nonnegative");
    ScalarField f;
    f.addTerm({DerivativeAtom{order, slot}}, 1);
    return f;
}

ScalarField ScalarField::fromMonomials(const std::vector<Monomial>& monomials) {
    ScalarField f;
    for (const auto& m : monomials) {
        AtomProduct key = m.factors;
        std::sort(key.begin(), key.end());
        f.addTerm(key, m.coeff);
    }
    return f;
}

bool ScalarField::isConstant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

std::vector<Monomial> ScalarField::monomials() const {
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (const auto& [key, c] : terms_) out.push_back({c, key});
    return out;
}

int ScalarField::maxOrder() const noexcept {
    int best = -1;
    for (const auto& [key, c] : terms_)
        for (const auto& a : key) best = std::max(best, a.order);
    return best;
}

bool ScalarField::involvesSlot(int slot) const noexcept {
    for (const auto& [key, c] : terms_)
        for (const auto& a : key)
            if (a.slot == slot) return true;
    return false;
}

void ScalarField::addTerm(const AtomProduct& key, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ScalarField& ScalarField::operator+=(const ScalarField& other) {
    for (const auto& [key, c] : other.terms_) addTerm(key, c);
    return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& other) {
    for (const auto& [key, c] : other.terms_) addTerm(key, -c);
    return *this;
}

ScalarField& ScalarField::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, value] : terms_) value *= c;
    return *this;
}

ScalarField operator*(const ScalarField& a, const ScalarField& b) {
    ScalarField out;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            AtomProduct key;
            key.reserve(ka.size() + kb.size());
            std::merge(ka.begin(), ka.end(), kb.begin(), kb.end(), std::back_inserter(key));
            out.addTerm(key, ca * cb);
        }
    }
    return out;
}

ScalarField ScalarField::withSlotZeroed(int slot) const {
    ScalarField out;
    for (const auto& [key, c] : terms_) {
        bool touches = std::any_of(key.begin(), key.end(), [slot](const DerivativeAtom& a) { return a.slot == slot; });
        if (!touches) out.addTerm(key, c);
    }
    return out;
}

ScalarField fieldMultiply(const ScalarField& f, const ScalarField& g) {
    return f * g;
}

ScalarField fieldDifferentiate(const ScalarField& f, int times, int cap) {
    if (times < 0) throw std::invalid_argument("differentiation count must be nonnegative");
    ScalarField current = f;
    for (int pass = 0; pass < times; ++pass) {
        std::vector<Monomial> next;
        for (const auto& [key, c] : current.terms()) {
            for (std::size_t i = 0; i < key.size(); ++i) {
                // Leibniz: bump one factor at a time; equal neighbours are merged on insertion.
                AtomProduct bumped = key;
                bumped[i].order += 1;
                if (bumped[i].order > cap) throw DerivativeCapError(bumped[i].order, cap);
                next.push_back({c, std::move(bumped)});
            }
        }
        current = ScalarField::fromMonomials(next);
    }
    return current;
}

namespace {

std::string atomName(const DerivativeAtom& a) {
    std::string name;
    if (a.order == 1)
        name = "d";
    else if (a.order > 1)
        name = "d" + std::to_string(a.order);
    return name + "V" + std::to_string(a.slot);
}

std::string productString(const AtomProduct& key) {
    std::ostringstream os;
    for (std::size_t i = 0; i < key.size();) {
        std::size_t j = i;
        while (j < key.size() && key[j] == key[i]) ++j;
        const auto count = j - i;
        if (count == 1 && key[i].order == 0)
            os << atomName(key[i]);
        else
            os << "(" << atomName(key[i]) << ")";
        if (count > 1) os << "^" << count;
        i = j;
    }
    return os.str();
}

}  // namespace

std::string toString(const ScalarField& f) {
    if (f.isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : f.terms()) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (key.empty()) {
            os << toString(mag);
            continue;
        }
        if (mag != 1) {
            if (boost::multiprecision::denominator(mag) != 1)
                os << "(" << toString(mag) << ")";
            else
                os << toString(mag);
        }
        os << productString(key);
    }
    return os.str();
}

}  // namespace mz::symlie

#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mz::symlie {

using Rational = boost::multiprecision::cpp_rational;

std::string toString(const Rational& q);
/// Parses "p", "-p" or "p/q".
Rational parseRational(std::string_view text);

/// Slots of the quadrature potentials: V~0, V~1, V~2.
inline constexpr int kSlotV0 = 0;
inline constexpr int kSlotV1 = 1;
inline constexpr int kSlotV2 = 2;
inline constexpr int kSlotCount = 3;

inline constexpr int kDefaultDerivativeCap = 8;

class DerivativeCapError : public std::runtime_error {
public:
    DerivativeCapError(int requested, int cap);
    int requested() const noexcept { return requested_; }
    int cap() const noexcept { return cap_; }

private:
    int requested_;
    int cap_;
};

/// The symbol d^order/dx^order V~slot.
struct DerivativeAtom {
    int order = 0;
    int slot = 0;

    friend bool operator==(const DerivativeAtom&, const DerivativeAtom&) = default;
    friend std::strong_ordering operator<=>(const DerivativeAtom& a, const DerivativeAtom& b) {
        if (auto c = a.slot <=> b.slot; c != 0) return c;
        return a.order <=> b.order;
    }
};

/// Sorted multiset of atoms; the empty list is the constant function 1.
using AtomProduct = std::vector<DerivativeAtom>;

struct Monomial {
    Rational coeff;
    AtomProduct factors;
};

/// Exact polynomial in derivative atoms with rational coefficients, kept in
/// canonical form: like monomials merged, zero coefficients removed.
class ScalarField {
public:
    using TermMap = std::map<AtomProduct, Rational>;

    ScalarField() = default;

    static ScalarField constant(const Rational& c);
    static ScalarField one() { return constant(1); }
    static ScalarField atom(int slot, int order = 0);
    static ScalarField fromMonomials(const std::vector<Monomial>& monomials);

    bool isZero() const noexcept { return terms_.empty(); }
    bool isConstant() const noexcept;
    std::size_t size() const noexcept { return terms_.size(); }
    const TermMap& terms() const noexcept { return terms_; }
    std::vector<Monomial> monomials() const;

    /// Highest derivative order over all atoms, -1 for constants.
    int maxOrder() const noexcept;
    bool involvesSlot(int slot) const noexcept;

    ScalarField& operator+=(const ScalarField& other);
    ScalarField& operator-=(const ScalarField& other);
    ScalarField& operator*=(const Rational& c);

    friend ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
    friend ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
    friend ScalarField operator-(ScalarField a) { return a *= Rational(-1); }
    friend ScalarField operator*(ScalarField a, const Rational& c) { return a *= c; }
    friend ScalarField operator*(const Rational& c, ScalarField a) { return a *= c; }
    friend ScalarField operator*(const ScalarField& a, const ScalarField& b);

    friend bool operator==(const ScalarField&, const ScalarField&) = default;

    /// Every monomial touching one of the given slots is removed (the slot is set to zero).
    ScalarField withSlotZeroed(int slot) const;

private:
    void addTerm(const AtomProduct& key, const Rational& c);

    TermMap terms_;
};

ScalarField fieldMultiply(const ScalarField& f, const ScalarField& g);

/// d^times/dx^times f by the Leibniz rule. Throws DerivativeCapError if an
/// atom would exceed `cap`.
ScalarField fieldDifferentiate(const ScalarField& f, int times = 1, int cap = kDefaultDerivativeCap);

/// Human-readable form such as "2(dV0)^2 - V2".
std::string toString(const ScalarField& f);

}  // namespace mz::symlie

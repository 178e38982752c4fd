#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mzsplit/symlie/field.hpp"

namespace mz::symlie {

/// coeff * i^iExp * h^hExp * eps^epsExp * <height|field>
struct AlgebraTerm {
    Rational coeff = 1;
    int iExp = 0;
    int hExp = 0;
    int epsExp = 0;
    int height = 0;
    ScalarField field;

    /// i^iExp <k|f> is skew-Hermitian iff iExp = k + 1 (mod 2).
    bool skewParity() const noexcept { return ((iExp - height - 1) % 2 + 2) % 2 == 0; }
};

/// Grouping key of a canonical LieElement. iExp is reduced to {0, 1}; the
/// sign of i^2 is absorbed into the field.
struct TermKey {
    int iExp = 0;
    int hExp = 0;
    int epsExp = 0;
    int height = 0;

    friend bool operator==(const TermKey&, const TermKey&) = default;
};

/// Orders keys by h power, then by asymptotic class (epsExp - height), then
/// by height descending; gives the print order used throughout.
struct TermKeyOrder {
    bool operator()(const TermKey& a, const TermKey& b) const noexcept;
};

class LieElement {
public:
    using TermMap = std::map<TermKey, ScalarField, TermKeyOrder>;

    LieElement() = default;
    explicit LieElement(const AlgebraTerm& term);
    static LieElement term(const Rational& coeff, int iExp, int hExp, int epsExp, int height, const ScalarField& field);

    bool isZero() const noexcept { return terms_.empty(); }
    std::size_t termCount() const noexcept { return terms_.size(); }
    const TermMap& groups() const noexcept { return terms_; }

    /// Canonical terms with the rational content of each field pulled into
    /// coeff (sign fixed so the field's first monomial is positive).
    std::vector<AlgebraTerm> terms() const;

    /// Field attached to a key, zero if absent.
    ScalarField fieldAt(const TermKey& key) const;

    bool skewParity() const noexcept;

    LieElement& operator+=(const LieElement& other);
    LieElement& operator-=(const LieElement& other);
    LieElement& operator*=(const Rational& c);

    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator-(LieElement a) { return a *= Rational(-1); }
    friend LieElement operator*(LieElement a, const Rational& c) { return a *= c; }
    friend LieElement operator*(const Rational& c, LieElement a) { return a *= c; }

    friend bool operator==(const LieElement& a, const LieElement& b) { return a.terms_ == b.terms_; }

    /// Multiplies every term by i^iShift h^hShift eps^epsShift.
    LieElement scaled(int iShift, int hShift, int epsShift) const;

    LieElement filter(const std::function<bool(const TermKey&)>& keep) const;

    /// Sets V~slot (and all its derivatives) to zero.
    LieElement withSlotZeroed(int slot) const;

    /// Adds c * i^iExp h^hExp eps^epsExp <height|field>.
    void add(const Rational& c, int iExp, int hExp, int epsExp, int height, const ScalarField& field);

private:
    TermMap terms_;
};

class UndefinedHeightError : public std::domain_error {
public:
    UndefinedHeightError() : std::domain_error("height of the zero element is undefined") {}
};

int heightOf(const LieElement& a);

/// sigma*hExp + epsExp - height: the eps exponent of the term's size when h = O(eps^sigma).
Rational sizeExponent(const AlgebraTerm& t, const Rational& sigma);

/// Discards terms that are O(eps^{(order+2)sigma - 1}) for every sigma in (0, 1].
/// Checked at both endpoints: epsExp - height + 1 >= 0 and
/// hExp + epsExp - height - (order + 1) >= 0.
struct Truncation {
    int order = 5;

    bool drops(int hExp, int epsExp, int height) const noexcept {
        const int cls = epsExp - height;
        return cls + 1 >= 0 && hExp + cls - (order + 1) >= 0;
    }
};

LieElement truncate(const LieElement& a, Truncation rule = {});

std::string toString(const AlgebraTerm& t);

}  // namespace mz::symlie

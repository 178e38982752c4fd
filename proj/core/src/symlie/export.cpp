#include "mzsplit/symlie/export.hpp"

#include <sstream>
#include <stdexcept>

namespace mz::symlie {

namespace {

using nlohmann::json;

std::string roleName(std::size_t index) {
    return "W" + std::to_string(index);
}

json fieldToJson(const ScalarField& f) {
    json arr = json::array();
    for (const auto& [key, c] : f.terms()) {
        json atoms = json::array();
        for (const auto& a : key) atoms.push_back({a.order, a.slot});
        arr.push_back({{"coeff", toString(c)}, {"atoms", atoms}});
    }
    return arr;
}

ScalarField fieldFromJson(const json& arr) {
    if (!arr.is_array()) throw std::invalid_argument("field must be an array of monomials");
    std::vector<Monomial> monomials;
    for (const auto& m : arr) {
        Monomial mono;
        mono.coeff = parseRational(m.at("coeff").get<std::string>());
        for (const auto& a : m.at("atoms")) {
            if (!a.is_array() || a.size() != 2) throw std::invalid_argument("atom must be [order, slot]");
            const int order = a[0].get<int>();
            const int slot = a[1].get<int>();
            if (order < 0 || slot < 0 || slot >= kSlotCount) throw std::invalid_argument("atom out of range");
            mono.factors.push_back({order, slot});
        }
        monomials.push_back(std::move(mono));
    }
    return ScalarField::fromMonomials(monomials);
}

bool hasDenominator(const Rational& q) {
    return boost::multiprecision::denominator(q) != 1;
}

std::string power(const char* symbol, int e) {
    if (e == 0) return "";
    if (e == 1) return std::string(" ") + symbol;
    return std::string(" ") + symbol + "^" + std::to_string(e);
}

std::string latexPower(const char* symbol, int e) {
    if (e == 0) return "";
    if (e == 1) return symbol;
    return std::string(symbol) + "^{" + std::to_string(e) + "}";
}

std::string latexField(const ScalarField& f) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : f.terms()) {
        Rational mag = c < 0 ? Rational(-c) : c;
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        if (mag != 1 || key.empty()) {
            if (hasDenominator(mag))
                os << "\\frac{" << boost::multiprecision::numerator(mag) << "}{"
                   << boost::multiprecision::denominator(mag) << "}";
            else
                os << mag.str();
        }
        for (std::size_t i = 0; i < key.size();) {
            std::size_t j = i;
            while (j < key.size() && key[j] == key[i]) ++j;
            std::string atom = "\\tilde V_" + std::to_string(key[i].slot);
            if (key[i].order == 1) atom = "\\partial_x " + atom;
            if (key[i].order > 1) atom = "\\partial_x^{" + std::to_string(key[i].order) + "} " + atom;
            os << "(" << atom << ")";
            if (j - i > 1) os << "^{" << (j - i) << "}";
            i = j;
        }
    }
    return os.str();
}

}  // namespace

json toJson(const LieElement& e) {
    json terms = json::array();
    for (const auto& t : e.terms()) {
        terms.push_back({{"coeff", toString(t.coeff)},
                         {"iExp", t.iExp},
                         {"hExp", t.hExp},
                         {"epsExp", t.epsExp},
                         {"height", t.height},
                         {"field", fieldToJson(t.field)}});
    }
    return json{{"terms", terms}};
}

LieElement lieElementFromJson(const json& j) {
    LieElement e;
    for (const auto& t : j.at("terms")) {
        const int height = t.at("height").get<int>();
        if (height < 0) throw std::invalid_argument("negative height in scheme JSON");
        e.add(parseRational(t.at("coeff").get<std::string>()), t.at("iExp").get<int>(), t.at("hExp").get<int>(),
              t.at("epsExp").get<int>(), height, fieldFromJson(t.at("field")));
    }
    return e;
}

json toJson(const SplittingScheme& s) {
    json exponents = json::array();
    for (std::size_t k = 0; k < s.outer.size(); ++k) {
        json entry = toJson(s.outer[k]);
        entry["role"] = roleName(k);
        entry["weight"] = "1/2";
        exponents.push_back(std::move(entry));
    }
    json central = toJson(s.central);
    central["role"] = "central";
    central["weight"] = "1";
    exponents.push_back(std::move(central));
    return json{{"order", s.order}, {"exponents", exponents}};
}

SplittingScheme schemeFromJson(const json& j) {
    SplittingScheme s;
    s.order = j.at("order").get<int>();
    const auto& exponents = j.at("exponents");
    if (!exponents.is_array() || exponents.empty()) throw std::invalid_argument("scheme needs at least one exponent");
    for (std::size_t k = 0; k + 1 < exponents.size(); ++k) {
        if (exponents[k].at("weight").get<std::string>() != "1/2")
            throw std::invalid_argument("outer exponents carry weight 1/2");
        s.outer.push_back(lieElementFromJson(exponents[k]));
    }
    const auto& last = exponents.back();
    if (last.at("weight").get<std::string>() != "1") throw std::invalid_argument("central exponent carries weight 1");
    s.central = lieElementFromJson(last);
    return s;
}

std::string prettyPrint(const LieElement& e) {
    if (e.isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : e.terms()) {
        Rational mag = t.coeff < 0 ? Rational(-t.coeff) : t.coeff;
        os << (first ? (t.coeff < 0 ? "-" : "") : (t.coeff < 0 ? " - " : " + "));
        first = false;
        std::string head;
        if (mag != 1) head = hasDenominator(mag) ? "(" + mag.str() + ")" : mag.str();
        if (t.iExp % 2 == 1) head += head.empty() ? "i" : " i";
        head += power("h", t.hExp);
        head += power("eps", t.epsExp);
        if (!head.empty() && head.front() == ' ') head.erase(0, 1);
        os << head << (head.empty() ? "" : " ") << "<" << t.height << "| " << toString(t.field) << " >";
    }
    return os.str();
}

std::string prettyPrint(const SplittingScheme& s) {
    std::ostringstream os;
    for (std::size_t k = 0; k < s.outer.size(); ++k) os << roleName(k) << " = " << prettyPrint(s.outer[k]) << "\n";
    os << "central = " << prettyPrint(s.central) << "\n";
    return os.str();
}

std::string toLatex(const LieElement& e) {
    if (e.isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : e.terms()) {
        Rational mag = t.coeff < 0 ? Rational(-t.coeff) : t.coeff;
        os << (first ? (t.coeff < 0 ? "-" : "") : (t.coeff < 0 ? " - " : " + "));
        first = false;
        if (mag != 1) {
            if (hasDenominator(mag))
                os << "\\frac{" << boost::multiprecision::numerator(mag) << "}{"
                   << boost::multiprecision::denominator(mag) << "}";
            else
                os << mag.str();
        }
        if (t.iExp % 2 == 1) os << "\\mathrm{i}";
        os << latexPower("h", t.hExp) << latexPower("\\varepsilon", t.epsExp);
        os << "\\langle " << t.height << " | " << latexField(t.field) << " \\rangle";
    }
    return os.str();
}

std::string toLatex(const SplittingScheme& s) {
    std::ostringstream os;
    os << "\\begin{align*}\n";
    for (std::size_t k = 0; k < s.outer.size(); ++k)
        os << "W^{[" << k << "]} &= " << toLatex(s.outer[k]) << " \\\\\n";
    os << "\\mathcal{W}^{[" << s.outer.size() << "]} &= " << toLatex(s.central) << "\n";
    os << "\\end{align*}\n";
    return os.str();
}

}  // namespace mz::symlie

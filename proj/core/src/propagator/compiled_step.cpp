#include "mzsplit/propagator/compiled_step.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace mz::propagator {

using grid::Complex;

std::string_view toString(SchemeKind kind) noexcept {
    switch (kind) {
        case SchemeKind::Strang: return "strang";
        case SchemeKind::Mid: return "mid";
        case SchemeKind::Full: return "full";
    }
    return "?";
}

std::optional<SchemeKind> parseSchemeKind(std::string_view name) noexcept {
    if (name == "strang") return SchemeKind::Strang;
    if (name == "mid") return SchemeKind::Mid;
    if (name == "full") return SchemeKind::Full;
    return std::nullopt;
}

std::string_view toString(FactorMethod m) noexcept {
    switch (m) {
        case FactorMethod::Fourier: return "fourier";
        case FactorMethod::Diagonal: return "diagonal";
        case FactorMethod::Lanczos: return "lanczos";
    }
    return "?";
}

namespace {

Complex iPower(int e) {
    switch (((e % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

}  // namespace

Eigen::VectorXd evaluateField(const symlie::ScalarField& f, const potential::QuadratureSample& sample,
                              const grid::GridPtr& grid) {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(grid->size()));
    for (const auto& [atoms, c] : f.terms()) {
        Eigen::VectorXd product = Eigen::VectorXd::Constant(out.size(), static_cast<double>(c));
        for (const auto& a : atoms) product.array() *= sample.derivative(a.slot, a.order).values.array();
        out += product;
    }
    return out;
}

Eigen::VectorXcd Factor::applyExponent(const grid::GridPtr& grid, const Eigen::VectorXcd& v) const {
    const auto& g = *grid;
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
    Eigen::VectorXcd vHat;
    for (const auto& p : parts) {
        const Complex phase = iPower(p.iExp);
        const auto f = p.field.values.cast<Complex>().array();
        if (p.height == 0) {
            out.array() += phase * f * v.array();
            continue;
        }
        if (vHat.size() == 0) vHat = grid::toBins(g, v);
        Eigen::VectorXcd symbol(v.size());
        for (std::size_t q = 0; q < g.size(); ++q)
            symbol[static_cast<Eigen::Index>(q)] =
                std::pow(Complex(0, std::numbers::pi * static_cast<double>(g.modeOfBin(q))), p.height);
        const Eigen::VectorXcd kv = grid::fromBins(g, (vHat.array() * symbol.array()).matrix());
        Eigen::VectorXcd fvHat = grid::toBins(g, (f * v.array()).matrix());
        const Eigen::VectorXcd kfv = grid::fromBins(g, (fvHat.array() * symbol.array()).matrix());
        out.array() += (0.5 * phase) * (f * kv.array() + kfv.array());
    }
    return out;
}

grid::WaveFunction Factor::apply(const grid::WaveFunction& v) const {
    switch (method) {
        case FactorMethod::Fourier: return grid::applyFourierMultiplier(v, fourier);
        case FactorMethod::Diagonal:
            return grid::WaveFunction(v.grid, (diagonal.array() * v.values.array()).matrix());
        case FactorMethod::Lanczos: {
            if (parts.empty()) return v;
            const auto g = v.grid;
            return lanczosExpApply([this, &g](const Eigen::VectorXcd& x) { return applyExponent(g, x); }, v,
                                   iterations);
        }
    }
    throw std::logic_error("unknown factor method");
}

grid::WaveFunction CompiledStep::apply(const grid::WaveFunction& v) const {
    grid::WaveFunction u = v;
    // rightmost factor acts first; the sequence is palindromic anyway
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) u = it->apply(u);
    return u;
}

bool CompiledStep::palindromic() const {
    for (std::size_t i = 0, j = factors.size(); i < j--; ++i)
        if (factors[i].label != factors[j].label || factors[i].weight != factors[j].weight) return false;
    return true;
}

Factor compileExponent(const symlie::LieElement& exponent, double weight, std::string label, int lanczosIterations,
                       const potential::QuadratureSample& sample, double eps, double h, const grid::GridPtr& grid) {
    Factor factor;
    factor.label = std::move(label);
    factor.weight = weight;

    // merge terms per height; skew parity fixes one i-power per height
    std::map<int, JordanPart> byHeight;
    bool allConstant = true;
    bool allFlat = true;
    for (const auto& [key, field] : exponent.groups()) {
        const double scale = weight * std::pow(h, key.hExp) * std::pow(eps, key.epsExp);
        auto [it, inserted] = byHeight.try_emplace(key.height);
        JordanPart& part = it->second;
        if (inserted) {
            part.height = key.height;
            part.iExp = key.iExp;
            part.field = grid::GridField(grid);
        } else if (part.iExp != key.iExp) {
            throw std::logic_error("exponent violates skew parity at height " + std::to_string(key.height));
        }
        part.field.values += scale * evaluateField(field, sample, grid);
        allConstant = allConstant && field.isConstant();
        allFlat = allFlat && key.height == 0;
    }

    if (allFlat) {
        factor.method = FactorMethod::Diagonal;
        factor.diagonal = Eigen::VectorXcd::Ones(static_cast<Eigen::Index>(grid->size()));
        for (const auto& [k, part] : byHeight)
            factor.diagonal.array() *= (iPower(part.iExp) * part.field.values.cast<Complex>().array()).exp();
        return factor;
    }
    if (allConstant) {
        factor.method = FactorMethod::Fourier;
        Eigen::VectorXcd symbol = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(grid->size()));
        for (const auto& [k, part] : byHeight) {
            const double c = part.field.values[0];
            for (std::size_t q = 0; q < grid->size(); ++q)
                symbol[static_cast<Eigen::Index>(q)] +=
                    iPower(part.iExp) * c *
                    std::pow(Complex(0, std::numbers::pi * static_cast<double>(grid->modeOfBin(q))), k);
        }
        factor.fourier = symbol.array().exp();
        return factor;
    }
    factor.method = FactorMethod::Lanczos;
    factor.iterations = lanczosIterations;
    for (auto& [k, part] : byHeight)
        if (!part.field.values.isZero(0.0)) factor.parts.push_back(std::move(part));
    return factor;
}

CompiledStep compileStep(const StepOptions& options, const potential::QuadratureSample& sample, double h,
                         const grid::GridPtr& grid) {
    if (!(options.eps > 0) || !(h > 0)) throw std::invalid_argument("eps and h must be positive");
    const symlie::SplittingScheme& s = options.symbolic ? *options.symbolic : symlie::derivedScheme();
    if (s.outer.size() < 2) throw std::invalid_argument("splitting scheme needs at least W0 and W1");

    auto make = [&](const symlie::LieElement& e, double w, std::string label, int iters) {
        return compileExponent(e, w, std::move(label), iters, sample, options.eps, h, grid);
    };

    std::vector<Factor> left;
    Factor middle;
    switch (options.scheme) {
        case SchemeKind::Strang:
            left.push_back(make(s.outer[0], 0.5, "W0", options.outerLanczos));
            middle = make(s.outer[1], 1.0, "W1", options.outerLanczos);
            break;
        case SchemeKind::Mid:
            if (s.outer.size() < 3) throw std::invalid_argument("mid scheme needs W2");
            left.push_back(make(s.outer[0], 0.5, "W0", options.outerLanczos));
            left.push_back(make(s.outer[1], 0.5, "W1", options.outerLanczos));
            middle = make(s.outer[2], 1.0, "W2", options.outerLanczos);
            break;
        case SchemeKind::Full:
            for (std::size_t k = 0; k < s.outer.size(); ++k)
                left.push_back(make(s.outer[k], 0.5, "W" + std::to_string(k), options.outerLanczos));
            middle = make(s.central, 1.0, "central", options.centralLanczos);
            break;
    }

    CompiledStep step;
    step.factors = left;
    step.factors.push_back(std::move(middle));
    step.factors.insert(step.factors.end(), left.rbegin(), left.rend());
    return step;
}

}  // namespace mz::propagator

#include "app/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

namespace mz::app {

using nlohmann::json;

ConfigError::ConfigError(std::string pointer, const std::string& message)
    : std::runtime_error("config " + (pointer.empty() ? std::string("/") : pointer) + ": " + message),
      pointer_(std::move(pointer)) {}

namespace {

void requireObject(const json& j, const std::string& at) {
    if (!j.is_object()) throw ConfigError(at, "expected an object");
}

void rejectUnknown(const json& j, const std::string& at, const std::set<std::string>& known) {
    for (const auto& [key, value] : j.items())
        if (!known.count(key)) throw ConfigError(at + "/" + key, "unknown key");
}

double number(const json& j, const std::string& at) {
    if (!j.is_number()) throw ConfigError(at, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ConfigError(at, "must be finite");
    return v;
}

int integer(const json& j, const std::string& at) {
    if (!j.is_number_integer()) throw ConfigError(at, "expected an integer");
    return j.get<int>();
}

std::string text(const json& j, const std::string& at) {
    if (!j.is_string()) throw ConfigError(at, "expected a string");
    return j.get<std::string>();
}

void positive(double v, const std::string& at) {
    if (!(v > 0)) throw ConfigError(at, "must be positive");
}

PotentialSpec parsePotential(const json& j, const std::string& at) {
    requireObject(j, at);
    rejectUnknown(j, at, {"builtin", "expr", "c"});
    PotentialSpec p;
    const bool hasBuiltin = j.contains("builtin");
    const bool hasExpr = j.contains("expr");
    if (hasBuiltin == hasExpr) throw ConfigError(at, "exactly one of builtin or expr is required");
    if (hasExpr) {
        p.builtin.clear();
        p.expr = text(j["expr"], at + "/expr");
        if (j.contains("c")) throw ConfigError(at + "/c", "only valid with builtin constant");
        try {
            (void)expr::parseExpr(p.expr);
        } catch (const expr::ParseError& e) {
            throw ConfigError(at + "/expr", e.what());
        }
        return p;
    }
    p.builtin = text(j["builtin"], at + "/builtin");
    static const std::set<std::string> builtins{"zero", "constant", "lattice", "pulse", "lattice_with_pulse"};
    if (!builtins.count(p.builtin)) throw ConfigError(at + "/builtin", "unknown builtin '" + p.builtin + "'");
    if (p.builtin == "constant") {
        if (!j.contains("c")) throw ConfigError(at + "/c", "required for builtin constant");
        p.c = number(j["c"], at + "/c");
    } else if (j.contains("c")) {
        throw ConfigError(at + "/c", "only valid with builtin constant");
    }
    return p;
}

GaussianSpec parseInitial(const json& j, const std::string& at) {
    requireObject(j, at);
    rejectUnknown(j, at, {"gaussian"});
    GaussianSpec g;
    if (!j.contains("gaussian")) return g;
    const json& q = j["gaussian"];
    const std::string gat = at + "/gaussian";
    requireObject(q, gat);
    rejectUnknown(q, gat, {"x0", "k0", "delta", "deltaOverEps"});
    if (q.contains("x0")) g.x0 = number(q["x0"], gat + "/x0");
    if (q.contains("k0")) g.k0 = number(q["k0"], gat + "/k0");
    if (q.contains("delta") && q.contains("deltaOverEps"))
        throw ConfigError(gat, "give delta or deltaOverEps, not both");
    if (q.contains("delta")) {
        g.delta = number(q["delta"], gat + "/delta");
        positive(g.delta, gat + "/delta");
    }
    if (q.contains("deltaOverEps")) {
        g.deltaOverEps = number(q["deltaOverEps"], gat + "/deltaOverEps");
        positive(*g.deltaOverEps, gat + "/deltaOverEps");
    }
    return g;
}

SweepSpec parseSweep(const json& j, const std::string& at) {
    requireObject(j, at);
    rejectUnknown(j, at, {"epsilon", "hOverEps"});
    if (j.size() != 1) throw ConfigError(at, "exactly one of epsilon or hOverEps is required");
    SweepSpec s;
    s.variable = j.begin().key();
    const std::string vat = at + "/" + s.variable;
    const json& list = j.begin().value();
    if (!list.is_array()) throw ConfigError(vat, "expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
        const double v = number(list[i], vat + "/" + std::to_string(i));
        positive(v, vat + "/" + std::to_string(i));
        if (s.variable == "epsilon" && v >= 1) throw ConfigError(vat + "/" + std::to_string(i), "epsilon must lie in (0, 1)");
        s.values.push_back(v);
    }
    if (s.values.size() < 3) throw ConfigError(vat, "a sweep needs at least 3 values");
    return s;
}

ReferenceSpec parseReference(const json& j, const std::string& at) {
    requireObject(j, at);
    rejectUnknown(j, at,
                  {"stepRatio", "gridRatio", "refinementFactor", "maxRefinements", "tailTolerance",
                   "agreementTolerance", "extrapolationLevels"});
    ReferenceSpec r;
    if (j.contains("stepRatio")) {
        r.stepRatio = number(j["stepRatio"], at + "/stepRatio");
        if (r.stepRatio < 1) throw ConfigError(at + "/stepRatio", "must be at least 1");
    }
    if (j.contains("gridRatio")) {
        r.gridRatio = number(j["gridRatio"], at + "/gridRatio");
        if (r.gridRatio < 1) throw ConfigError(at + "/gridRatio", "must be at least 1");
    }
    if (j.contains("refinementFactor")) {
        r.refinementFactor = integer(j["refinementFactor"], at + "/refinementFactor");
        if (r.refinementFactor < 2) throw ConfigError(at + "/refinementFactor", "must be at least 2");
    }
    if (j.contains("maxRefinements")) {
        r.maxRefinements = integer(j["maxRefinements"], at + "/maxRefinements");
        if (r.maxRefinements < 0) throw ConfigError(at + "/maxRefinements", "must be nonnegative");
    }
    if (j.contains("tailTolerance")) {
        r.tailTolerance = number(j["tailTolerance"], at + "/tailTolerance");
        positive(r.tailTolerance, at + "/tailTolerance");
    }
    if (j.contains("agreementTolerance")) {
        r.agreementTolerance = number(j["agreementTolerance"], at + "/agreementTolerance");
        positive(r.agreementTolerance, at + "/agreementTolerance");
    }
    if (j.contains("extrapolationLevels")) {
        r.extrapolationLevels = integer(j["extrapolationLevels"], at + "/extrapolationLevels");
        if (r.extrapolationLevels < 0) throw ConfigError(at + "/extrapolationLevels", "must be nonnegative");
    }
    return r;
}

}  // namespace

potential::PotentialModel PotentialSpec::model() const {
    if (!expr.empty()) return potential::PotentialModel::expression(expr::parseExpr(expr));
    if (builtin == "zero") return potential::PotentialModel::zero();
    if (builtin == "constant") return potential::PotentialModel::constant(c);
    if (builtin == "lattice") return potential::PotentialModel::lattice();
    if (builtin == "pulse") return potential::PotentialModel::pulse();
    if (builtin == "lattice_with_pulse") return potential::PotentialModel::latticeWithPulse();
    throw std::invalid_argument("unknown builtin potential '" + builtin + "'");
}

json PotentialSpec::toJson() const {
    if (!expr.empty()) return {{"expr", expr}};
    json j{{"builtin", builtin}};
    if (builtin == "constant") j["c"] = c;
    return j;
}

std::size_t oddCeil(double x) {
    auto m = static_cast<std::size_t>(std::ceil(x - 1e-9));
    if (m < 1) m = 1;
    return m % 2 == 1 ? m : m + 1;
}

std::size_t RunConfig::M() const {
    return oddCeil(MTimesEps / epsilon);
}

long RunConfig::steps() const {
    if (T <= 0) return 0;
    return static_cast<long>(std::ceil(T / h() - 1e-9));
}

propagator::StepOptions RunConfig::stepOptions() const {
    propagator::StepOptions o;
    o.scheme = scheme;
    o.eps = epsilon;
    o.outerLanczos = outerLanczos;
    o.centralLanczos = centralLanczos;
    return o;
}

grid::WaveFunction RunConfig::initialState(const grid::GridPtr& g) const {
    return grid::gaussianWavePacket(g, initial.x0, initial.k0, initial.deltaFor(epsilon));
}

reference::ReferenceConfig RunConfig::referenceConfig() const {
    reference::ReferenceConfig r;
    r.eps = epsilon;
    r.hR = h() / reference.stepRatio;
    r.MR = oddCeil(reference.gridRatio * static_cast<double>(M()));
    r.refinementFactor = reference.refinementFactor;
    r.maxRefinements = reference.maxRefinements;
    r.tailTolerance = reference.tailTolerance;
    r.agreementTolerance = reference.agreementTolerance;
    r.extrapolationLevels = reference.extrapolationLevels;
    return r;
}

json RunConfig::toJson() const {
    json gaussian{{"x0", initial.x0}, {"k0", initial.k0}};
    if (initial.deltaOverEps)
        gaussian["deltaOverEps"] = *initial.deltaOverEps;
    else
        gaussian["delta"] = initial.delta;
    json j{{"epsilon", epsilon},
           {"T", T},
           {"hOverEps", hOverEps},
           {"MTimesEps", MTimesEps},
           {"sigma", sigma},
           {"scheme", std::string(propagator::toString(scheme))},
           {"potential", potential.toJson()},
           {"initial", {{"gaussian", gaussian}}},
           {"outDir", outDir},
           {"snapshotEvery", snapshotEvery},
           {"lanczos", {{"outer", outerLanczos}, {"central", centralLanczos}}},
           {"reference",
            {{"stepRatio", reference.stepRatio},
             {"gridRatio", reference.gridRatio},
             {"refinementFactor", reference.refinementFactor},
             {"maxRefinements", reference.maxRefinements},
             {"tailTolerance", reference.tailTolerance},
             {"agreementTolerance", reference.agreementTolerance},
             {"extrapolationLevels", reference.extrapolationLevels}}}};
    if (sweep) j["sweep"] = {{sweep->variable, sweep->values}};
    return j;
}

RunConfig parseConfig(const json& j) {
    requireObject(j, "");
    rejectUnknown(j, "",
                  {"epsilon", "T", "hOverEps", "MTimesEps", "sigma", "scheme", "potential", "initial", "outDir",
                   "snapshotEvery", "lanczos", "sweep", "reference"});
    RunConfig c;
    if (!j.contains("epsilon")) throw ConfigError("/epsilon", "required");
    c.epsilon = number(j["epsilon"], "/epsilon");
    if (!(c.epsilon > 0 && c.epsilon < 1)) throw ConfigError("/epsilon", "must lie in (0, 1)");
    if (!j.contains("T")) throw ConfigError("/T", "required");
    c.T = number(j["T"], "/T");
    if (c.T < 0) throw ConfigError("/T", "must be nonnegative");
    if (j.contains("hOverEps")) {
        c.hOverEps = number(j["hOverEps"], "/hOverEps");
        positive(c.hOverEps, "/hOverEps");
    }
    if (j.contains("MTimesEps")) {
        c.MTimesEps = number(j["MTimesEps"], "/MTimesEps");
        positive(c.MTimesEps, "/MTimesEps");
    }
    if (j.contains("sigma")) {
        c.sigma = number(j["sigma"], "/sigma");
        if (!(c.sigma > 0 && c.sigma <= 1)) throw ConfigError("/sigma", "must lie in (0, 1]");
    }
    if (j.contains("scheme")) {
        const auto name = text(j["scheme"], "/scheme");
        auto kind = propagator::parseSchemeKind(name);
        if (!kind) throw ConfigError("/scheme", "expected strang, mid or full");
        c.scheme = *kind;
    }
    if (j.contains("potential")) c.potential = parsePotential(j["potential"], "/potential");
    if (j.contains("initial")) c.initial = parseInitial(j["initial"], "/initial");
    if (j.contains("outDir")) c.outDir = text(j["outDir"], "/outDir");
    if (j.contains("snapshotEvery")) {
        c.snapshotEvery = integer(j["snapshotEvery"], "/snapshotEvery");
        if (c.snapshotEvery < 0) throw ConfigError("/snapshotEvery", "must be nonnegative");
    }
    if (j.contains("lanczos")) {
        const json& l = j["lanczos"];
        requireObject(l, "/lanczos");
        rejectUnknown(l, "/lanczos", {"outer", "central"});
        if (l.contains("outer")) c.outerLanczos = integer(l["outer"], "/lanczos/outer");
        if (l.contains("central")) c.centralLanczos = integer(l["central"], "/lanczos/central");
        if (c.outerLanczos < 1) throw ConfigError("/lanczos/outer", "must be at least 1");
        if (c.centralLanczos < 1) throw ConfigError("/lanczos/central", "must be at least 1");
    }
    if (j.contains("sweep")) c.sweep = parseSweep(j["sweep"], "/sweep");
    if (j.contains("reference")) c.reference = parseReference(j["reference"], "/reference");
    return c;
}

RunConfig loadConfig(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config '" + path.string() + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("", std::string("malformed JSON: ") + e.what());
    }
    return parseConfig(j);
}

}  // namespace mz::app

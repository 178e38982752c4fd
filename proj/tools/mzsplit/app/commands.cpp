#include "app/commands.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "app/snapshot.hpp"
#include "mzsplit/propagator/propagator.hpp"
#include "mzsplit/reference/reference.hpp"
#include "mzsplit/symlie/export.hpp"
#include "mzsplit/symlie/magnus.hpp"
#include "mzsplit/symlie/zassenhaus.hpp"

namespace mz::app {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string snapshotName(int index) {
    std::ostringstream os;
    os << "snapshot_" << std::setw(6) << std::setfill('0') << index << ".mzwf";
    return os.str();
}

void writeJson(const fs::path& path, const json& j) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write '" + path.string() + "'");
    os << j.dump(2) << "\n";
}

/// %.17g keeps the CSV exact and locale-free.
std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

template <class Fn>
void parallelFor(std::size_t count, int jobs, Fn fn) {
    const auto workers = std::max<std::size_t>(1, std::min<std::size_t>(count, static_cast<std::size_t>(std::max(jobs, 1))));
    std::atomic<std::size_t> next{0};
    auto body = [&] {
        for (std::size_t i = next++; i < count; i = next++) fn(i);
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(body);
    body();
    for (auto& t : pool) t.join();
}

}  // namespace

json cmdRun(const RunConfig& cfg, const fs::path& outDir) {
    fs::create_directories(outDir);
    const auto model = cfg.potential.model();
    const auto g = grid::SpatialGrid::withPoints(cfg.M());
    const auto u0 = cfg.initialState(g);
    writeSnapshot(outDir / "initial.mzwf", u0, cfg.epsilon, 0.0);

    propagator::EvolveOptions eo;
    eo.snapshotEvery = cfg.snapshotEvery;
    const auto rep = propagator::evolve(u0, 0.0, cfg.T, cfg.h(), model, cfg.stepOptions(), eo);

    writeSnapshot(outDir / "final.mzwf", rep.final, cfg.epsilon, rep.tFinal);
    int index = 0;
    for (const auto& s : rep.snapshots) writeSnapshot(outDir / snapshotName(++index), s.u, cfg.epsilon, s.t);

    json summary{{"config", cfg.toJson()},
                 {"derived", {{"M", cfg.M()}, {"h", cfg.h()}, {"steps", rep.steps}}},
                 {"tFinal", rep.tFinal},
                 {"normDrift", rep.maxNormDrift},
                 {"flaggedSteps", rep.flaggedSteps},
                 {"transmittedMass", propagator::transmittedMass(rep.final)},
                 {"initialTransmittedMass", propagator::transmittedMass(u0)},
                 {"seconds", rep.seconds},
                 {"snapshots", rep.snapshots.size()}};
    writeJson(outDir / "summary.json", summary);
    return summary;
}

double leastSquaresSlope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("slope needs at least two points");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ConvergenceResult cmdConvergence(const RunConfig& cfg, int jobs, std::ostream* csv) {
    if (!cfg.sweep) throw ConfigError("/sweep", "required for convergence");
    ConvergenceResult result;
    result.variable = cfg.sweep->variable;

    std::vector<RunConfig> cases;
    for (double v : cfg.sweep->values) {
        RunConfig c = cfg;
        c.sweep.reset();
        if (result.variable == "epsilon")
            c.epsilon = v;
        else
            c.hOverEps = v;
        cases.push_back(c);
    }

    // one reference per epsilon, at the finest step used with it
    std::map<double, RunConfig> refCases;
    for (const auto& c : cases) {
        auto [it, fresh] = refCases.try_emplace(c.epsilon, c);
        if (!fresh && c.h() < it->second.h()) it->second = c;
    }
    std::vector<double> epsKeys;
    for (const auto& [e, c] : refCases) epsKeys.push_back(e);
    std::vector<std::optional<reference::ReferenceResult>> refs(epsKeys.size());
    std::vector<std::string> refFailures(epsKeys.size());
    parallelFor(epsKeys.size(), jobs, [&](std::size_t i) {
        const RunConfig& c = refCases.at(epsKeys[i]);
        try {
            refs[i] = reference::solveReference(
                c.potential.model(), [&c](const grid::GridPtr& g) { return c.initialState(g); }, 0.0, c.T,
                c.referenceConfig());
        } catch (const std::exception& e) {
            refFailures[i] = e.what();
        }
    });
    auto refIndex = [&](double eps) {
        return static_cast<std::size_t>(std::find(epsKeys.begin(), epsKeys.end(), eps) - epsKeys.begin());
    };

    if (csv) *csv << "eps,h,M,l2_error,linf_error,seconds\n";
    result.rows.resize(cases.size());
    std::vector<bool> done(cases.size(), false);
    std::size_t written = 0;
    std::mutex writer;

    parallelFor(cases.size(), jobs, [&](std::size_t i) {
        const RunConfig& c = cases[i];
        ConvergenceRow row;
        row.eps = c.epsilon;
        row.h = c.h();
        row.M = c.M();
        const std::size_t r = refIndex(c.epsilon);
        if (!refs[r]) {
            row.failure = "reference failed: " + refFailures[r];
        } else {
            try {
                const auto g = grid::SpatialGrid::withPoints(c.M());
                const auto rep = propagator::evolve(c.initialState(g), 0.0, c.T, c.h(), c.potential.model(),
                                                    c.stepOptions());
                const auto err = reference::errorAgainstReference(rep.final, refs[r]->u);
                row.l2 = err.l2;
                row.linf = err.linf;
                row.seconds = rep.seconds;
                row.MR = refs[r]->MR;
                row.referenceTimeError = refs[r]->timeErrorEstimate;
                row.referenceTail = refs[r]->tailMass;
                row.ok = true;
            } catch (const std::exception& e) {
                row.failure = e.what();
            }
        }
        std::lock_guard lock(writer);
        result.rows[i] = row;
        done[i] = true;
        while (written < cases.size() && done[written]) {
            const auto& w = result.rows[written];
            if (csv) {
                if (w.ok)
                    *csv << num(w.eps) << "," << num(w.h) << "," << w.M << "," << num(w.l2) << "," << num(w.linf)
                         << "," << num(w.seconds) << "\n";
                else
                    *csv << "# row aborted (eps=" << num(w.eps) << ", h=" << num(w.h) << "): " << w.failure << "\n";
                csv->flush();
            }
            ++written;
        }
    });

    std::vector<double> x, l2, linf;
    for (const auto& row : result.rows) {
        if (!row.ok || !(row.l2 > 0) || !(row.linf > 0)) continue;
        x.push_back(std::log2(result.variable == "epsilon" ? row.eps : row.h));
        l2.push_back(std::log2(row.l2));
        linf.push_back(std::log2(row.linf));
    }
    if (x.size() >= 2) {
        result.l2Slope = leastSquaresSlope(x, l2);
        result.linfSlope = leastSquaresSlope(x, linf);
    }
    if (csv) {
        const char* against = result.variable == "epsilon" ? "log2(eps)" : "log2(h)";
        if (result.l2Slope) {
            *csv << "# l2 slope vs " << against << ": " << num(*result.l2Slope) << "\n";
            *csv << "# linf slope vs " << against << ": " << num(*result.linfSlope) << "\n";
        } else {
            *csv << "# too few successful rows for a slope\n";
        }
    }
    return result;
}

json cmdReference(const RunConfig& cfg, const fs::path& outDir) {
    fs::create_directories(outDir);
    const auto rc = cfg.referenceConfig();
    const auto res = reference::solveReference(
        cfg.potential.model(), [&cfg](const grid::GridPtr& g) { return cfg.initialState(g); }, 0.0, cfg.T, rc);
    writeSnapshot(outDir / "reference.mzwf", res.u, cfg.epsilon, cfg.T);
    json j{{"config", cfg.toJson()},
           {"MR", res.MR},
           {"hR", rc.hR},
           {"steps", res.steps},
           {"refinements", res.refinements},
           {"tailMass", res.tailMass},
           {"lastChange", res.lastChange},
           {"timeErrorEstimate", res.timeErrorEstimate},
           {"seconds", res.seconds}};
    writeJson(outDir / "reference.json", j);
    return j;
}

std::optional<DeriveFormat> parseDeriveFormat(std::string_view name) noexcept {
    if (name == "pretty") return DeriveFormat::Pretty;
    if (name == "json") return DeriveFormat::Json;
    if (name == "latex") return DeriveFormat::Latex;
    return std::nullopt;
}

std::string cmdDerive(int order, DeriveFormat format) {
    if (order != 3 && order != 5) throw std::invalid_argument("order must be 3 or 5");
    const auto omega = order == 5 ? symlie::magnusOmega5() : symlie::magnusOmega3();
    const auto scheme = symlie::zassenhausSplit(omega, order == 5 ? 2 : 1, symlie::Truncation{order});
    switch (format) {
        case DeriveFormat::Pretty: return symlie::prettyPrint(scheme);
        case DeriveFormat::Json: return symlie::toJson(scheme).dump(2) + "\n";
        case DeriveFormat::Latex: return symlie::toLatex(scheme);
    }
    return {};
}

}  // namespace mz::app

#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "app/commands.hpp"
#include "app/config.hpp"
#include "app/verify.hpp"

namespace fs = std::filesystem;
using namespace mz::app;

namespace {

RunConfig configFrom(const std::string& path, const std::string& scheme) {
    if (path.empty()) throw std::runtime_error("--config is required");
    RunConfig cfg = loadConfig(path);
    if (!scheme.empty()) cfg.scheme = *mz::propagator::parseSchemeKind(scheme);
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mzsplit: Magnus-Zassenhaus splittings for the semiclassical Schroedinger equation"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string configPath;
    std::string outDir;
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    std::string scheme;
    int order = 5;
    std::string format = "pretty";

    app.add_option("--config", configPath, "JSON run configuration")->check(CLI::ExistingFile);
    app.add_option("--out", outDir, "output directory (default: config outDir)");
    app.add_option("--jobs", jobs, "worker threads for sweeps")->check(CLI::PositiveNumber);
    app.add_option("--scheme", scheme, "override the configured scheme")->check(CLI::IsMember({"strang", "mid", "full"}));
    app.add_option("--order", order, "Magnus order for derive")->check(CLI::IsMember({3, 5}));
    app.add_option("--format", format, "derive output format")->check(CLI::IsMember({"pretty", "json", "latex"}));

    auto* run = app.add_subcommand("run", "evolve one wave packet");
    auto* conv = app.add_subcommand("convergence", "error sweep against reference solutions");
    auto* derive = app.add_subcommand("derive", "print the symbolic splitting");
    auto* verify = app.add_subcommand("verify", "check the symbolic engine against stored identities");
    auto* ref = app.add_subcommand("reference", "compute a reference solution");

    CLI11_PARSE(app, argc, argv);

    try {
        if (derive->parsed()) {
            std::cout << cmdDerive(order, *parseDeriveFormat(format));
            return 0;
        }
        if (verify->parsed()) {
            const auto checks = runVerify();
            int failed = 0;
            for (const auto& c : checks) {
                std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name;
                if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
                std::cout << "\n";
                failed += c.passed ? 0 : 1;
            }
            std::cout << checks.size() - failed << "/" << checks.size() << " checks passed\n";
            return failed == 0 ? 0 : 1;
        }

        const RunConfig cfg = configFrom(configPath, scheme);
        const fs::path out = outDir.empty() ? fs::path(cfg.outDir) : fs::path(outDir);

        if (run->parsed()) {
            const auto summary = cmdRun(cfg, out);
            std::cout << summary.dump(2) << "\n";
            return 0;
        }
        if (ref->parsed()) {
            std::cout << cmdReference(cfg, out).dump(2) << "\n";
            return 0;
        }
        if (conv->parsed()) {
            fs::create_directories(out);
            const fs::path csvPath = out / "convergence.csv";
            std::ofstream csv(csvPath);
            if (!csv) throw std::runtime_error("cannot write '" + csvPath.string() + "'");
            const auto res = cmdConvergence(cfg, jobs, &csv);
            int good = 0;
            for (const auto& row : res.rows) {
                if (row.ok) {
                    ++good;
                    std::cout << "eps=" << row.eps << " h=" << row.h << " M=" << row.M << " l2=" << row.l2
                              << " linf=" << row.linf << "\n";
                } else {
                    std::cerr << "aborted eps=" << row.eps << " h=" << row.h << ": " << row.failure << "\n";
                }
            }
            if (res.l2Slope) std::cout << "l2 slope " << *res.l2Slope << ", linf slope " << *res.linfSlope << "\n";
            std::cout << "wrote " << csvPath.string() << "\n";
            return good == static_cast<int>(res.rows.size()) ? 0 : 1;
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

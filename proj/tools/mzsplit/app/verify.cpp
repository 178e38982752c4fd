#include "app/verify.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "app/golden.hpp"
#include "mzsplit/grid/grid.hpp"
#include "mzsplit/symlie/commutator.hpp"
#include "mzsplit/symlie/export.hpp"
#include "mzsplit/symlie/magnus.hpp"
#include "mzsplit/symlie/zassenhaus.hpp"

namespace mz::app {

namespace {

using Eigen::MatrixXcd;
using Complex = std::complex<double>;

double toDouble(const symlie::Rational& q) {
    return q.convert_to<double>();
}

MatrixXcd br(const MatrixXcd& a, const MatrixXcd& b) {
    return a * b - b * a;
}

MatrixXcd randomSkew(std::mt19937_64& rng, int n, double norm) {
    std::normal_distribution<double> gauss;
    MatrixXcd g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
    MatrixXcd a = 0.5 * (g - g.adjoint());
    return a * (norm / a.norm());
}

MatrixXcd sbchSeries(const MatrixXcd& x, const MatrixXcd& y, const symlie::SbchCoefficients& c) {
    const MatrixXcd xy = br(x, y);
    const MatrixXcd xxy = br(x, xy);
    const MatrixXcd yxy = br(y, xy);
    const MatrixXcd xxxy = br(x, xxy);
    MatrixXcd z = x + y;
    z += toDouble(c.xxy) * xxy;
    z += toDouble(c.yxy) * yxy;
    z += toDouble(c.xxxxy) * br(x, xxxy);
    z += toDouble(c.yxxxy) * br(y, xxxy);
    z += toDouble(c.yyxxy) * br(y, br(y, xxy));
    z += toDouble(c.yyyxy) * br(y, br(y, yxy));
    z += toDouble(c.xy_xxy) * br(xy, xxy);
    z += toDouble(c.xy_yxy) * br(xy, yxy);
    return z;
}

double lsSlope(const std::vector<double>& x, const std::vector<double>& y) {
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

CheckResult compare(const std::string& name, const symlie::LieElement& got, const symlie::LieElement& want) {
    CheckResult r{name, got == want, {}};
    if (!r.passed) r.detail = "difference: " + symlie::prettyPrint(got - want);
    return r;
}

}  // namespace

SbchOracleReport sbchMatrixOracle(const symlie::SbchCoefficients& coefficients, const std::vector<double>& deltas,
                                  int pairs) {
    SbchOracleReport rep;
    rep.deltas = deltas;
    std::mt19937_64 rng(20240611);
    std::vector<std::pair<MatrixXcd, MatrixXcd>> shapes;
    for (int p = 0; p < pairs; ++p) {
        MatrixXcd x = randomSkew(rng, 8, 1.0);
        MatrixXcd y = randomSkew(rng, 8, 1.0);
        shapes.emplace_back(std::move(x), std::move(y));
    }
    std::vector<double> lx, ly;
    for (double d : deltas) {
        double worst = 0;
        for (const auto& [x1, y1] : shapes) {
            const MatrixXcd x = d * x1;
            const MatrixXcd y = d * y1;
            const MatrixXcd half = (0.5 * x).exp();
            const MatrixXcd exact = (half * y.exp() * half).log();
            worst = std::max(worst, (sbchSeries(x, y, coefficients) - exact).norm());
        }
        rep.residuals.push_back(worst);
        lx.push_back(std::log(d));
        ly.push_back(std::log(worst));
    }
    rep.order = lsSlope(lx, ly);
    return rep;
}

double skewHermitianDefect(int k, std::size_t points) {
    auto g = grid::SpatialGrid::withPoints(points);
    std::mt19937_64 rng(7 + k);
    std::uniform_real_distribution<double> uni(-1, 1);
    grid::GridField f(g);
    for (auto& v : f.values) v = uni(rng);
    const auto m = static_cast<Eigen::Index>(points);
    MatrixXcd a(m, m);
    Complex phase = 1;
    for (int p = 0; p <= k; ++p) phase *= Complex(0, 1);
    for (Eigen::Index j = 0; j < m; ++j) {
        grid::WaveFunction e(g);
        e.values[j] = 1;
        a.col(j) = phase * grid::applyJordan(k, f, e).values;
    }
    return (a + a.adjoint()).norm() / a.norm();
}

std::vector<CheckResult> runVerify(const VerifyOptions& options) {
    std::vector<CheckResult> out;

    for (const auto& id : golden::bracketTableSamples()) out.push_back(compare("bracket " + id.name, id.computed, id.expected));
    for (const auto& id : golden::generatorCommutators())
        out.push_back(compare("generators " + id.name, id.computed, id.expected));

    const symlie::LieElement omega = symlie::magnusOmega5();
    out.push_back(compare("magnus omega5", omega, golden::omega5()));
    out.push_back(compare("magnus omega5, time-independent",
                          omega.withSlotZeroed(1).withSlotZeroed(2),
                          golden::omega5().withSlotZeroed(1).withSlotZeroed(2)));

    const auto scheme = symlie::zassenhausSplit(omega, 2, {}, options.coefficients);
    const auto want = golden::scheme();
    const char* names[] = {"W0", "W1", "W2"};
    for (std::size_t s = 0; s < want.outer.size(); ++s) {
        if (s >= scheme.outer.size()) {
            out.push_back({std::string("zassenhaus ") + names[s], false, "missing"});
            continue;
        }
        out.push_back(compare(std::string("zassenhaus ") + names[s], scheme.outer[s], want.outer[s]));
    }
    if (scheme.outer.size() > want.outer.size())
        out.push_back({"zassenhaus outer count", false, std::to_string(scheme.outer.size()) + " outer exponents"});
    out.push_back(compare("zassenhaus central", scheme.central, want.central));

    {
        const auto frozen = symlie::zassenhausSplit(omega.withSlotZeroed(1).withSlotZeroed(2), 2, {}, options.coefficients);
        using symlie::LieElement;
        using symlie::Rational;
        using symlie::ScalarField;
        const ScalarField dv = ScalarField::atom(0, 1);
        const LieElement w2 = LieElement::term(Rational(1, 6), 1, 3, -1, 0, dv * dv) +
                              LieElement::term(Rational(1, 6), 1, 3, 1, 2, ScalarField::atom(0, 2));
        out.push_back(frozen.outer.size() == 3 ? compare("zassenhaus W2, time-independent", frozen.outer[2], w2)
                                               : CheckResult{"zassenhaus W2, time-independent", false, "missing"});
    }

    {
        const auto rep = sbchMatrixOracle(options.coefficients);
        std::ostringstream os;
        os << "observed order " << rep.order << " (residuals";
        for (double r : rep.residuals) os << " " << r;
        os << ")";
        out.push_back({"sbch matrix oracle", rep.order >= 5.5, os.str()});
    }

    for (int k = 0; k <= 4; ++k) {
        const double defect = skewHermitianDefect(k);
        std::ostringstream os;
        os << "relative defect " << defect;
        out.push_back({"skew-Hermitian <" + std::to_string(k) + "|f>", defect <= 1e-12, os.str()});
    }

    {
        CheckResult r{"out-of-table bracket diagnostic", false, {}};
        try {
            const auto f = symlie::LieElement::term(1, 0, 0, 0, 3, symlie::ScalarField::atom(0));
            const auto g = symlie::LieElement::term(1, 0, 0, 0, 3, symlie::ScalarField::atom(1));
            (void)symlie::commute(f, g);
            r.detail = "no error raised";
        } catch (const symlie::TableIncompleteError& e) {
            r.passed = std::string(e.what()).find("identity table incomplete") != std::string::npos;
            r.detail = e.what();
        }
        out.push_back(r);
    }
    return out;
}

}  // namespace mz::app

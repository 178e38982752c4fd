#include "mzsplit/potential/potential.hpp"

#include <cmath>
#include <numbers>

namespace mz::potential {

namespace {

double latticeValue(double x) {
    return expr::bump(4.0 * x) * std::sin(20.0 * std::numbers::pi * x);
}

double pulseValue(double x, double t) {
    const double envelope = expr::bump(3.0 * t - 1.0);
    if (envelope == 0.0) return 0.0;
    return envelope * expr::bump(std::sin(2.0 * std::numbers::pi * (x - t)));
}

}  // namespace

PotentialModel::PotentialModel(std::string name, Function f, bool timeIndependent)
    : name_(std::move(name)), f_(std::make_shared<const Function>(std::move(f))), timeIndependent_(timeIndependent) {}

PotentialModel PotentialModel::zero() {
    return PotentialModel("zero", [](double, double) { return 0.0; }, true);
}

PotentialModel PotentialModel::constant(double c) {
    return PotentialModel("constant", [c](double, double) { return c; }, true);
}

PotentialModel PotentialModel::lattice() {
    return PotentialModel("lattice", [](double x, double) { return latticeValue(x); }, true);
}

PotentialModel PotentialModel::pulse() {
    return PotentialModel("pulse", pulseValue, false);
}

PotentialModel PotentialModel::latticeWithPulse() {
    return PotentialModel(
        "lattice_with_pulse", [](double x, double t) { return latticeValue(x) + pulseValue(x, t); }, false);
}

PotentialModel PotentialModel::separable(int power, std::function<double(double)> g, std::string name) {
    return PotentialModel(
        std::move(name), [power, g = std::move(g)](double x, double t) { return std::pow(t, power) * g(x); },
        power == 0);
}

PotentialModel PotentialModel::expression(expr::Expr e) {
    const bool still = !expr::dependsOnTime(e);
    std::string name = "expr:" + e.source();
    return PotentialModel(
        std::move(name), [e = std::move(e)](double x, double t) { return expr::evalExpr(e, x, t); }, still);
}

PotentialModel PotentialModel::custom(std::string name, Function f, bool timeIndependent) {
    return PotentialModel(std::move(name), std::move(f), timeIndependent);
}

PotentialModel PotentialModel::reversed(double pivot) const {
    auto inner = f_;
    return PotentialModel(
        name_ + " (reversed)", [inner, pivot](double x, double s) { return (*inner)(x, pivot - s); },
        timeIndependent_);
}

grid::GridField evaluateOnGrid(const PotentialModel& model, double t, const grid::GridPtr& grid) {
    grid::GridField out(grid);
    for (std::size_t j = 0; j < grid->size(); ++j) out.values[static_cast<Eigen::Index>(j)] = model(grid->node(j), t);
    return out;
}

}  // namespace mz::potential

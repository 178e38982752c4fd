#pragma once

#include <array>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "mzsplit/expr/expr.hpp"
#include "mzsplit/grid/grid.hpp"

namespace mz::potential {

/// V(x, t), smooth and 2-periodic in x. Builtins are periodic by construction;
/// for expression potentials periodicity is up to the user.
class PotentialModel {
public:
    using Function = std::function<double(double x, double t)>;

    PotentialModel() : PotentialModel(zero()) {}

    static PotentialModel zero();
    static PotentialModel constant(double c);
    /// rho(4x) sin(20 pi x)
    static PotentialModel lattice();
    /// rho(3t - 1) rho(sin(2 pi (x - t)))
    static PotentialModel pulse();
    /// lattice + pulse
    static PotentialModel latticeWithPulse();
    /// t^power g(x)
    static PotentialModel separable(int power, std::function<double(double)> g, std::string name = "separable");
    static PotentialModel expression(expr::Expr e);
    static PotentialModel custom(std::string name, Function f, bool timeIndependent);

    /// s -> V(x, pivot - s). Reversing the step [t, t+h] uses pivot = 2t + h.
    PotentialModel reversed(double pivot) const;

    double operator()(double x, double t) const { return (*f_)(x, t); }
    bool timeIndependent() const noexcept { return timeIndependent_; }
    const std::string& name() const noexcept { return name_; }

private:
    PotentialModel(std::string name, Function f, bool timeIndependent);
    std::string name_;
    std::shared_ptr<const Function> f_;
    bool timeIndependent_ = true;
};

/// V(x_n, t) at every node.
grid::GridField evaluateOnGrid(const PotentialModel& model, double t, const grid::GridPtr& grid);

}  // namespace mz::potential

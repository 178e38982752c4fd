#include <cmath>

#include "mzsplit/expr/expr.hpp"

namespace mz::expr {

EvalError::EvalError(const std::string& message, std::size_t offset)
    : std::runtime_error(message + " (node at offset " + std::to_string(offset) + ")"), offset_(offset) {}

double bump(double y) noexcept {
    const double a = std::abs(y);
    if (a >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - y * y));
}

namespace {

double eval(const Node& n, double x, double t) {
    double r = 0;
    switch (n.kind) {
        case NodeKind::Number: return n.value;
        case NodeKind::VarX: return x;
        case NodeKind::VarT: return t;
        case NodeKind::Add: r = eval(*n.children[0], x, t) + eval(*n.children[1], x, t); break;
        case NodeKind::Sub: r = eval(*n.children[0], x, t) - eval(*n.children[1], x, t); break;
        case NodeKind::Mul: r = eval(*n.children[0], x, t) * eval(*n.children[1], x, t); break;
        case NodeKind::Div: {
            const double den = eval(*n.children[1], x, t);
            if (den == 0.0) throw EvalError("division by zero", n.offset);
            r = eval(*n.children[0], x, t) / den;
            break;
        }
        case NodeKind::Pow: {
            const double base = eval(*n.children[0], x, t);
            const double ex = eval(*n.children[1], x, t);
            if (base == 0.0 && ex < 0) throw EvalError("zero raised to a negative power", n.offset);
            r = std::pow(base, ex);
            break;
        }
        case NodeKind::Neg: r = -eval(*n.children[0], x, t); break;
        case NodeKind::Call: {
            const double a = eval(*n.children[0], x, t);
            switch (n.function) {
                case Function::Sin: r = std::sin(a); break;
                case Function::Cos: r = std::cos(a); break;
                case Function::Exp: r = std::exp(a); break;
                case Function::Tanh: r = std::tanh(a); break;
                case Function::Abs: r = std::abs(a); break;
                case Function::Bump: r = bump(a); break;
            }
            break;
        }
    }
    if (!std::isfinite(r)) throw EvalError("non-finite value", n.offset);
    return r;
}

}  // namespace

double evalExpr(const Expr& e, double x, double t) {
    if (e.empty()) throw EvalError("empty expression", 0);
    return eval(e.root(), x, t);
}

}  // namespace mz::expr

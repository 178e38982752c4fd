#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mz::expr {

enum class NodeKind { Number, VarX, VarT, Add, Sub, Mul, Div, Pow, Neg, Call };

enum class Function { Sin, Cos, Exp, Tanh, Abs, Bump };

struct Node {
    NodeKind kind = NodeKind::Number;
    double value = 0;             // Number
    Function function = Function::Sin;  // Call
    std::vector<std::shared_ptr<const Node>> children;
    std::size_t offset = 0;       // byte offset in the source
};

/// Immutable parsed expression in x and t.
class Expr {
public:
    Expr() = default;
    explicit Expr(std::shared_ptr<const Node> root, std::string source = {})
        : root_(std::move(root)), source_(std::move(source)) {}

    const Node& root() const { return *root_; }
    const std::string& source() const noexcept { return source_; }
    bool empty() const noexcept { return !root_; }

private:
    std::shared_ptr<const Node> root_;
    std::string source_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset);
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class EvalError : public std::runtime_error {
public:
    EvalError(const std::string& message, std::size_t offset);
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Grammar (loosest first): + -, * /, unary -, ^ (right associative).
/// Names: x, t, pi, sin cos exp tanh abs bump (one argument each).
Expr parseExpr(std::string_view source);

/// Fully parenthesized text that parses back to the same tree.
std::string printExpr(const Expr& e);

/// Structural equality (source offsets ignored).
bool sameTree(const Expr& a, const Expr& b);

/// True if the tree mentions t.
bool dependsOnTime(const Expr& e);

/// exp(-1/(1-y^2)) for |y| < 1, else 0.
double bump(double y) noexcept;

/// Throws EvalError on division by zero, 0 to a negative power, or any non-finite value.
double evalExpr(const Expr& e, double x, double t);

}  // namespace mz::expr

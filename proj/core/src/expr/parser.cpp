#include <array>
#include <cctype>
#include <charconv>
#include <sstream>

#include "mzsplit/expr/expr.hpp"

namespace mz::expr {

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::runtime_error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

namespace {

using NodePtr = std::shared_ptr<const Node>;

struct FunctionName {
    std::string_view name;
    Function fn;
};

constexpr std::array<FunctionName, 6> kFunctions{{{"sin", Function::Sin},
                                                  {"cos", Function::Cos},
                                                  {"exp", Function::Exp},
                                                  {"tanh", Function::Tanh},
                                                  {"abs", Function::Abs},
                                                  {"bump", Function::Bump}}};

std::string_view functionName(Function f) {
    for (const auto& entry : kFunctions)
        if (entry.fn == f) return entry.name;
    return "?";
}

NodePtr leaf(NodeKind kind, std::size_t offset, double value = 0) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->value = value;
    n->offset = offset;
    return n;
}

NodePtr combine(NodeKind kind, std::size_t offset, std::vector<NodePtr> children) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->offset = offset;
    n->children = std::move(children);
    return n;
}

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    NodePtr parseAll() {
        NodePtr root = parseSum();
        skipSpace();
        if (pos_ < src_.size()) throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
        return root;
    }

private:
    void skipSpace() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skipSpace();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr parseSum() {
        NodePtr lhs = parseProduct();
        for (;;) {
            skipSpace();
            const std::size_t at = pos_;
            if (accept('+'))
                lhs = combine(NodeKind::Add, at, {lhs, parseProduct()});
            else if (accept('-'))
                lhs = combine(NodeKind::Sub, at, {lhs, parseProduct()});
            else
                return lhs;
        }
    }

    NodePtr parseProduct() {
        NodePtr lhs = parseUnary();
        for (;;) {
            skipSpace();
            const std::size_t at = pos_;
            if (accept('*'))
                lhs = combine(NodeKind::Mul, at, {lhs, parseUnary()});
            else if (accept('/'))
                lhs = combine(NodeKind::Div, at, {lhs, parseUnary()});
            else
                return lhs;
        }
    }

    NodePtr parseUnary() {
        skipSpace();
        const std::size_t at = pos_;
        if (accept('-')) return combine(NodeKind::Neg, at, {parseUnary()});
        return parsePower();
    }

    NodePtr parsePower() {
        NodePtr base = parsePrimary();
        skipSpace();
        const std::size_t at = pos_;
        // right associative; the exponent may carry its own unary minus
        if (accept('^')) return combine(NodeKind::Pow, at, {base, parseUnary()});
        return base;
    }

    NodePtr parsePrimary() {
        skipSpace();
        const std::size_t at = pos_;
        if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parseNumber();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parseName();
        if (accept('(')) {
            NodePtr inner = parseSum();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        throw ParseError(std::string("unexpected '") + c + "'", at);
    }

    NodePtr parseNumber() {
        const std::size_t at = pos_;
        std::size_t end = pos_;
        while (end < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[end])) || src_[end] == '.')) ++end;
        if (end < src_.size() && (src_[end] == 'e' || src_[end] == 'E')) {
            std::size_t e = end + 1;
            if (e < src_.size() && (src_[e] == '+' || src_[e] == '-')) ++e;
            if (e < src_.size() && std::isdigit(static_cast<unsigned char>(src_[e]))) {
                while (e < src_.size() && std::isdigit(static_cast<unsigned char>(src_[e]))) ++e;
                end = e;
            }
        }
        double value = 0;
        auto [ptr, ec] = std::from_chars(src_.data() + at, src_.data() + end, value);
        if (ec != std::errc() || ptr != src_.data() + end) throw ParseError("malformed number", at);
        pos_ = end;
        if (pos_ < src_.size() && (std::isalpha(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            throw ParseError("implicit multiplication is not allowed", pos_);
        return leaf(NodeKind::Number, at, value);
    }

    NodePtr parseName() {
        const std::size_t at = pos_;
        std::size_t end = pos_;
        while (end < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_')) ++end;
        const std::string_view name = src_.substr(at, end - at);
        pos_ = end;
        if (name == "x") return leaf(NodeKind::VarX, at);
        if (name == "t") return leaf(NodeKind::VarT, at);
        if (name == "pi") return leaf(NodeKind::Number, at, 3.14159265358979323846);
        for (const auto& entry : kFunctions) {
            if (entry.name != name) continue;
            if (!accept('(')) throw ParseError("expected '(' after function '" + std::string(name) + "'", pos_);
            std::vector<NodePtr> args;
            skipSpace();
            if (!accept(')')) {
                args.push_back(parseSum());
                while (accept(',')) args.push_back(parseSum());
                if (!accept(')')) throw ParseError("expected ')'", pos_);
            }
            if (args.size() != 1)
                throw ParseError("function '" + std::string(name) + "' takes 1 argument, got " +
                                     std::to_string(args.size()),
                                 at);
            auto n = std::make_shared<Node>();
            n->kind = NodeKind::Call;
            n->function = entry.fn;
            n->offset = at;
            n->children = std::move(args);
            return n;
        }
        throw ParseError("unknown identifier '" + std::string(name) + "'", at);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

void print(const Node& n, std::ostringstream& os) {
    auto binary = [&](const char* op) {
        os << "(";
        print(*n.children[0], os);
        os << " " << op << " ";
        print(*n.children[1], os);
        os << ")";
    };
    switch (n.kind) {
        case NodeKind::Number: {
            std::array<char, 64> buf{};
            auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), n.value);
            (void)ec;
            os << std::string_view(buf.data(), static_cast<std::size_t>(ptr - buf.data()));
            break;
        }
        case NodeKind::VarX: os << "x"; break;
        case NodeKind::VarT: os << "t"; break;
        case NodeKind::Add: binary("+"); break;
        case NodeKind::Sub: binary("-"); break;
        case NodeKind::Mul: binary("*"); break;
        case NodeKind::Div: binary("/"); break;
        case NodeKind::Pow: binary("^"); break;
        case NodeKind::Neg:
            os << "(-";
            print(*n.children[0], os);
            os << ")";
            break;
        case NodeKind::Call:
            os << functionName(n.function) << "(";
            print(*n.children[0], os);
            os << ")";
            break;
    }
}

bool sameNode(const Node& a, const Node& b) {
    if (a.kind != b.kind || a.children.size() != b.children.size()) return false;
    if (a.kind == NodeKind::Number && a.value != b.value) return false;
    if (a.kind == NodeKind::Call && a.function != b.function) return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!sameNode(*a.children[i], *b.children[i])) return false;
    return true;
}

bool mentionsTime(const Node& n) {
    if (n.kind == NodeKind::VarT) return true;
    for (const auto& c : n.children)
        if (mentionsTime(*c)) return true;
    return false;
}

}  // namespace

bool dependsOnTime(const Expr& e) {
    return !e.empty() && mentionsTime(e.root());
}

Expr parseExpr(std::string_view source) {
    Parser p(source);
    return Expr(p.parseAll(), std::string(source));
}

std::string printExpr(const Expr& e) {
    std::ostringstream os;
    print(e.root(), os);
    return os.str();
}

bool sameTree(const Expr& a, const Expr& b) {
    return sameNode(a.root(), b.root());
}

}  // namespace mz::expr

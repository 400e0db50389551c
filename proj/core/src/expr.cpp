#include "dirichlet/expr.hpp"

#include <cctype>
#include <cmath>
#include <utility>
#include <vector>

namespace dirichlet::expr {

namespace detail {

enum class Op { Add, Sub, Mul, Div, Pow, Exp, Log, Sqrt, Min2, Max2, Number, Var };

struct Node {
    Op op;
    double number = 0.0;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

using NodePtr = std::shared_ptr<const Node>;

double eval(const Node& n, double t) {
    switch (n.op) {
        case Op::Number: return n.number;
        case Op::Var: return t;
        case Op::Add: return eval(*n.lhs, t) + eval(*n.rhs, t);
        case Op::Sub: return eval(*n.lhs, t) - eval(*n.rhs, t);
        case Op::Mul: return eval(*n.lhs, t) * eval(*n.rhs, t);
        case Op::Div: return eval(*n.lhs, t) / eval(*n.rhs, t);
        case Op::Pow: return std::pow(eval(*n.lhs, t), eval(*n.rhs, t));
        case Op::Exp: return std::exp(eval(*n.lhs, t));
        case Op::Log: return std::log(eval(*n.lhs, t));
        case Op::Sqrt: return std::sqrt(eval(*n.lhs, t));
        case Op::Min2: return std::fmin(eval(*n.lhs, t), eval(*n.rhs, t));
        case Op::Max2: return std::fmax(eval(*n.lhs, t), eval(*n.rhs, t));
    }
    return 0.0;  // unreachable
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr run() {
        NodePtr e = parseExpr();
        skipSpace();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, pos_);
    }

    void skipSpace() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        skipSpace();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skipSpace();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    NodePtr parseExpr() {
        NodePtr lhs = parseTerm();
        for (;;) {
            if (consume('+'))
                lhs = make(Op::Add, lhs, parseTerm());
            else if (consume('-'))
                lhs = make(Op::Sub, lhs, parseTerm());
            else
                return lhs;
        }
    }

    NodePtr parseTerm() {
        NodePtr lhs = parseFactor();
        for (;;) {
            if (consume('*'))
                lhs = make(Op::Mul, lhs, parseFactor());
            else if (consume('/'))
                lhs = make(Op::Div, lhs, parseFactor());
            else
                return lhs;
        }
    }

    NodePtr parseFactor() {
        NodePtr base = parseAtom();
        if (consume('^'))
            return make(Op::Pow, base, parseAtom());
        return base;
    }

    NodePtr parseAtom() {
        skipSpace();
        if (pos_ >= text_.size())
            fail("unexpected end of expression");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr inner = parseExpr();
            if (!consume(')'))
                fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return parseNumber();
        if (std::isalpha(static_cast<unsigned char>(c)))
            return parseIdentifier();
        fail(std::string("unexpected character '") + c + "'");
    }

    NodePtr parseNumber() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
            ++pos_;
        // optional exponent part, e.g. 1e-3
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t mark = pos_;
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            } else {
                pos_ = mark;  // the 'e' belongs to something else; not a valid exponent
            }
        }
        const std::string token(text_.substr(start, pos_ - start));
        try {
            std::size_t used = 0;
            double v = std::stod(token, &used);
            if (used != token.size())
                throw std::invalid_argument(token);
            auto n = std::make_shared<Node>();
            n->op = Op::Number;
            n->number = v;
            return n;
        } catch (const std::exception&) {
            pos_ = start;
            fail("malformed number '" + token + "'");
        }
    }

    NodePtr parseIdentifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_]))))
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        if (name == "t") {
            auto n = std::make_shared<Node>();
            n->op = Op::Var;
            return n;
        }
        Op op;
        bool binary = false;
        if (name == "exp") op = Op::Exp;
        else if (name == "log") op = Op::Log;
        else if (name == "sqrt") op = Op::Sqrt;
        else if (name == "min2") { op = Op::Min2; binary = true; }
        else if (name == "max2") { op = Op::Max2; binary = true; }
        else {
            pos_ = start;
            fail("unknown identifier '" + name + "'");
        }
        if (!consume('('))
            fail("expected '(' after '" + name + "'");
        NodePtr first = parseExpr();
        NodePtr second;
        if (binary) {
            if (!consume(','))
                fail("'" + name + "' takes two comma-separated arguments");
            second = parseExpr();
        }
        if (!consume(')'))
            fail("expected ')'");
        return make(op, first, second);
    }

    static NodePtr make(Op op, NodePtr lhs, NodePtr rhs) {
        auto n = std::make_shared<Node>();
        n->op = op;
        n->lhs = std::move(lhs);
        n->rhs = std::move(rhs);
        return n;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace
}  // namespace detail

Expression::Expression(std::shared_ptr<const detail::Node> root, std::string text)
    : root_(std::move(root)), text_(std::move(text)) {}

Expression Expression::parse(std::string_view text) {
    detail::Parser parser(text);
    return Expression(parser.run(), std::string(text));
}

double Expression::operator()(double t) const {
    return detail::eval(*root_, t);
}

}  // namespace dirichlet::expr

#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "dirichlet/errors.hpp"

namespace dirichlet::expr {

// Grammar (whitespace insignificant, numbers are unsigned decimal literals):
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' atom)?
//   atom   := number | 't' | '(' expr ')' | func '(' expr ')'
//   func   := 'exp' | 'log' | 'sqrt' | 'min2' | 'max2'
//
// min2/max2 take two comma-separated arguments. There are no user-defined
// functions and no unary minus; negative quantities are spelled with binary
// subtraction or division, e.g. "1/t^0.5".

namespace detail {
struct Node;
}

/// A parsed expression in the single variable t. Immutable and cheap to copy.
class Expression {
public:
    /// Parses `text`; throws ParseError with the offending position on failure.
    static Expression parse(std::string_view text);

    /// Evaluates at t. May return non-finite values (e.g. log of a negative
    /// number yields NaN); callers decide how to treat those.
    double operator()(double t) const;

    const std::string& text() const noexcept { return text_; }

private:
    Expression(std::shared_ptr<const detail::Node> root, std::string text);

    std::shared_ptr<const detail::Node> root_;
    std::string text_;
};

}  // namespace dirichlet::expr

#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "netconv/element.hpp"
#include "netconv/errors.hpp"

namespace netconv {

// Small pure expression language over the coordinates of an index element:
// arithmetic, comparisons, boolean connectives, divisibility, a conditional,
// and a few fixed functions (abs, min, max, pow, sin, divides).  Coordinates
// are written x1..xd, or n when the family has one coordinate.
//
// Integer subexpressions evaluate exactly in 64-bit arithmetic (promoting to
// double on overflow); division always yields a real.  Exactness matters:
// membership predicates feed exact rational counting.

enum class ExprType { num, boolean };

enum class BinOp { add, sub, mul, div, mod, eq, ne, lt, le, gt, ge, logical_and, logical_or };
enum class UnOp { neg, logical_not };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { number, coord, unary, binary, conditional, call };

    Kind kind = Kind::number;
    ExprType type = ExprType::num;

    // number
    bool is_int = false;
    i64 int_value = 0;
    double num_value = 0.0;

    // coord (0-based position)
    int coord = 0;

    // unary / binary
    UnOp un_op = UnOp::neg;
    BinOp bin_op = BinOp::add;

    // call
    std::string fn;

    std::vector<ExprPtr> kids; // operands / condition+branches / arguments
};

// Runtime value of a subexpression.
struct Value {
    enum class Kind { integer, real, boolean };
    Kind kind = Kind::integer;
    i64 i = 0;
    double r = 0.0;
    bool b = false;

    static Value of_int(i64 v) { Value x; x.kind = Kind::integer; x.i = v; return x; }
    static Value of_real(double v) { Value x; x.kind = Kind::real; x.r = v; return x; }
    static Value of_bool(bool v) { Value x; x.kind = Kind::boolean; x.b = v; return x; }
    double as_double() const { return kind == Kind::integer ? static_cast<double>(i) : r; }
};

// Parses and type-checks; throws parse_error with 1-based line/column on
// syntax errors, unknown identifiers, and type mismatches.
ExprPtr parse_expr(const std::string& src, int arity);

// Exact evaluation; throws eval_error (division by zero, modulo on
// non-integers, result outside double range) naming the element.
Value eval_expr(const Expr& e, const Element& elem);

// Minimal-parenthesis form; parsing it back yields a structurally equal AST.
std::string pretty(const Expr& e);
bool ast_equal(const Expr& a, const Expr& b);

// Adapters for the analysis layers; both check the expression's type.
std::function<bool(const Element&)> predicate_fn(const ExprPtr& e);
std::function<double(const Element&)> numeric_fn(const ExprPtr& e);

} // namespace netconv

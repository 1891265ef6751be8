#include "netconv/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "netconv/format.hpp"

namespace netconv {

namespace {

// --- Tokens --------------------------------------------------------------

enum class Tok {
    number, ident, kw_if, kw_then, kw_else,
    plus, minus, star, slash, percent, bang,
    lparen, rparen, comma,
    eq, ne, lt, le, gt, ge, and_and, or_or,
    end
};

struct Token {
    Tok kind = Tok::end;
    std::string text;
    bool is_int = false;
    i64 int_value = 0;
    double num_value = 0.0;
    int line = 1;
    int col = 1;
};

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto bump = [&](char c) {
        if (c == '\n') { ++line; col = 1; } else { ++col; }
    };
    auto push = [&](Tok k, std::string text, int l, int c) {
        Token t; t.kind = k; t.text = std::move(text); t.line = l; t.col = c;
        out.push_back(std::move(t));
    };

    while (i < src.size()) {
        char c = src[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') { bump(c); ++i; continue; }
        const int l = line, co = col;

        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            bool has_dot = false;
            if (j < src.size() && src[j] == '.' && j + 1 < src.size() &&
                std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
                has_dot = true;
                ++j;
                while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            }
            if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
                std::size_t k = j + 1;
                if (k < src.size() && (src[k] == '+' || src[k] == '-')) ++k;
                if (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) {
                    has_dot = true; // exponent forces the real-number path
                    j = k;
                    while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
                }
            }
            std::string text = src.substr(i, j - i);
            Token t; t.kind = Tok::number; t.text = text; t.line = l; t.col = co;
            if (!has_dot) {
                i64 v = 0;
                auto res = std::from_chars(text.data(), text.data() + text.size(), v);
                if (res.ec == std::errc()) {
                    t.is_int = true;
                    t.int_value = v;
                } else {
                    t.num_value = std::strtod(text.c_str(), nullptr); // literal too wide for 64 bits
                }
            } else {
                t.num_value = std::strtod(text.c_str(), nullptr);
            }
            out.push_back(std::move(t));
            while (i < j) { bump(src[i]); ++i; }
            continue;
        }

        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            std::string text = src.substr(i, j - i);
            Tok k = Tok::ident;
            if (text == "if") k = Tok::kw_if;
            else if (text == "then") k = Tok::kw_then;
            else if (text == "else") k = Tok::kw_else;
            push(k, text, l, co);
            while (i < j) { bump(src[i]); ++i; }
            continue;
        }

        auto two = [&](char second) {
            return i + 1 < src.size() && src[i + 1] == second;
        };
        switch (c) {
            case '+': push(Tok::plus, "+", l, co); bump(c); ++i; continue;
            case '-': push(Tok::minus, "-", l, co); bump(c); ++i; continue;
            case '*': push(Tok::star, "*", l, co); bump(c); ++i; continue;
            case '/': push(Tok::slash, "/", l, co); bump(c); ++i; continue;
            case '%': push(Tok::percent, "%", l, co); bump(c); ++i; continue;
            case '(': push(Tok::lparen, "(", l, co); bump(c); ++i; continue;
            case ')': push(Tok::rparen, ")", l, co); bump(c); ++i; continue;
            case ',': push(Tok::comma, ",", l, co); bump(c); ++i; continue;
            case '!':
                if (two('=')) { push(Tok::ne, "!=", l, co); bump(c); bump('='); i += 2; }
                else { push(Tok::bang, "!", l, co); bump(c); ++i; }
                continue;
            case '=':
                if (two('=')) { push(Tok::eq, "==", l, co); bump(c); bump('='); i += 2; continue; }
                throw parse_error("expected '==' (assignment is not part of the language)", l, co);
            case '<':
                if (two('=')) { push(Tok::le, "<=", l, co); bump(c); bump('='); i += 2; }
                else { push(Tok::lt, "<", l, co); bump(c); ++i; }
                continue;
            case '>':
                if (two('=')) { push(Tok::ge, ">=", l, co); bump(c); bump('='); i += 2; }
                else { push(Tok::gt, ">", l, co); bump(c); ++i; }
                continue;
            case '&':
                if (two('&')) { push(Tok::and_and, "&&", l, co); bump(c); bump('&'); i += 2; continue; }
                throw parse_error("expected '&&'", l, co);
            case '|':
                if (two('|')) { push(Tok::or_or, "||", l, co); bump(c); bump('|'); i += 2; continue; }
                throw parse_error("expected '||'", l, co);
            default:
                throw parse_error(std::string("unexpected character '") + c + "'", l, co);
        }
    }
    Token t; t.kind = Tok::end; t.line = line; t.col = col;
    out.push_back(std::move(t));
    return out;
}

// --- Typed node construction ----------------------------------------------

ExprPtr make_number_int(i64 v) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::number;
    e->type = ExprType::num;
    e->is_int = true;
    e->int_value = v;
    return e;
}

ExprPtr make_number_real(double v) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::number;
    e->type = ExprType::num;
    e->num_value = v;
    return e;
}

ExprPtr make_coord(int index) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::coord;
    e->type = ExprType::num;
    e->coord = index;
    return e;
}

[[noreturn]] void type_fail(const Token& at, const std::string& msg) {
    throw parse_error("type error: " + msg, at.line, at.col);
}

ExprPtr make_unary(UnOp op, ExprPtr kid, const Token& at) {
    if (op == UnOp::neg && kid->type != ExprType::num)
        type_fail(at, "'-' needs a numeric operand");
    if (op == UnOp::logical_not && kid->type != ExprType::boolean)
        type_fail(at, "'!' needs a boolean operand");
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::unary;
    e->un_op = op;
    e->type = kid->type;
    e->kids.push_back(std::move(kid));
    return e;
}

ExprPtr make_binary(BinOp op, ExprPtr lhs, ExprPtr rhs, const Token& at) {
    const bool logical = op == BinOp::logical_and || op == BinOp::logical_or;
    const bool comparison = op == BinOp::eq || op == BinOp::ne || op == BinOp::lt ||
                            op == BinOp::le || op == BinOp::gt || op == BinOp::ge;
    if (logical) {
        if (lhs->type != ExprType::boolean || rhs->type != ExprType::boolean)
            type_fail(at, "'" + at.text + "' needs boolean operands");
    } else {
        if (lhs->type != ExprType::num || rhs->type != ExprType::num)
            type_fail(at, "'" + at.text + "' needs numeric operands");
    }
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::binary;
    e->bin_op = op;
    e->type = (logical || comparison) ? ExprType::boolean : ExprType::num;
    e->kids.push_back(std::move(lhs));
    e->kids.push_back(std::move(rhs));
    return e;
}

ExprPtr make_conditional(ExprPtr cond, ExprPtr a, ExprPtr b, const Token& at) {
    if (cond->type != ExprType::boolean) type_fail(at, "'if' condition must be boolean");
    if (a->type != b->type) type_fail(at, "'then' and 'else' branches differ in type");
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::conditional;
    e->type = a->type;
    e->kids = {std::move(cond), std::move(a), std::move(b)};
    return e;
}

struct FnSig {
    const char* name;
    int arity;
    ExprType result;
};

constexpr FnSig kFunctions[] = {
    {"abs", 1, ExprType::num},     {"sin", 1, ExprType::num},
    {"min", 2, ExprType::num},     {"max", 2, ExprType::num},
    {"pow", 2, ExprType::num},     {"divides", 2, ExprType::boolean},
};

ExprPtr make_call(const std::string& name, std::vector<ExprPtr> args, const Token& at) {
    for (const auto& sig : kFunctions) {
        if (name != sig.name) continue;
        if (static_cast<int>(args.size()) != sig.arity)
            throw parse_error("'" + name + "' takes " + std::to_string(sig.arity) +
                                  " argument(s), got " + std::to_string(args.size()),
                              at.line, at.col);
        for (const auto& a : args)
            if (a->type != ExprType::num)
                type_fail(at, "'" + name + "' needs numeric arguments");
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::call;
        e->fn = name;
        e->type = sig.result;
        e->kids = std::move(args);
        return e;
    }
    throw parse_error("unknown function '" + name + "'", at.line, at.col);
}

// --- Parser ----------------------------------------------------------------

class Parser {
public:
    Parser(std::vector<Token> toks, int arity) : toks_(std::move(toks)), arity_(arity) {}

    ExprPtr run() {
        ExprPtr e = conditional();
        const Token& t = peek();
        if (t.kind != Tok::end)
            throw parse_error("unexpected '" + t.text + "'", t.line, t.col);
        return e;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    int arity_;

    const Token& peek() const { return toks_[pos_]; }
    const Token& advance() { return toks_[pos_++]; }
    bool accept(Tok k) {
        if (peek().kind == k) { ++pos_; return true; }
        return false;
    }
    const Token& expect(Tok k, const char* what) {
        if (peek().kind != k) {
            const Token& t = peek();
            throw parse_error(std::string("expected ") + what + " before '" +
                                  (t.kind == Tok::end ? "end of input" : t.text) + "'",
                              t.line, t.col);
        }
        return advance();
    }

    ExprPtr conditional() {
        if (peek().kind == Tok::kw_if) {
            const Token at = advance();
            ExprPtr cond = conditional();
            expect(Tok::kw_then, "'then'");
            ExprPtr a = conditional();
            expect(Tok::kw_else, "'else'");
            ExprPtr b = conditional();
            return make_conditional(std::move(cond), std::move(a), std::move(b), at);
        }
        return logical_or();
    }

    ExprPtr logical_or() {
        ExprPtr e = logical_and();
        while (peek().kind == Tok::or_or) {
            const Token at = advance();
            e = make_binary(BinOp::logical_or, std::move(e), logical_and(), at);
        }
        return e;
    }

    ExprPtr logical_and() {
        ExprPtr e = comparison();
        while (peek().kind == Tok::and_and) {
            const Token at = advance();
            e = make_binary(BinOp::logical_and, std::move(e), comparison(), at);
        }
        return e;
    }

    ExprPtr comparison() {
        ExprPtr e = additive();
        switch (peek().kind) {
            case Tok::eq: { const Token at = advance(); return make_binary(BinOp::eq, std::move(e), additive(), at); }
            case Tok::ne: { const Token at = advance(); return make_binary(BinOp::ne, std::move(e), additive(), at); }
            case Tok::lt: { const Token at = advance(); return make_binary(BinOp::lt, std::move(e), additive(), at); }
            case Tok::le: { const Token at = advance(); return make_binary(BinOp::le, std::move(e), additive(), at); }
            case Tok::gt: { const Token at = advance(); return make_binary(BinOp::gt, std::move(e), additive(), at); }
            case Tok::ge: { const Token at = advance(); return make_binary(BinOp::ge, std::move(e), additive(), at); }
            default: return e;
        }
    }

    ExprPtr additive() {
        ExprPtr e = multiplicative();
        while (true) {
            if (peek().kind == Tok::plus) {
                const Token at = advance();
                e = make_binary(BinOp::add, std::move(e), multiplicative(), at);
            } else if (peek().kind == Tok::minus) {
                const Token at = advance();
                e = make_binary(BinOp::sub, std::move(e), multiplicative(), at);
            } else {
                return e;
            }
        }
    }

    ExprPtr multiplicative() {
        ExprPtr e = unary();
        while (true) {
            if (peek().kind == Tok::star) {
                const Token at = advance();
                e = make_binary(BinOp::mul, std::move(e), unary(), at);
            } else if (peek().kind == Tok::slash) {
                const Token at = advance();
                e = make_binary(BinOp::div, std::move(e), unary(), at);
            } else if (peek().kind == Tok::percent) {
                const Token at = advance();
                e = make_binary(BinOp::mod, std::move(e), unary(), at);
            } else {
                return e;
            }
        }
    }

    ExprPtr unary() {
        if (peek().kind == Tok::minus) {
            const Token at = advance();
            return make_unary(UnOp::neg, unary(), at);
        }
        if (peek().kind == Tok::bang) {
            const Token at = advance();
            return make_unary(UnOp::logical_not, unary(), at);
        }
        return primary();
    }

    ExprPtr primary() {
        const Token& t = peek();
        if (t.kind == Tok::number) {
            advance();
            return t.is_int ? make_number_int(t.int_value) : make_number_real(t.num_value);
        }
        if (t.kind == Tok::lparen) {
            advance();
            ExprPtr e = conditional();
            expect(Tok::rparen, "')'");
            return e;
        }
        if (t.kind == Tok::ident) {
            const Token name = advance();
            if (peek().kind == Tok::lparen) {
                advance();
                std::vector<ExprPtr> args;
                if (peek().kind != Tok::rparen) {
                    args.push_back(conditional());
                    while (accept(Tok::comma)) args.push_back(conditional());
                }
                expect(Tok::rparen, "')'");
                return make_call(name.text, std::move(args), name);
            }
            return coordinate(name);
        }
        throw parse_error("expected an expression before '" +
                              (t.kind == Tok::end ? "end of input" : t.text) + "'",
                          t.line, t.col);
    }

    ExprPtr coordinate(const Token& name) {
        if (name.text == "n") {
            if (arity_ != 1)
                throw parse_error("'n' is only valid for one-coordinate families; use x1..x" +
                                      std::to_string(arity_),
                                  name.line, name.col);
            return make_coord(0);
        }
        if (name.text.size() >= 2 && name.text[0] == 'x') {
            int idx = 0;
            auto res = std::from_chars(name.text.data() + 1,
                                       name.text.data() + name.text.size(), idx);
            if (res.ec == std::errc() && res.ptr == name.text.data() + name.text.size()) {
                if (idx < 1 || idx > arity_)
                    throw parse_error("coordinate '" + name.text + "' out of range (family has " +
                                          std::to_string(arity_) + " coordinate(s))",
                                      name.line, name.col);
                return make_coord(idx - 1);
            }
        }
        throw parse_error("unknown identifier '" + name.text + "'", name.line, name.col);
    }
};

// --- Evaluation --------------------------------------------------------------

[[noreturn]] void eval_fail(const std::string& msg, const Element& elem) {
    throw eval_error(msg + " at element " + elem.to_string());
}

double checked_double(double v, const char* what, const Element& elem) {
    if (!std::isfinite(v)) eval_fail(std::string(what) + " left the double range", elem);
    return v;
}

Value arith(BinOp op, const Value& a, const Value& b, const Element& elem) {
    if (op == BinOp::div) {
        double denom = b.as_double();
        if (denom == 0.0) eval_fail("division by zero", elem);
        return Value::of_real(checked_double(a.as_double() / denom, "division", elem));
    }
    if (op == BinOp::mod) {
        if (a.kind != Value::Kind::integer || b.kind != Value::Kind::integer)
            eval_fail("'%' requires integer operands", elem);
        if (b.i == 0) eval_fail("modulo by zero", elem);
        return Value::of_int(a.i % b.i);
    }
    if (a.kind == Value::Kind::integer && b.kind == Value::Kind::integer) {
        i64 r = 0;
        bool overflow = false;
        switch (op) {
            case BinOp::add: overflow = __builtin_add_overflow(a.i, b.i, &r); break;
            case BinOp::sub: overflow = __builtin_sub_overflow(a.i, b.i, &r); break;
            case BinOp::mul: overflow = __builtin_mul_overflow(a.i, b.i, &r); break;
            default: eval_fail("internal: unexpected arithmetic op", elem);
        }
        if (!overflow) return Value::of_int(r);
        // fall through to double arithmetic on 64-bit overflow
    }
    double x = a.as_double(), y = b.as_double(), r = 0.0;
    switch (op) {
        case BinOp::add: r = x + y; break;
        case BinOp::sub: r = x - y; break;
        case BinOp::mul: r = x * y; break;
        default: eval_fail("internal: unexpected arithmetic op", elem);
    }
    return Value::of_real(checked_double(r, "arithmetic", elem));
}

bool compare(BinOp op, const Value& a, const Value& b) {
    if (a.kind == Value::Kind::integer && b.kind == Value::Kind::integer) {
        switch (op) {
            case BinOp::eq: return a.i == b.i;
            case BinOp::ne: return a.i != b.i;
            case BinOp::lt: return a.i < b.i;
            case BinOp::le: return a.i <= b.i;
            case BinOp::gt: return a.i > b.i;
            default: return a.i >= b.i;
        }
    }
    double x = a.as_double(), y = b.as_double();
    switch (op) {
        case BinOp::eq: return x == y;
        case BinOp::ne: return x != y;
        case BinOp::lt: return x < y;
        case BinOp::le: return x <= y;
        case BinOp::gt: return x > y;
        default: return x >= y;
    }
}

} // namespace

ExprPtr parse_expr(const std::string& src, int arity) {
    if (arity < 1) throw std::invalid_argument("parse_expr: arity must be >= 1");
    return Parser(lex(src), arity).run();
}

Value eval_expr(const Expr& e, const Element& elem) {
    switch (e.kind) {
        case Expr::Kind::number:
            return e.is_int ? Value::of_int(e.int_value) : Value::of_real(e.num_value);
        case Expr::Kind::coord: {
            if (e.coord >= elem.arity())
                eval_fail("coordinate x" + std::to_string(e.coord + 1) + " missing", elem);
            return Value::of_int(elem.coords[static_cast<std::size_t>(e.coord)]);
        }
        case Expr::Kind::unary: {
            Value v = eval_expr(*e.kids[0], elem);
            if (e.un_op == UnOp::logical_not) return Value::of_bool(!v.b);
            if (v.kind == Value::Kind::integer) {
                i64 r = 0;
                if (!__builtin_sub_overflow(i64{0}, v.i, &r)) return Value::of_int(r);
                return Value::of_real(-static_cast<double>(v.i));
            }
            return Value::of_real(-v.r);
        }
        case Expr::Kind::binary: {
            switch (e.bin_op) {
                case BinOp::logical_and: {
                    Value a = eval_expr(*e.kids[0], elem);
                    if (!a.b) return Value::of_bool(false);
                    return Value::of_bool(eval_expr(*e.kids[1], elem).b);
                }
                case BinOp::logical_or: {
                    Value a = eval_expr(*e.kids[0], elem);
                    if (a.b) return Value::of_bool(true);
                    return Value::of_bool(eval_expr(*e.kids[1], elem).b);
                }
                case BinOp::eq:
                case BinOp::ne:
                case BinOp::lt:
                case BinOp::le:
                case BinOp::gt:
                case BinOp::ge: {
                    Value a = eval_expr(*e.kids[0], elem);
                    Value b = eval_expr(*e.kids[1], elem);
                    return Value::of_bool(compare(e.bin_op, a, b));
                }
                default: {
                    Value a = eval_expr(*e.kids[0], elem);
                    Value b = eval_expr(*e.kids[1], elem);
                    return arith(e.bin_op, a, b, elem);
                }
            }
        }
        case Expr::Kind::conditional: {
            Value c = eval_expr(*e.kids[0], elem);
            return eval_expr(c.b ? *e.kids[1] : *e.kids[2], elem);
        }
        case Expr::Kind::call: {
            Value a = eval_expr(*e.kids[0], elem);
            if (e.fn == "abs") {
                if (a.kind == Value::Kind::integer) {
                    if (a.i >= 0) return a;
                    i64 r = 0;
                    if (!__builtin_sub_overflow(i64{0}, a.i, &r)) return Value::of_int(r);
                    return Value::of_real(-static_cast<double>(a.i));
                }
                return Value::of_real(std::fabs(a.r));
            }
            if (e.fn == "sin") return Value::of_real(std::sin(a.as_double()));
            Value b = eval_expr(*e.kids[1], elem);
            if (e.fn == "divides") {
                if (a.kind != Value::Kind::integer || b.kind != Value::Kind::integer)
                    eval_fail("'divides' requires integer operands", elem);
                if (a.i == 0) eval_fail("'divides' with zero divisor", elem);
                return Value::of_bool(b.i % a.i == 0);
            }
            if (e.fn == "min" || e.fn == "max") {
                const bool take_first = (e.fn == "min") == (compare(BinOp::le, a, b));
                return take_first ? a : b;
            }
            // pow
            return Value::of_real(
                checked_double(std::pow(a.as_double(), b.as_double()), "pow", elem));
        }
    }
    eval_fail("internal: unknown node", elem);
}

// --- Pretty printing ----------------------------------------------------------

namespace {

int precedence_level(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::conditional: return 0;
        case Expr::Kind::binary:
            switch (e.bin_op) {
                case BinOp::logical_or: return 1;
                case BinOp::logical_and: return 2;
                case BinOp::eq: case BinOp::ne: case BinOp::lt:
                case BinOp::le: case BinOp::gt: case BinOp::ge: return 3;
                case BinOp::add: case BinOp::sub: return 4;
                default: return 5; // mul/div/mod
            }
        case Expr::Kind::unary: return 6;
        default: return 7; // literals, coordinates, calls
    }
}

const char* op_text(BinOp op) {
    switch (op) {
        case BinOp::add: return "+";
        case BinOp::sub: return "-";
        case BinOp::mul: return "*";
        case BinOp::div: return "/";
        case BinOp::mod: return "%";
        case BinOp::eq: return "==";
        case BinOp::ne: return "!=";
        case BinOp::lt: return "<";
        case BinOp::le: return "<=";
        case BinOp::gt: return ">";
        case BinOp::ge: return ">=";
        case BinOp::logical_and: return "&&";
        default: return "||";
    }
}

void print_expr(std::ostream& os, const Expr& e);

void print_wrapped(std::ostream& os, const Expr& e, int min_level) {
    if (precedence_level(e) < min_level) {
        os << '(';
        print_expr(os, e);
        os << ')';
    } else {
        print_expr(os, e);
    }
}

void print_expr(std::ostream& os, const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::number:
            if (e.is_int) {
                os << e.int_value;
            } else {
                std::string text = format_double(e.num_value);
                // keep a decimal marker so the literal reads back as a real
                if (text.find_first_of(".eE") == std::string::npos) text += ".0";
                os << text;
            }
            return;
        case Expr::Kind::coord:
            os << 'x' << (e.coord + 1);
            return;
        case Expr::Kind::unary:
            os << (e.un_op == UnOp::neg ? '-' : '!');
            print_wrapped(os, *e.kids[0], 6);
            return;
        case Expr::Kind::binary: {
            const int lvl = precedence_level(e);
            const bool assoc = e.bin_op != BinOp::eq && e.bin_op != BinOp::ne &&
                               e.bin_op != BinOp::lt && e.bin_op != BinOp::le &&
                               e.bin_op != BinOp::gt && e.bin_op != BinOp::ge;
            print_wrapped(os, *e.kids[0], assoc ? lvl : lvl + 1);
            os << ' ' << op_text(e.bin_op) << ' ';
            print_wrapped(os, *e.kids[1], lvl + 1);
            return;
        }
        case Expr::Kind::conditional:
            os << "if ";
            print_wrapped(os, *e.kids[0], 0);
            os << " then ";
            print_wrapped(os, *e.kids[1], 0);
            os << " else ";
            print_wrapped(os, *e.kids[2], 0);
            return;
        case Expr::Kind::call: {
            os << e.fn << '(';
            for (std::size_t i = 0; i < e.kids.size(); ++i) {
                if (i) os << ", ";
                print_wrapped(os, *e.kids[i], 0);
            }
            os << ')';
            return;
        }
    }
}

} // namespace

std::string pretty(const Expr& e) {
    std::ostringstream os;
    print_wrapped(os, e, 0);
    return os.str();
}

bool ast_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || a.type != b.type) return false;
    switch (a.kind) {
        case Expr::Kind::number:
            if (a.is_int != b.is_int) return false;
            return a.is_int ? a.int_value == b.int_value : a.num_value == b.num_value;
        case Expr::Kind::coord:
            return a.coord == b.coord;
        case Expr::Kind::unary:
            if (a.un_op != b.un_op) return false;
            break;
        case Expr::Kind::binary:
            if (a.bin_op != b.bin_op) return false;
            break;
        case Expr::Kind::conditional:
            break;
        case Expr::Kind::call:
            if (a.fn != b.fn) return false;
            break;
    }
    if (a.kids.size() != b.kids.size()) return false;
    for (std::size_t i = 0; i < a.kids.size(); ++i)
        if (!ast_equal(*a.kids[i], *b.kids[i])) return false;
    return true;
}

std::function<bool(const Element&)> predicate_fn(const ExprPtr& e) {
    if (!e || e->type != ExprType::boolean)
        throw std::invalid_argument("predicate_fn: expression is not boolean");
    return [e](const Element& elem) { return eval_expr(*e, elem).b; };
}

std::function<double(const Element&)> numeric_fn(const ExprPtr& e) {
    if (!e || e->type != ExprType::num)
        throw std::invalid_argument("numeric_fn: expression is not numeric");
    return [e](const Element& elem) { return eval_expr(*e, elem).as_double(); };
}

} // namespace netconv

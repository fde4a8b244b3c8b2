#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qident/ints.hpp"
#include "qident/xqseries.hpp"

namespace qident::dsl {

/* A small expression language over truncated series in q and x.
 *
 *   expr   := term (('+' | '-') term)*
 *   term   := power (('*' | '/') power)*
 *   power  := unary ('^' unary)*            -- left associative
 *   unary  := '-' unary | atom              -- binds tighter than '^'
 *   atom   := INT | 'q' | 'x' | NAME
 *           | 'poch' '(' base ',' count ')'
 *           | 'sum' '(' NAME ',' INT ',' (INT | 'inf') ',' expr ')'
 *           | '(' expr ')'
 *
 * poch(base, n) = (1 - base)(1 - base*q)...(1 - base*q^(n-1)), the
 * q-Pochhammer product; base is restricted to q or x*q^s (s a literal),
 * and count is an integer expression or inf.  sum binds NAME over
 * lo..hi; an infinite sum relies on truncation for termination.
 *
 * NAMEs are sum-bound variables; they hold integers and may appear anywhere
 * an integer may, notably in exponents and poch counts.  Exponents and poch
 * counts are evaluated in an integer-only context in which q and x are
 * rejected.  Shadowing a bound name and referencing an unbound one are both
 * parse-time errors.
 */
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct SourcePos {
    int line = 1;
    int column = 1;
};

struct Expr {
    enum class Kind {
        IntLit,    // value
        VarQ,
        VarX,
        BoundVar,  // name
        Neg,       // child a
        Add, Sub, Mul, Div,  // children a, b
        Pow,       // a ^ b, b evaluated as an integer
        Poch,      // poch(a, b); b null means inf
        Sum        // sum(name, lo, hi, a); hi disengaged means inf
    };

    Kind kind;
    SourcePos pos;

    Int value;         // IntLit
    std::string name;  // BoundVar; Sum binder
    ExprPtr a, b;

    // Poch base shape, extracted at parse time: base = x^base_x_deg * q^...
    // with q-shift base_q_shift (q itself is x^0 q^1).
    int base_x_deg = 0;
    int base_q_shift = 0;

    long long sum_lo = 0;
    std::optional<long long> sum_hi;
};

// Structural equality, ignoring source positions.
bool equal(const Expr& a, const Expr& b);

struct ParseError : std::runtime_error {
    ParseError(SourcePos p, const std::string& message);
    SourcePos pos;
};

struct EvalError : std::runtime_error {
    EvalError(SourcePos p, const std::string& message);
    SourcePos pos;
};

// Throws ParseError with a 1-based line/column and the offending token.
ExprPtr parse(std::string_view text);

// Canonical form: minimal parentheses, '*'/'/'/'^' tight, ' + '/' - ' spaced.
// Reparsing the output reproduces the tree: parse(to_text(parse(s)))
// equals parse(s) structurally.
std::string to_text(const Expr& e);

struct EvalOptions {
    // An infinite sum aborts after this many consecutive terms that fail to
    // raise the minimum total exponent (divergence guard).
    int guard_window = 8;
};

/* Evaluate a closed expression to a series truncated at (qorder, xorder).
 * Throws EvalError for division by a non-unit series, negative exponents,
 * q/x in integer-only positions, non-exact integer division, and infinite
 * sums caught by the divergence guard.  An infinite sum otherwise stops at
 * the first term that is identically zero under truncation. */
XQSeries eval_expr(const Expr& e, int qorder, int xorder,
                   const EvalOptions& options = {});

struct VerifyMismatch {
    int q_exp = 0, x_exp = 0;
    Int lhs, rhs;
};

struct VerifyReport {
    bool equal = false;
    std::optional<VerifyMismatch> first_mismatch;  // lowest q, then lowest x
    int qorder = 0, xorder = 0;
};

// Parse and evaluate both sides at the same truncation and compare
// coefficientwise on the shared window.
VerifyReport run_verify(std::string_view lhs_text, std::string_view rhs_text,
                        int qorder, int xorder, const EvalOptions& options = {});

/* The identities this library is built around, as expression text.  Keeping
 * them in the language they are checked in makes the CLI suite exercise the
 * whole parse/eval path, not just the native builders. */
namespace scripts {

// (q)_inf equals the signed pentagonal series.
inline constexpr const char* pentagonal_product_lhs = "poch(q,inf)";
inline constexpr const char* pentagonal_product_rhs =
    "1 + sum(r,1,inf, (-1)^r * (q^(r*(3*r-1)/2) + q^(r*(3*r+1)/2)))";

// sum_n [(q)_inf - (q)_n] equals (q)_inf * Lambert + weighted pentagonal.
inline constexpr const char* tail_sum_lhs =
    "sum(n,0,inf, poch(q,inf) - poch(q,n))";
inline constexpr const char* tail_sum_rhs =
    "poch(q,inf) * sum(k,1,inf, q^k / (1 - q^k)) + "
    "sum(r,1,inf, (-1)^r * ((3*r-1)*q^(r*(3*r-1)/2) + 3*r*q^(r*(3*r+1)/2)))";

// sum_r (x)_{r+1} x^r equals the bivariate pentagonal series.
inline constexpr const char* s_series_lhs = "sum(r,0,inf, poch(x,r+1) * x^r)";
inline constexpr const char* s_series_rhs =
    "1 + sum(r,1,inf, (-1)^r * (x^(3*r-1)*q^(r*(3*r-1)/2) + "
    "x^(3*r)*q^(r*(3*r+1)/2)))";

}  // namespace scripts

}  // namespace qident::dsl

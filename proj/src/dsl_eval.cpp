#include <algorithm>
#include <map>
#include <string>

#include "qident/dsl.hpp"

namespace qident::dsl {

namespace {

using Env = std::map<std::string, Int>;

// Exponents are capped well past anything a truncated computation can use;
// the cap exists so a stray huge literal cannot balloon scalar powers.
constexpr long long kMaxExponent = 1000000;

long long to_exponent(const Int& v, SourcePos at) {
    if (v < 0) throw EvalError(at, "exponent out of range (negative)");
    if (v > kMaxExponent) throw EvalError(at, "exponent out of range (too large)");
    return static_cast<long long>(v);
}

/* Integer-only evaluation, used for exponents and poch counts.  The series
 * variables make no sense here and are rejected rather than coerced. */
Int eval_scalar(const Expr& e, const Env& env) {
    switch (e.kind) {
        case Expr::Kind::IntLit: return e.value;
        case Expr::Kind::BoundVar: return env.at(e.name);
        case Expr::Kind::Neg: return -eval_scalar(*e.a, env);
        case Expr::Kind::Add: return eval_scalar(*e.a, env) + eval_scalar(*e.b, env);
        case Expr::Kind::Sub: return eval_scalar(*e.a, env) - eval_scalar(*e.b, env);
        case Expr::Kind::Mul: return eval_scalar(*e.a, env) * eval_scalar(*e.b, env);
        case Expr::Kind::Div: {
            const Int num = eval_scalar(*e.a, env);
            const Int den = eval_scalar(*e.b, env);
            if (den == 0) throw EvalError(e.pos, "integer division by zero");
            Int quot, rem;
            boost::multiprecision::divide_qr(num, den, quot, rem);
            if (rem != 0)
                throw EvalError(e.pos, "integer division is not exact here");
            return quot;
        }
        case Expr::Kind::Pow: {
            const Int base = eval_scalar(*e.a, env);
            const long long k = to_exponent(eval_scalar(*e.b, env), e.b->pos);
            Int result = 1;
            Int acc = base;
            for (long long bits = k; bits > 0; bits >>= 1) {
                if (bits & 1) result *= acc;
                if (bits > 1) acc *= acc;
            }
            return result;
        }
        case Expr::Kind::VarQ:
        case Expr::Kind::VarX:
            throw EvalError(e.pos, "q and x are not allowed in integer positions");
        default:
            throw EvalError(e.pos, "expression is not valid in an integer position");
    }
}

class Evaluator {
public:
    Evaluator(int qorder, int xorder, const EvalOptions& options)
        : qorder_(qorder), xorder_(xorder), options_(options) {}

    XQSeries eval(const Expr& e) {
        switch (e.kind) {
            case Expr::Kind::IntLit:
                return XQSeries::constant(e.value, qorder_, xorder_);
            case Expr::Kind::VarQ:
                return XQSeries::monomial(1, 0, 1, qorder_, xorder_);
            case Expr::Kind::VarX:
                return XQSeries::monomial(1, 1, 0, qorder_, xorder_);
            case Expr::Kind::BoundVar:
                return XQSeries::constant(env_.at(e.name), qorder_, xorder_);
            case Expr::Kind::Neg:
                return -eval(*e.a);
            case Expr::Kind::Add:
                return eval(*e.a) + eval(*e.b);
            case Expr::Kind::Sub:
                return eval(*e.a) - eval(*e.b);
            case Expr::Kind::Mul:
                return eval(*e.a) * eval(*e.b);
            case Expr::Kind::Div: {
                const XQSeries num = eval(*e.a);
                const XQSeries den = eval(*e.b);
                const Int& c = den.coeff(0, 0);
                if (c != 1 && c != -1)
                    throw EvalError(e.pos,
                                    "division requires a divisor with constant "
                                    "coefficient +1 or -1 (got " + c.str() + ")");
                return num * reciprocal(den);
            }
            case Expr::Kind::Pow: {
                const long long k = to_exponent(eval_scalar(*e.b, env_), e.b->pos);
                return pow(eval(*e.a), k);
            }
            case Expr::Kind::Poch:
                return eval_poch(e);
            case Expr::Kind::Sum:
                return eval_sum(e);
        }
        throw EvalError(e.pos, "unhandled expression kind");
    }

private:
    // poch(base, n) with base = x^d q^s: prod_{k=0}^{n-1} (1 - x^d q^(s+k)).
    XQSeries eval_poch(const Expr& e) {
        Count count = kInfinite;
        if (e.b) {
            const Int n = eval_scalar(*e.b, env_);
            if (n < 0) throw EvalError(e.pos, "poch count must be >= 0");
            count = static_cast<long long>(std::min<Int>(n, qorder_ + 1));
        }
        XQSeries prod = XQSeries::constant(1, qorder_, xorder_);
        const int d = e.base_x_deg;
        const long long s = e.base_q_shift;
        for (long long k = 0; !count || k < *count; ++k) {
            if (s + k > qorder_) break;  // remaining factors are 1 here
            prod.mul_one_minus_monomial(1, d, static_cast<int>(s + k));
        }
        return prod;
    }

    XQSeries eval_sum(const Expr& e) {
        XQSeries acc(qorder_, xorder_);
        if (e.sum_hi) {
            for (long long v = e.sum_lo; v <= *e.sum_hi; ++v) {
                env_[e.name] = v;
                acc += eval(*e.a);
            }
            env_.erase(e.name);
            return acc;
        }
        /* Infinite sum: evaluate terms until one vanishes identically under
         * truncation.  The guard: a sum whose terms' minimum total exponent
         * stops climbing can never be truncated away, so after guard_window
         * consecutive terms without a new maximum we refuse to continue. */
        int best_valuation = -1;
        int stalled = 0;
        for (long long v = e.sum_lo;; ++v) {
            env_[e.name] = v;
            const XQSeries term = eval(*e.a);
            const auto valuation = term.min_total_degree();
            if (!valuation) break;  // identically zero: the series has converged
            acc += term;
            if (*valuation > best_valuation) {
                best_valuation = *valuation;
                stalled = 0;
            } else if (++stalled >= options_.guard_window) {
                env_.erase(e.name);
                throw EvalError(
                    e.pos, "infinite sum does not converge under truncation (" +
                               std::to_string(options_.guard_window) +
                               " terms without valuation progress)");
            }
        }
        env_.erase(e.name);
        return acc;
    }

    int qorder_, xorder_;
    EvalOptions options_;
    Env env_;
};

}  // namespace

XQSeries eval_expr(const Expr& e, int qorder, int xorder,
                   const EvalOptions& options) {
    return Evaluator(qorder, xorder, options).eval(e);
}

VerifyReport run_verify(std::string_view lhs_text, std::string_view rhs_text,
                        int qorder, int xorder, const EvalOptions& options) {
    const ExprPtr lhs = parse(lhs_text);
    const ExprPtr rhs = parse(rhs_text);
    const XQSeries lv = eval_expr(*lhs, qorder, xorder, options);
    const XQSeries rv = eval_expr(*rhs, qorder, xorder, options);
    VerifyReport report;
    report.qorder = qorder;
    report.xorder = xorder;
    const auto mismatch = first_mismatch(lv, rv);
    report.equal = !mismatch;
    if (mismatch)
        report.first_mismatch = VerifyMismatch{mismatch->q_exp, mismatch->x_exp,
                                               mismatch->lhs, mismatch->rhs};
    return report;
}

}  // namespace qident::dsl

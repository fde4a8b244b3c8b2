#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "qident/dsl.hpp"
#include "qident/identities.hpp"
#include "qident/qseries.hpp"
#include "qident/xqseries.hpp"

using namespace qident;

namespace {

QSeries qs(const std::vector<long long>& coeffs) {
    QSeries s(static_cast<int>(coeffs.size()) - 1);
    for (size_t i = 0; i < coeffs.size(); ++i)
        s.set_coeff(static_cast<int>(i), Int(coeffs[i]));
    return s;
}

XQSeries eval_str(const std::string& text, int qorder, int xorder,
                  const dsl::EvalOptions& options = {}) {
    return dsl::eval_expr(*dsl::parse(text), qorder, xorder, options);
}

// Everything here must parse, print, reparse to the same tree, and evaluate
// without error; the corpus backs the printer and truncation properties.
const std::vector<std::string> kCorpus = {
    "0",
    "1",
    "42",
    "q",
    "x",
    "-q",
    "--q",
    "q + x",
    "q - x",
    "q*x",
    "q/(1 - q)",
    "q^2",
    "-q^2",
    "-(q^2)",
    "(q + x)^3",
    "q^2*x^3",
    "1 - q*x^2",
    "1 + q + q^2 + q^3",
    "(1 + q)*(1 - q)",
    "1 - (q - x)",
    "q - (x - 1)",
    "q - x - 1",
    "q*(x*(1 + q))",
    "q*x*(1 + q)",
    "1/(1 - q)",
    "1/(1 - q)/(1 - q^2)",
    "1/((1 - q)*(1 - q^2))",
    "-1/(1 - q)",
    "(1 - q)/(1 - q)",
    "2^10",
    "2^3^2",
    "q^(2^3)",
    "poch(q,inf)",
    "poch(q,0)",
    "poch(q,5)",
    "poch(x,3)",
    "poch(x*q,inf)",
    "poch(x*q^2,4)",
    "poch(q*x,2)",
    "poch(q,2 + 3)",
    "sum(k,0,5, q^k)",
    "sum(k,2,2, k*q)",
    "sum(k,0,4, (k - 2)*q^k)",
    "sum(k,0,3, q^(k^2))",
    "sum(a,0,3, sum(c,0,3, q^(a + c)))",
    "sum(m,0,6, poch(q,m)*q^m)",
    "sum(k,1,inf, q^k/(1 - q^k))",
    "sum(n,0,inf, poch(q,inf) - poch(q,n))",
    "sum(r,0,inf, poch(x,r + 1)*x^r)",
    "sum(r,1,inf, (-1)^r*(q^(r*(3*r - 1)/2) + q^(r*(3*r + 1)/2)))",
    "1 + sum(r,1,inf, (-1)^r*(x^(3*r - 1)*q^(r*(3*r - 1)/2) + "
    "x^(3*r)*q^(r*(3*r + 1)/2)))",
    "(1 - x)*sum(m,0,inf, poch(x*q,m)*x^m)",
    "1 + sum(m,1,inf, x^m*(poch(x*q,m) - poch(x*q,m - 1)))",
    "x^10/(1 - x)",
    "-x*q + x^2*q^2 - x^3*q^3",
};

}  // namespace

TEST_CASE("parse maps the basic surface forms to the expected trees") {
    const dsl::ExprPtr poch = dsl::parse("poch(q,2)");
    REQUIRE(poch->kind == dsl::Expr::Kind::Poch);
    CHECK(poch->a->kind == dsl::Expr::Kind::VarQ);
    REQUIRE(poch->b != nullptr);
    CHECK(poch->b->kind == dsl::Expr::Kind::IntLit);
    CHECK(poch->b->value == 2);
    CHECK(poch->base_x_deg == 0);
    CHECK(poch->base_q_shift == 1);

    const dsl::ExprPtr prec = dsl::parse("1 - q*x^2");
    REQUIRE(prec->kind == dsl::Expr::Kind::Sub);
    CHECK(prec->a->kind == dsl::Expr::Kind::IntLit);
    REQUIRE(prec->b->kind == dsl::Expr::Kind::Mul);
    CHECK(prec->b->a->kind == dsl::Expr::Kind::VarQ);
    REQUIRE(prec->b->b->kind == dsl::Expr::Kind::Pow);
    CHECK(prec->b->b->a->kind == dsl::Expr::Kind::VarX);

    const dsl::ExprPtr lambert = dsl::parse("sum(k,1,inf, q^k / (1 - q^k))");
    REQUIRE(lambert->kind == dsl::Expr::Kind::Sum);
    CHECK(lambert->name == "k");
    CHECK(lambert->sum_lo == 1);
    CHECK_FALSE(lambert->sum_hi.has_value());
    CHECK(lambert->a->kind == dsl::Expr::Kind::Div);
}

TEST_CASE("poch accepts exactly the monomial bases") {
    CHECK(dsl::parse("poch(x,3)")->base_x_deg == 1);
    CHECK(dsl::parse("poch(x,3)")->base_q_shift == 0);
    CHECK(dsl::parse("poch(x*q,3)")->base_q_shift == 1);
    CHECK(dsl::parse("poch(q*x,3)")->base_q_shift == 1);  // commuted spelling
    CHECK(dsl::parse("poch(x*q^4,2)")->base_q_shift == 4);
    CHECK_THROWS_WITH_AS(dsl::parse("poch(x*x,2)"),
                         doctest::Contains("poch base"), dsl::ParseError);
    CHECK_THROWS_WITH_AS(dsl::parse("poch(1 + q,2)"),
                         doctest::Contains("poch base"), dsl::ParseError);
    CHECK_THROWS_WITH_AS(dsl::parse("poch(q^2,2)"),
                         doctest::Contains("poch base"), dsl::ParseError);
}

TEST_CASE("unary minus binds tighter than the power operator") {
    // -q^2 is (-q)^2 under the declared precedence, hence +q^2
    CHECK(eval_str("-q^2", 3, 0) ==
          XQSeries::monomial(1, 0, 2, 3, 0));
    CHECK(eval_str("-(q^2)", 3, 0) ==
          XQSeries::monomial(-1, 0, 2, 3, 0));
    // appears throughout the shipped scripts as (-1)^r
    CHECK(eval_str("(-1)^3", 2, 0) == XQSeries::constant(-1, 2, 0));
    CHECK(eval_str("(-1)^4", 2, 0) == XQSeries::constant(1, 2, 0));
}

TEST_CASE("syntax errors carry one-based line and column positions") {
    try {
        dsl::parse("1 + + 2");
        FAIL("expected a parse error");
    } catch (const dsl::ParseError& e) {
        CHECK(e.pos.line == 1);
        CHECK(e.pos.column == 5);
        CHECK(std::string(e.what()).find("line 1, column 5") !=
              std::string::npos);
    }
    CHECK_THROWS_WITH_AS(dsl::parse("1 +\n?"),
                         doctest::Contains("line 2, column 1"),
                         dsl::ParseError);
    CHECK_THROWS_WITH_AS(dsl::parse("(1"), doctest::Contains("expected ')'"),
                         dsl::ParseError);
    CHECK_THROWS_WITH_AS(dsl::parse("q q"), doctest::Contains("end of input"),
                         dsl::ParseError);
}

TEST_CASE("binder rules are enforced at parse time") {
    CHECK_THROWS_WITH_AS(dsl::parse("sum(q,0,1, q)"),
                         doctest::Contains("cannot be a sum variable"),
                         dsl::ParseError);
    CHECK_THROWS_WITH_AS(dsl::parse("sum(inf,0,1, q)"),
                         doctest::Contains("cannot be a sum variable"),
                         dsl::ParseError);
    CHECK_THROWS_WITH_AS(dsl::parse("sum(k,0,1, sum(k,0,1, q))"),
                         doctest::Contains("shadows"), dsl::ParseError);
    CHECK_THROWS_WITH_AS(dsl::parse("k + 1"),
                         doctest::Contains("unknown identifier"),
                         dsl::ParseError);
    CHECK_THROWS_WITH_AS(dsl::parse("sum(k,0,1, q) + k"),
                         doctest::Contains("unknown identifier"),
                         dsl::ParseError);  // binding ends with the sum body
    CHECK_THROWS_WITH_AS(dsl::parse("inf"), doctest::Contains("'inf'"),
                         dsl::ParseError);
    CHECK_THROWS_WITH_AS(dsl::parse("sum(k,-1,3, q)"),
                         doctest::Contains("lower bound"), dsl::ParseError);
}

TEST_CASE("the canonical printer is a fixed point of parse") {
    for (const std::string& text : kCorpus) {
        CAPTURE(text);
        const dsl::ExprPtr once = dsl::parse(text);
        const std::string printed = dsl::to_text(*once);
        const dsl::ExprPtr twice = dsl::parse(printed);
        CHECK(dsl::equal(*once, *twice));
        CHECK(dsl::to_text(*twice) == printed);
    }
    // spot-check the canonical spellings themselves
    CHECK(dsl::to_text(*dsl::parse("1-q * x^2")) == "1 - q*x^2");
    CHECK(dsl::to_text(*dsl::parse("(1+q)*x")) == "(1 + q)*x");
    CHECK(dsl::to_text(*dsl::parse("q-(x-1)")) == "q - (x - 1)");
    CHECK(dsl::to_text(*dsl::parse("-(q)")) == "-q");
    CHECK(dsl::to_text(*dsl::parse("sum( k , 0 , inf , q ^ k )")) ==
          "sum(k,0,inf,q^k)");
}

TEST_CASE("evaluating at a wider window then truncating changes nothing") {
    for (const std::string& text : kCorpus) {
        CAPTURE(text);
        const XQSeries wide = eval_str(text, 12, 6);
        const XQSeries narrow = eval_str(text, 7, 3);
        CHECK(wide.truncated(7, 3) == narrow);
    }
}

TEST_CASE("evaluation reproduces the native builders") {
    CHECK(xq_eval_x1(eval_str("poch(q,inf)", 7, 0)) ==
          qs({1, -1, -1, 0, 0, 1, 0, 1}));
    CHECK(xq_eval_x1(eval_str("poch(q,inf)", 50, 0)) ==
          pochhammer_q(kInfinite, 50));
    CHECK(xq_eval_x1(eval_str("poch(q,4)", 12, 0)) == pochhammer_q(4, 12));
    CHECK(xq_eval_x1(eval_str("sum(k,1,inf, q^k/(1 - q^k))", 4, 0)) ==
          qs({0, 1, 2, 2, 3}));
    CHECK(xq_eval_x1(eval_str("sum(k,1,inf, q^k/(1 - q^k))", 30, 0)) ==
          lambert_series(30));
    CHECK(eval_str("sum(r,0,inf, poch(x,r + 1)*x^r)", 20, 10) ==
          s_series(20, 10, SSeriesForm::Direct));
    CHECK(eval_str("poch(x*q,5)", 15, 8) == xq_pochhammer(1, 5, 15, 8));
}

TEST_CASE("division by a unit-constant series is exact") {
    CHECK(eval_str("1/(1 - q) * (1 - q)", 10, 0) ==
          XQSeries::constant(1, 10, 0));
    CHECK(xq_eval_x1(eval_str("1/(1 - q)", 5, 0)) == qs({1, 1, 1, 1, 1, 1}));
    // constant -1 divisors work too: 1/(q - 1) = -(1 + q + q^2 + ...)
    CHECK(xq_eval_x1(eval_str("1/(q - 1)", 4, 0)) ==
          qs({-1, -1, -1, -1, -1}));
    const XQSeries geom = eval_str("1/(1 - x*q)", 4, 4);
    for (int k = 0; k <= 4; ++k) CHECK(geom.coeff(k, k) == 1);
    CHECK(geom.coeff(2, 1) == 0);
}

TEST_CASE("sums respect bounds and bound-variable arithmetic") {
    CHECK(xq_eval_x1(eval_str("sum(k,0,5, q^k)", 8, 0)) ==
          qs({1, 1, 1, 1, 1, 1, 0, 0, 0}));
    CHECK(xq_eval_x1(eval_str("sum(k,2,2, k*q)", 3, 0)) == qs({0, 2, 0, 0}));
    CHECK(xq_eval_x1(eval_str("sum(k,1,3, q^(k*k))", 9, 0)) ==
          qs({0, 1, 0, 0, 1, 0, 0, 0, 0, 1}));
    // empty range: lo > hi sums to zero
    CHECK(eval_str("sum(k,3,2, q^k)", 5, 0).is_zero());
    CHECK(xq_eval_x1(eval_str("sum(n,0,3, poch(q,n))", 10, 0)) ==
          pochhammer_q(0, 10) + pochhammer_q(1, 10) + pochhammer_q(2, 10) +
              pochhammer_q(3, 10));
}

TEST_CASE("infinite sums stop at the first identically-zero term") {
    CHECK(xq_eval_x1(eval_str("sum(k,0,inf, q^(2*k))", 9, 0)) ==
          qs({1, 0, 1, 0, 1, 0, 1, 0, 1, 0}));
    CHECK(eval_str("sum(k,0,inf, 0)", 5, 0).is_zero());
    CHECK(eval_str("x", 3, 0).is_zero());  // x carries no weight at xorder 0
}

TEST_CASE("the divergence guard rejects sums that never truncate away") {
    CHECK_THROWS_WITH_AS(eval_str("sum(k,0,inf, 1 + q)", 10, 0),
                         doctest::Contains("does not converge"),
                         dsl::EvalError);
    CHECK_THROWS_WITH_AS(eval_str("sum(k,0,inf, q)", 10, 0, {3}),
                         doctest::Contains("3 terms"), dsl::EvalError);
}

TEST_CASE("integer-position errors are reported with positions") {
    CHECK_THROWS_WITH_AS(eval_str("1/q", 5, 0),
                         doctest::Contains("+1 or -1 (got 0)"),
                         dsl::EvalError);
    CHECK_THROWS_WITH_AS(eval_str("1/(2 - q)", 5, 0),
                         doctest::Contains("(got 2)"), dsl::EvalError);
    CHECK_THROWS_WITH_AS(eval_str("q^x", 5, 2),
                         doctest::Contains("not allowed in integer positions"),
                         dsl::EvalError);
    CHECK_THROWS_WITH_AS(eval_str("q^(1/2)", 5, 0),
                         doctest::Contains("not exact"), dsl::EvalError);
    CHECK_THROWS_WITH_AS(eval_str("q^(1/0)", 5, 0),
                         doctest::Contains("division by zero"), dsl::EvalError);
    CHECK_THROWS_WITH_AS(eval_str("q^-2", 5, 0),
                         doctest::Contains("exponent out of range"),
                         dsl::EvalError);
    CHECK_THROWS_WITH_AS(eval_str("2^2000000", 5, 0),
                         doctest::Contains("too large"), dsl::EvalError);
    CHECK_THROWS_WITH_AS(eval_str("poch(q,-1)", 5, 0),
                         doctest::Contains("poch count"), dsl::EvalError);
    try {
        eval_str("q^x", 5, 2);
        FAIL("expected an evaluation error");
    } catch (const dsl::EvalError& e) {
        CHECK(e.pos.line == 1);
        CHECK(e.pos.column == 3);
    }
}

TEST_CASE("run_verify reports equality and the first mismatching monomial") {
    const dsl::VerifyReport same =
        dsl::run_verify("poch(q,inf)", "poch(q,inf)", 30, 0);
    CHECK(same.equal);
    CHECK_FALSE(same.first_mismatch.has_value());
    CHECK(same.qorder == 30);

    const dsl::VerifyReport diff = dsl::run_verify("poch(q,inf)", "1 - q", 2, 0);
    CHECK_FALSE(diff.equal);
    REQUIRE(diff.first_mismatch.has_value());
    CHECK(diff.first_mismatch->q_exp == 2);
    CHECK(diff.first_mismatch->x_exp == 0);
    CHECK(diff.first_mismatch->lhs == -1);
    CHECK(diff.first_mismatch->rhs == 0);

    // ordering is by q-exponent first, then x-exponent
    const dsl::VerifyReport bi = dsl::run_verify("x", "x + x*q + x^2", 2, 2);
    REQUIRE(bi.first_mismatch.has_value());
    CHECK(bi.first_mismatch->q_exp == 0);
    CHECK(bi.first_mismatch->x_exp == 2);
}

TEST_CASE("the shipped identity scripts verify at moderate orders") {
    CHECK(dsl::run_verify(dsl::scripts::pentagonal_product_lhs,
                          dsl::scripts::pentagonal_product_rhs, 100, 0)
              .equal);
    CHECK(dsl::run_verify(dsl::scripts::tail_sum_lhs,
                          dsl::scripts::tail_sum_rhs, 60, 0)
              .equal);
    CHECK(dsl::run_verify(dsl::scripts::s_series_lhs,
                          dsl::scripts::s_series_rhs, 40, 20)
              .equal);
    // and the scripts are themselves in canonical-printable form
    for (const char* text :
         {dsl::scripts::pentagonal_product_lhs,
          dsl::scripts::pentagonal_product_rhs, dsl::scripts::tail_sum_lhs,
          dsl::scripts::tail_sum_rhs, dsl::scripts::s_series_lhs,
          dsl::scripts::s_series_rhs}) {
        CAPTURE(text);
        const dsl::ExprPtr tree = dsl::parse(text);
        CHECK(dsl::equal(*tree, *dsl::parse(dsl::to_text(*tree))));
    }
}

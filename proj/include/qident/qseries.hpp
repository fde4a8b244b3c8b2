#pragma once

#include <optional>
#include <vector>

#include "qident/ints.hpp"

namespace qident {

/* Truncated formal power series in q with exact integer coefficients.
 *
 * A QSeries of order N stores the coefficients of q^0 .. q^N and claims
 * nothing about higher powers: it is an element of Z[[q]] known exactly
 * modulo q^(N+1).  Every operation keeps that reading honest -- combining
 * series of different orders yields the smaller order, because that is all
 * the inputs determine.
 */
class QSeries {
public:
    // The zero series of the given order (order >= 0).
    explicit QSeries(int order);

    static QSeries constant(const Int& value, int order);
    // value * q^exponent; exponents beyond the order truncate to zero.
    static QSeries monomial(const Int& value, int exponent, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Int& coeff(int i) const { return coeffs_.at(i); }
    void set_coeff(int i, Int v) { coeffs_.at(i) = std::move(v); }
    void add_coeff(int i, const Int& v) { coeffs_.at(i) += v; }

    bool is_zero() const;

    // The same series viewed modulo q^(new_order+1); new_order <= order().
    QSeries truncated(int new_order) const;

    /* In-place multiplication by the binomial (1 - c q^e), e >= 1.
     * This is the workhorse behind every Pochhammer-style product: it costs
     * one pass over the coefficients instead of a full convolution. */
    void mul_one_minus_monomial(const Int& c, int e);

    // Termwise sum/difference; the operands must have equal order.
    QSeries& operator+=(const QSeries& rhs);
    QSeries& operator-=(const QSeries& rhs);

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a);
    friend QSeries operator*(const QSeries& a, const QSeries& b);

    // Equal order and equal coefficients.
    friend bool operator==(const QSeries& a, const QSeries& b) = default;

private:
    std::vector<Int> coeffs_;  // coeffs_[i] is the coefficient of q^i
};

// First exponent (lowest first) where the two series disagree on their
// common window min(a.order, b.order); disengaged if they agree there.
struct QMismatch {
    int q_exp;
    Int lhs, rhs;
};
std::optional<QMismatch> first_mismatch(const QSeries& a, const QSeries& b);

/* (q)_n = prod_{k=1..n} (1 - q^k), the q-Pochhammer symbol, truncated to the
 * given order.  A disengaged count means (q)_infinity; truncation makes the
 * product finite since factors with k > order are congruent to 1. */
QSeries pochhammer_q(Count n, int order);

/* sum_{k>=1} q^k / (1 - q^k).  The coefficient of q^N is the number of
 * divisors of N. */
QSeries lambert_series(int order);

/* 1 + sum_{r>=1} (-1)^r (q^(r(3r-1)/2) + q^(r(3r+1)/2)), the signed series
 * over generalized pentagonal exponents; equals (q)_infinity termwise. */
QSeries pentagonal_series(int order);

/* sum_{r>=1} (-1)^r ((3r-1) q^(r(3r-1)/2) + 3r q^(r(3r+1)/2)): the same
 * exponents weighted by 3r-1 resp. 3r.  Appears as the correction term next
 * to (q)_infinity * lambert_series. */
QSeries pentagonal_weighted_series(int order);

}  // namespace qident

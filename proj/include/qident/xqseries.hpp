#pragma once

#include <optional>
#include <vector>

#include "qident/ints.hpp"
#include "qident/qseries.hpp"

namespace qident {

/* Truncated formal power series in two variables x and q.
 *
 * An XQSeries with orders (N, D) stores the coefficient of x^a q^b for all
 * 0 <= b <= N, 0 <= a <= D: it is an element of Z[[x,q]] known exactly
 * modulo (q^(N+1), x^(D+1)).  Monomials outside the window simply do not
 * exist as far as the arithmetic is concerned -- products drop them, and
 * "infinite" sums and products terminate once every remaining contribution
 * falls outside.
 */
class XQSeries {
public:
    XQSeries(int qorder, int xorder);  // the zero series

    static XQSeries constant(const Int& value, int qorder, int xorder);
    // value * x^x_exp q^q_exp; truncates to zero if either exponent is out.
    static XQSeries monomial(const Int& value, int x_exp, int q_exp, int qorder,
                             int xorder);
    // A univariate series reinterpreted with x-degree 0.
    static XQSeries embed(const QSeries& s, int xorder);

    int qorder() const { return static_cast<int>(rows_.size()) - 1; }
    int xorder() const { return static_cast<int>(rows_.front().size()) - 1; }

    const Int& coeff(int q_exp, int x_exp) const {
        return rows_.at(q_exp).at(x_exp);
    }
    void set_coeff(int q_exp, int x_exp, Int v);
    void add_coeff(int q_exp, int x_exp, const Int& v);

    bool is_zero() const;

    // Smallest x_exp + q_exp over the nonzero monomials; disengaged when the
    // series is zero.  This is the "valuation" a divergence guard watches.
    std::optional<int> min_total_degree() const;

    XQSeries truncated(int new_qorder, int new_xorder) const;

    /* In-place multiplication by (1 - c x^a q^b), (a,b) != (0,0).
     * One backward pass; the staple move for Pochhammer-style products. */
    void mul_one_minus_monomial(const Int& c, int x_exp, int q_exp);

    // *this += scale * x^x_shift q^q_shift * src (truncating); orders of src
    // must match.  Lets sum-shaped builders avoid full products.
    void add_shifted(const XQSeries& src, int x_shift, int q_shift,
                     const Int& scale = 1);

    XQSeries& operator+=(const XQSeries& rhs);  // equal orders required
    XQSeries& operator-=(const XQSeries& rhs);

    friend XQSeries operator+(const XQSeries& a, const XQSeries& b);
    friend XQSeries operator-(const XQSeries& a, const XQSeries& b);
    friend XQSeries operator-(const XQSeries& a);
    friend XQSeries operator*(const XQSeries& a, const XQSeries& b);

    friend bool operator==(const XQSeries& a, const XQSeries& b) = default;

private:
    // rows_[b][a] is the coefficient of x^a q^b (row-major by q-exponent).
    std::vector<std::vector<Int>> rows_;
};

struct XQMismatch {
    int q_exp, x_exp;
    Int lhs, rhs;
};
// First disagreeing monomial on the common window, ordered by q-exponent
// then x-exponent.
std::optional<XQMismatch> first_mismatch(const XQSeries& a, const XQSeries& b);

/* prod_{j=shift}^{shift+count-1} (1 - x q^j).  With shift=0 this is
 * (x)_count = (1-x)(1-xq)...; with shift=1 it is (xq)_count.  A disengaged
 * count means the infinite product, which terminates once j > qorder. */
XQSeries xq_pochhammer(int shift, Count count, int qorder, int xorder);

/* Formal d/dx: the coefficient of x^a q^b becomes (a+1) * [x^(a+1) q^b].
 * The result has xorder-1 (a series of xorder 0 differentiates to the zero
 * series of xorder 0). */
XQSeries xq_diff_x(const XQSeries& s);

// Evaluate at x = 1 by summing each row; exact when the input's x-window is
// wide enough to hold every monomial of the underlying object.
QSeries xq_eval_x1(const XQSeries& s);

// Substitute x -> xq: x^a q^b becomes x^a q^(a+b), dropped if a+b > qorder.
XQSeries xq_sub_x_to_qx(const XQSeries& s);

/* Multiplicative inverse modulo (q^(N+1), x^(D+1)).  Defined exactly when
 * the constant coefficient (x^0 q^0) is +1 or -1; anything else throws
 * std::domain_error. */
XQSeries reciprocal(const XQSeries& s);

// s^k for k >= 0 by repeated squaring.
XQSeries pow(const XQSeries& s, long long k);

}  // namespace qident

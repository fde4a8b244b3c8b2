#pragma once

#include <optional>
#include <vector>

#include "qident/partitions.hpp"
#include "qident/qseries.hpp"
#include "qident/xqseries.hpp"

namespace qident {

/* The statistic attached to a partition in a signed enumeration sum
 * sum_lambda (-1)^(num_parts) * w(lambda) * q^(weight):
 *
 *   Unit        w = 1
 *   LargestPart w = largest part (0 for the empty partition)
 *   NumParts    w = number of parts
 *   SumMN       w = largest part + number of parts
 *   XPowerMN    w = x^(largest part + number of parts)  (bivariate)
 */
enum class WeightSelector { Unit, LargestPart, NumParts, SumMN, XPowerMN };

// Direct enumeration over all distinct-part partitions of weight <= order.
// Only the scalar selectors are valid here; XPowerMN throws
// std::invalid_argument (it produces a bivariate series, see below).
QSeries signed_partition_sum(int order, WeightSelector w);

// The XPowerMN sum: sum_lambda (-1)^n x^(m+n) q^N.  Since m+n <= N+1 with
// equality only for single-part partitions, xorder = order+1 makes the
// result exact, and that is the xorder used.
XQSeries signed_partition_sum_x(int order);

/* sum_{n>=0} [ (q)_infinity - (q)_n ].  The summand vanishes modulo
 * q^(n+1), so only n <= order contributes under truncation; the running
 * (q)_n is extended one factor per step. */
QSeries zagier_lhs(int order);

/* (q)_infinity * sum_{k>=1} q^k/(1-q^k)
 *   + sum_{r>=1} (-1)^r ((3r-1) q^(r(3r-1)/2) + 3r q^(r(3r+1)/2)). */
QSeries zagier_rhs(int order);

// -(q)_infinity * sum_{k>=1} q^k/(1-q^k): the signed enumeration by number
// of parts in closed form.
QSeries nsum_lhs(int order);

/* 1 + sum_{r>=1} (-1)^r (x^(3r-1) q^(r(3r-1)/2) + x^(3r) q^(r(3r+1)/2)):
 * the bivariate pentagonal series.  Each monomial is added only if both
 * exponents fit the window. */
XQSeries x_identity_rhs(int qorder, int xorder);

/* Three ways of writing S(x) = sum_{r>=0} (x)_{r+1} x^r, all equal as
 * formal series (the second and third arise by telescoping):
 *
 *   Direct       sum_{r>=0} (x)_{r+1} x^r
 *   Telescoped   1 + sum_{m>=1} x^m ((xq)_m - (xq)_{m-1})
 *   ProductForm  (1-x) * sum_{m>=0} (xq)_m x^m
 *
 * where (x)_k = (1-x)(1-xq)...(1-xq^(k-1)) and (xq)_k = (1-xq)...(1-xq^k).
 */
enum class SSeriesForm { Direct, Telescoped, ProductForm };
XQSeries s_series(int qorder, int xorder, SSeriesForm form);

/* S(x) - (1 - q x^2 - q^e x^3 S(qx)) with e = x3_q_exponent.  The true
 * functional equation has e = 2, making the residual identically zero on
 * the whole window; e = 1 or 3 leaves a nonzero residual (first visible at
 * x^3 q^2), which is how a wrong low-order coefficient announces itself. */
XQSeries recurrence_residual(int qorder, int xorder, int x3_q_exponent = 2);

/* d/dx of the XPowerMN enumeration sum, evaluated at x = 1:
 * sum_lambda (-1)^n (m+n) q^N as a univariate series.  Equals the SumMN
 * enumeration by construction; equals the weighted pentagonal series by the
 * identities this library checks. */
QSeries diff_bridge(int order);

/* One row per weight W <= max_weight: the signed count
 * sum_{lambda of W} (-1)^(num_parts) from direct enumeration, the
 * closed-form prediction (+-1 at generalized pentagonal weights including
 * W=0, else 0), and the exceptional partition witnessing it, if any. */
struct CensusRow {
    int weight = 0;
    Int enumerated;
    Int predicted;
    std::optional<Partition> witness;
};
std::vector<CensusRow> pentagonal_census(int max_weight);

}  // namespace qident

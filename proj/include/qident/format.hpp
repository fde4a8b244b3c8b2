#pragma once

#include <iosfwd>
#include <string>

#include "qident/qseries.hpp"
#include "qident/xqseries.hpp"

namespace qident {

/* Human-readable one-line form, zero terms omitted:
 *   univariate  "1 - q - q^2 + q^5 + q^7"
 *   bivariate   "1 - x^2*q - x^3*q^2" (terms ordered by q-exponent, then
 *                x-exponent; coefficients of magnitude 1 are left implicit)
 * The zero series prints "0". */
std::string to_text(const QSeries& s);
std::string to_text(const XQSeries& s);

// A single monomial like "x^3*q^2", "q", "x", or "1" (both exponents zero).
std::string monomial_text(int x_exp, int q_exp);

/* Machine-readable form; coefficients are decimal strings so arbitrary
 * precision survives the trip:
 *   univariate  {"qorder": N, "coeffs": ["c0", "c1", ...]}
 *   bivariate   {"qorder": N, "xorder": D, "rows": [["c00", ...], ...]}
 * with rows indexed by q-exponent and row entries by x-exponent. */
std::string to_json(const QSeries& s);
std::string to_json(const XQSeries& s);

std::ostream& operator<<(std::ostream& os, const QSeries& s);
std::ostream& operator<<(std::ostream& os, const XQSeries& s);

}  // namespace qident

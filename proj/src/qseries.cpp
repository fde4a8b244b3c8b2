#include "qident/qseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace qident {

QSeries::QSeries(int order) {
    if (order < 0) throw std::invalid_argument("QSeries order must be >= 0");
    coeffs_.resize(static_cast<size_t>(order) + 1);
}

QSeries QSeries::constant(const Int& value, int order) {
    QSeries s(order);
    s.coeffs_[0] = value;
    return s;
}

QSeries QSeries::monomial(const Int& value, int exponent, int order) {
    if (exponent < 0) throw std::invalid_argument("monomial exponent must be >= 0");
    QSeries s(order);
    if (exponent <= order) s.coeffs_[exponent] = value;
    return s;
}

bool QSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Int& c) { return c == 0; });
}

QSeries QSeries::truncated(int new_order) const {
    if (new_order > order())
        throw std::invalid_argument("cannot truncate to a higher order");
    QSeries s(new_order);
    std::copy(coeffs_.begin(), coeffs_.begin() + new_order + 1, s.coeffs_.begin());
    return s;
}

void QSeries::mul_one_minus_monomial(const Int& c, int e) {
    if (e < 1) throw std::invalid_argument("binomial exponent must be >= 1");
    // (1 - c q^e) * f: walk downward so each source coefficient is still the
    // pre-multiplication value when it is read.
    for (int i = order(); i >= e; --i) coeffs_[i] -= c * coeffs_[i - e];
}

QSeries& QSeries::operator+=(const QSeries& rhs) {
    if (rhs.order() != order())
        throw std::invalid_argument("operator+= requires equal orders");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& rhs) {
    if (rhs.order() != order())
        throw std::invalid_argument("operator-= requires equal orders");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    const int n = std::min(a.order(), b.order());
    QSeries out(n);
    for (int i = 0; i <= n; ++i) out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return out;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    const int n = std::min(a.order(), b.order());
    QSeries out(n);
    for (int i = 0; i <= n; ++i) out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return out;
}

QSeries operator-(const QSeries& a) {
    QSeries out(a.order());
    for (int i = 0; i <= a.order(); ++i) out.coeffs_[i] = -a.coeffs_[i];
    return out;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    const int n = std::min(a.order(), b.order());
    QSeries out(n);
    for (int i = 0; i <= n; ++i) {
        const Int& ca = a.coeffs_[i];
        if (ca == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            const Int& cb = b.coeffs_[j];
            if (cb == 0) continue;
            out.coeffs_[i + j] += ca * cb;
        }
    }
    return out;
}

std::optional<QMismatch> first_mismatch(const QSeries& a, const QSeries& b) {
    const int n = std::min(a.order(), b.order());
    for (int i = 0; i <= n; ++i)
        if (a.coeff(i) != b.coeff(i)) return QMismatch{i, a.coeff(i), b.coeff(i)};
    return std::nullopt;
}

QSeries pochhammer_q(Count n, int order) {
    if (n && *n < 0) throw std::invalid_argument("pochhammer count must be >= 0");
    QSeries prod = QSeries::constant(1, order);
    // Factors (1 - q^k) with k > order are 1 modulo q^(order+1), so the
    // "infinite" product stops there on its own.
    const long long last = n ? std::min<long long>(*n, order) : order;
    for (long long k = 1; k <= last; ++k)
        prod.mul_one_minus_monomial(1, static_cast<int>(k));
    return prod;
}

QSeries lambert_series(int order) {
    QSeries s(order);
    // q^k / (1 - q^k) = q^k + q^(2k) + q^(3k) + ...
    for (int k = 1; k <= order; ++k)
        for (int m = k; m <= order; m += k) s.add_coeff(m, 1);
    return s;
}

QSeries pentagonal_series(int order) {
    QSeries s = QSeries::constant(1, order);
    for (int r = 1;; ++r) {
        const long long e1 = static_cast<long long>(r) * (3 * r - 1) / 2;
        const long long e2 = static_cast<long long>(r) * (3 * r + 1) / 2;
        if (e1 > order) break;
        const Int sign = (r % 2 == 0) ? 1 : -1;
        s.add_coeff(static_cast<int>(e1), sign);
        if (e2 <= order) s.add_coeff(static_cast<int>(e2), sign);
    }
    return s;
}

QSeries pentagonal_weighted_series(int order) {
    QSeries s(order);
    for (int r = 1;; ++r) {
        const long long e1 = static_cast<long long>(r) * (3 * r - 1) / 2;
        const long long e2 = static_cast<long long>(r) * (3 * r + 1) / 2;
        if (e1 > order) break;
        const Int sign = (r % 2 == 0) ? 1 : -1;
        s.add_coeff(static_cast<int>(e1), sign * (3 * r - 1));
        if (e2 <= order) s.add_coeff(static_cast<int>(e2), sign * (3 * r));
    }
    return s;
}

}  // namespace qident

#include "qident/xqseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace qident {

namespace {

// dst += scale * a * b in Z[x]/(x^(xorder+1)), all rows dense.
void poly_mul_acc(std::vector<Int>& dst, const std::vector<Int>& a,
                  const std::vector<Int>& b, const Int& scale) {
    const int xo = static_cast<int>(dst.size()) - 1;
    for (int i = 0; i <= xo; ++i) {
        if (a[i] == 0) continue;
        const Int ai = a[i] * scale;
        for (int j = 0; i + j <= xo; ++j) {
            if (b[j] == 0) continue;
            dst[i + j] += ai * b[j];
        }
    }
}

bool row_is_zero(const std::vector<Int>& row) {
    return std::all_of(row.begin(), row.end(),
                       [](const Int& c) { return c == 0; });
}

}  // namespace

XQSeries::XQSeries(int qorder, int xorder) {
    if (qorder < 0 || xorder < 0)
        throw std::invalid_argument("XQSeries orders must be >= 0");
    rows_.assign(static_cast<size_t>(qorder) + 1,
                 std::vector<Int>(static_cast<size_t>(xorder) + 1));
}

XQSeries XQSeries::constant(const Int& value, int qorder, int xorder) {
    XQSeries s(qorder, xorder);
    s.rows_[0][0] = value;
    return s;
}

XQSeries XQSeries::monomial(const Int& value, int x_exp, int q_exp, int qorder,
                            int xorder) {
    if (x_exp < 0 || q_exp < 0)
        throw std::invalid_argument("monomial exponents must be >= 0");
    XQSeries s(qorder, xorder);
    if (q_exp <= qorder && x_exp <= xorder) s.rows_[q_exp][x_exp] = value;
    return s;
}

XQSeries XQSeries::embed(const QSeries& s, int xorder) {
    XQSeries out(s.order(), xorder);
    for (int b = 0; b <= s.order(); ++b) out.rows_[b][0] = s.coeff(b);
    return out;
}

void XQSeries::set_coeff(int q_exp, int x_exp, Int v) {
    rows_.at(q_exp).at(x_exp) = std::move(v);
}

void XQSeries::add_coeff(int q_exp, int x_exp, const Int& v) {
    rows_.at(q_exp).at(x_exp) += v;
}

bool XQSeries::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), row_is_zero);
}

std::optional<int> XQSeries::min_total_degree() const {
    std::optional<int> best;
    for (int b = 0; b <= qorder(); ++b)
        for (int a = 0; a <= xorder(); ++a)
            if (rows_[b][a] != 0 && (!best || a + b < *best)) best = a + b;
    return best;
}

XQSeries XQSeries::truncated(int new_qorder, int new_xorder) const {
    if (new_qorder > qorder() || new_xorder > xorder())
        throw std::invalid_argument("cannot truncate to higher orders");
    XQSeries s(new_qorder, new_xorder);
    for (int b = 0; b <= new_qorder; ++b)
        for (int a = 0; a <= new_xorder; ++a) s.rows_[b][a] = rows_[b][a];
    return s;
}

void XQSeries::mul_one_minus_monomial(const Int& c, int x_exp, int q_exp) {
    if (x_exp < 0 || q_exp < 0 || (x_exp == 0 && q_exp == 0))
        throw std::invalid_argument("binomial exponent pair must be nonzero");
    // Walk both indices downward: the source coefficient (b - q_exp, a - x_exp)
    // is always still unmodified when it is read.
    for (int b = qorder(); b >= q_exp; --b)
        for (int a = xorder(); a >= x_exp; --a)
            rows_[b][a] -= c * rows_[b - q_exp][a - x_exp];
}

void XQSeries::add_shifted(const XQSeries& src, int x_shift, int q_shift,
                           const Int& scale) {
    if (src.qorder() != qorder() || src.xorder() != xorder())
        throw std::invalid_argument("add_shifted requires equal orders");
    for (int b = 0; b + q_shift <= qorder(); ++b)
        for (int a = 0; a + x_shift <= xorder(); ++a) {
            const Int& c = src.rows_[b][a];
            if (c == 0) continue;
            rows_[b + q_shift][a + x_shift] += scale * c;
        }
}

XQSeries& XQSeries::operator+=(const XQSeries& rhs) {
    if (rhs.qorder() != qorder() || rhs.xorder() != xorder())
        throw std::invalid_argument("operator+= requires equal orders");
    for (int b = 0; b <= qorder(); ++b)
        for (int a = 0; a <= xorder(); ++a) rows_[b][a] += rhs.rows_[b][a];
    return *this;
}

XQSeries& XQSeries::operator-=(const XQSeries& rhs) {
    if (rhs.qorder() != qorder() || rhs.xorder() != xorder())
        throw std::invalid_argument("operator-= requires equal orders");
    for (int b = 0; b <= qorder(); ++b)
        for (int a = 0; a <= xorder(); ++a) rows_[b][a] -= rhs.rows_[b][a];
    return *this;
}

XQSeries operator+(const XQSeries& a, const XQSeries& b) {
    XQSeries out(std::min(a.qorder(), b.qorder()),
                 std::min(a.xorder(), b.xorder()));
    for (int i = 0; i <= out.qorder(); ++i)
        for (int j = 0; j <= out.xorder(); ++j)
            out.rows_[i][j] = a.rows_[i][j] + b.rows_[i][j];
    return out;
}

XQSeries operator-(const XQSeries& a, const XQSeries& b) {
    XQSeries out(std::min(a.qorder(), b.qorder()),
                 std::min(a.xorder(), b.xorder()));
    for (int i = 0; i <= out.qorder(); ++i)
        for (int j = 0; j <= out.xorder(); ++j)
            out.rows_[i][j] = a.rows_[i][j] - b.rows_[i][j];
    return out;
}

XQSeries operator-(const XQSeries& a) {
    XQSeries out(a.qorder(), a.xorder());
    for (int i = 0; i <= a.qorder(); ++i)
        for (int j = 0; j <= a.xorder(); ++j) out.rows_[i][j] = -a.rows_[i][j];
    return out;
}

XQSeries operator*(const XQSeries& a, const XQSeries& b) {
    const int qo = std::min(a.qorder(), b.qorder());
    const int xo = std::min(a.xorder(), b.xorder());
    XQSeries out(qo, xo);
    for (int qa = 0; qa <= qo; ++qa) {
        for (int xa = 0; xa <= xo; ++xa) {
            const Int& ca = a.rows_[qa][xa];
            if (ca == 0) continue;
            for (int qb = 0; qa + qb <= qo; ++qb) {
                const std::vector<Int>& row = b.rows_[qb];
                std::vector<Int>& dst = out.rows_[qa + qb];
                for (int xb = 0; xa + xb <= xo; ++xb) {
                    if (row[xb] == 0) continue;
                    dst[xa + xb] += ca * row[xb];
                }
            }
        }
    }
    return out;
}

std::optional<XQMismatch> first_mismatch(const XQSeries& a, const XQSeries& b) {
    const int qo = std::min(a.qorder(), b.qorder());
    const int xo = std::min(a.xorder(), b.xorder());
    for (int q = 0; q <= qo; ++q)
        for (int x = 0; x <= xo; ++x)
            if (a.coeff(q, x) != b.coeff(q, x))
                return XQMismatch{q, x, a.coeff(q, x), b.coeff(q, x)};
    return std::nullopt;
}

XQSeries xq_pochhammer(int shift, Count count, int qorder, int xorder) {
    if (shift < 0) throw std::invalid_argument("pochhammer shift must be >= 0");
    if (count && *count < 0)
        throw std::invalid_argument("pochhammer count must be >= 0");
    XQSeries prod = XQSeries::constant(1, qorder, xorder);
    // Factor j contributes the monomial x q^j; once j > qorder it is 1 on the
    // truncation window, which bounds the infinite product.
    for (long long j = shift; !count || j < shift + *count; ++j) {
        if (j > qorder) break;
        prod.mul_one_minus_monomial(1, 1, static_cast<int>(j));
    }
    return prod;
}

XQSeries xq_diff_x(const XQSeries& s) {
    const int xo = std::max(s.xorder() - 1, 0);
    XQSeries out(s.qorder(), xo);
    if (s.xorder() == 0) return out;  // constant in x
    for (int b = 0; b <= s.qorder(); ++b)
        for (int a = 0; a <= xo; ++a)
            out.set_coeff(b, a, Int(a + 1) * s.coeff(b, a + 1));
    return out;
}

QSeries xq_eval_x1(const XQSeries& s) {
    QSeries out(s.qorder());
    for (int b = 0; b <= s.qorder(); ++b) {
        Int sum = 0;
        for (int a = 0; a <= s.xorder(); ++a) sum += s.coeff(b, a);
        out.set_coeff(b, std::move(sum));
    }
    return out;
}

XQSeries xq_sub_x_to_qx(const XQSeries& s) {
    XQSeries out(s.qorder(), s.xorder());
    for (int b = 0; b <= s.qorder(); ++b)
        for (int a = 0; a <= s.xorder(); ++a) {
            if (s.coeff(b, a) == 0) continue;
            if (a + b <= s.qorder()) out.add_coeff(a + b, a, s.coeff(b, a));
        }
    return out;
}

XQSeries reciprocal(const XQSeries& s) {
    const Int& c00 = s.coeff(0, 0);
    if (c00 != 1 && c00 != -1)
        throw std::domain_error(
            "series reciprocal requires constant coefficient +1 or -1");
    const int qo = s.qorder();
    const int xo = s.xorder();

    // Invert the q^0 row in Z[x]/(x^(xo+1)); its constant term is c00 = +-1.
    std::vector<Int> row0_inv(static_cast<size_t>(xo) + 1);
    row0_inv[0] = c00;
    for (int d = 1; d <= xo; ++d) {
        Int acc = 0;
        for (int j = 1; j <= d; ++j) acc += s.coeff(0, j) * row0_inv[d - j];
        row0_inv[d] = -c00 * acc;
    }

    /* With A = sum A_b q^b and B = A^(-1) = sum B_b q^b (rows are x-polys):
     *   B_0 = A_0^(-1),   B_n = -A_0^(-1) * sum_{k=1..n} A_k B_{n-k}. */
    XQSeries out(qo, xo);
    std::vector<std::vector<Int>> b_rows(static_cast<size_t>(qo) + 1);
    b_rows[0] = row0_inv;
    std::vector<Int> acc(static_cast<size_t>(xo) + 1);
    for (int n = 1; n <= qo; ++n) {
        std::fill(acc.begin(), acc.end(), Int(0));
        for (int k = 1; k <= n; ++k) {
            bool any = false;
            for (int a = 0; a <= xo && !any; ++a) any = (s.coeff(k, a) != 0);
            if (!any) continue;
            // acc += A_k * B_{n-k}
            const std::vector<Int>& bk = b_rows[n - k];
            for (int i = 0; i <= xo; ++i) {
                const Int& ai = s.coeff(k, i);
                if (ai == 0) continue;
                for (int j = 0; i + j <= xo; ++j) {
                    if (bk[j] == 0) continue;
                    acc[i + j] += ai * bk[j];
                }
            }
        }
        std::vector<Int> row(static_cast<size_t>(xo) + 1);
        if (!row_is_zero(acc)) {
            // row = -row0_inv * acc
            poly_mul_acc(row, row0_inv, acc, -1);
        }
        b_rows[n] = std::move(row);
    }
    for (int b = 0; b <= qo; ++b)
        for (int a = 0; a <= xo; ++a) out.set_coeff(b, a, std::move(b_rows[b][a]));
    return out;
}

XQSeries pow(const XQSeries& s, long long k) {
    if (k < 0) throw std::invalid_argument("series power must be >= 0");
    XQSeries result = XQSeries::constant(1, s.qorder(), s.xorder());
    XQSeries base = s;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

}  // namespace qident

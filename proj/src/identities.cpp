#include "qident/identities.hpp"

#include <stdexcept>

namespace qident {

QSeries signed_partition_sum(int order, WeightSelector w) {
    if (w == WeightSelector::XPowerMN)
        throw std::invalid_argument(
            "XPowerMN is bivariate; use signed_partition_sum_x");
    QSeries out(order);
    for_each_distinct_stats(order, [&](int weight, int n, int m) {
        long long value = 0;
        switch (w) {
            case WeightSelector::Unit: value = 1; break;
            case WeightSelector::LargestPart: value = m; break;
            case WeightSelector::NumParts: value = n; break;
            case WeightSelector::SumMN: value = m + n; break;
            case WeightSelector::XPowerMN: break;  // unreachable
        }
        out.add_coeff(weight, (n % 2 == 0) ? Int(value) : Int(-value));
    });
    return out;
}

XQSeries signed_partition_sum_x(int order) {
    XQSeries out(order, order + 1);
    for_each_distinct_stats(order, [&](int weight, int n, int m) {
        out.add_coeff(weight, m + n, (n % 2 == 0) ? 1 : -1);
    });
    return out;
}

QSeries zagier_lhs(int order) {
    const QSeries inf = pochhammer_q(kInfinite, order);
    QSeries finite = QSeries::constant(1, order);  // (q)_0
    QSeries acc(order);
    for (int n = 0; n <= order; ++n) {
        acc += inf - finite;
        // (q)_{n+1} = (q)_n * (1 - q^{n+1}); past the order the factor is 1.
        if (n + 1 <= order) finite.mul_one_minus_monomial(1, n + 1);
    }
    return acc;
}

QSeries zagier_rhs(int order) {
    QSeries out = pochhammer_q(kInfinite, order) * lambert_series(order);
    out += pentagonal_weighted_series(order);
    return out;
}

QSeries nsum_lhs(int order) {
    return -(pochhammer_q(kInfinite, order) * lambert_series(order));
}

XQSeries x_identity_rhs(int qorder, int xorder) {
    XQSeries s = XQSeries::constant(1, qorder, xorder);
    for (int r = 1;; ++r) {
        const long long e1 = static_cast<long long>(r) * (3 * r - 1) / 2;
        const long long e2 = static_cast<long long>(r) * (3 * r + 1) / 2;
        if (e1 > qorder) break;  // exponents only grow with r
        const Int sign = (r % 2 == 0) ? 1 : -1;
        if (3 * r - 1 <= xorder)
            s.add_coeff(static_cast<int>(e1), 3 * r - 1, sign);
        if (e2 <= qorder && 3 * r <= xorder)
            s.add_coeff(static_cast<int>(e2), 3 * r, sign);
    }
    return s;
}

XQSeries s_series(int qorder, int xorder, SSeriesForm form) {
    switch (form) {
        case SSeriesForm::Direct: {
            // Running product (x)_{r+1}; term r enters shifted by x^r, so
            // r > xorder contributes nothing and the sum stops there.
            XQSeries prod = XQSeries::constant(1, qorder, xorder);
            XQSeries acc(qorder, xorder);
            for (int r = 0; r <= xorder; ++r) {
                prod.mul_one_minus_monomial(1, 1, r);  // ... * (1 - x q^r)
                acc.add_shifted(prod, r, 0);
            }
            return acc;
        }
        case SSeriesForm::Telescoped: {
            // (xq)_m - (xq)_{m-1} = -x q^m (xq)_{m-1} has q-valuation m and
            // picks up an extra x^m shift, so m beyond either order is gone.
            XQSeries acc = XQSeries::constant(1, qorder, xorder);
            XQSeries cur = XQSeries::constant(1, qorder, xorder);  // (xq)_0
            const int last = std::min(qorder, xorder);
            for (int m = 1; m <= last; ++m) {
                XQSeries prev = cur;
                cur.mul_one_minus_monomial(1, 1, m);  // (xq)_m
                acc.add_shifted(cur - prev, m, 0);
            }
            return acc;
        }
        case SSeriesForm::ProductForm: {
            XQSeries sum(qorder, xorder);
            XQSeries cur = XQSeries::constant(1, qorder, xorder);  // (xq)_0
            for (int m = 0; m <= xorder; ++m) {
                if (m > 0 && m <= qorder)
                    cur.mul_one_minus_monomial(1, 1, m);  // (xq)_m
                sum.add_shifted(cur, m, 0);
            }
            sum.mul_one_minus_monomial(1, 1, 0);  // * (1 - x)
            return sum;
        }
    }
    throw std::invalid_argument("unknown SSeriesForm");
}

XQSeries recurrence_residual(int qorder, int xorder, int x3_q_exponent) {
    if (x3_q_exponent < 0)
        throw std::invalid_argument("x3_q_exponent must be >= 0");
    const XQSeries s = s_series(qorder, xorder, SSeriesForm::Direct);
    XQSeries rhs = XQSeries::constant(1, qorder, xorder);
    if (qorder >= 1 && xorder >= 2) rhs.add_coeff(1, 2, -1);  // - q x^2
    rhs.add_shifted(xq_sub_x_to_qx(s), 3, x3_q_exponent, -1);  // - q^e x^3 S(qx)
    return s - rhs;
}

QSeries diff_bridge(int order) {
    return xq_eval_x1(xq_diff_x(signed_partition_sum_x(order)));
}

std::vector<CensusRow> pentagonal_census(int max_weight) {
    if (max_weight < 0) throw std::invalid_argument("max_weight must be >= 0");
    std::vector<CensusRow> rows;
    rows.reserve(static_cast<size_t>(max_weight) + 1);

    // Closed form: +-1 exactly at the exceptional weights.
    std::vector<Int> predicted(static_cast<size_t>(max_weight) + 1);
    predicted[0] = 1;  // the empty partition
    for (int r = 1;; ++r) {
        const long long e1 = static_cast<long long>(r) * (3 * r - 1) / 2;
        const long long e2 = static_cast<long long>(r) * (3 * r + 1) / 2;
        if (e1 > max_weight) break;
        const Int sign = (r % 2 == 0) ? 1 : -1;
        predicted[static_cast<size_t>(e1)] = sign;
        if (e2 <= max_weight) predicted[static_cast<size_t>(e2)] = sign;
    }

    for (int w = 0; w <= max_weight; ++w) {
        CensusRow row;
        row.weight = w;
        row.enumerated = 0;
        row.predicted = predicted[static_cast<size_t>(w)];
        for (const Partition& p : enumerate_distinct(w)) {
            row.enumerated += (p.parts().size() % 2 == 0) ? 1 : -1;
            if (!classify_franklin(p).regular()) row.witness = p;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace qident

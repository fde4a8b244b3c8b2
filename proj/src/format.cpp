#include "qident/format.hpp"

#include <json.hpp>

#include <ostream>

namespace qident {

namespace {

// Append "+/- [|c|*]monomial" to out, handling the leading term's sign.
void append_term(std::string& out, const Int& c, const std::string& monomial) {
    const bool negative = c < 0;
    if (out.empty()) {
        if (negative) out += "-";
    } else {
        out += negative ? " - " : " + ";
    }
    const Int mag = abs(c);
    if (monomial == "1") {
        out += mag.str();
    } else {
        if (mag != 1) out += mag.str() + "*";
        out += monomial;
    }
}

}  // namespace

std::string monomial_text(int x_exp, int q_exp) {
    std::string out;
    if (x_exp > 0) out += (x_exp == 1) ? "x" : "x^" + std::to_string(x_exp);
    if (q_exp > 0) {
        if (!out.empty()) out += "*";
        out += (q_exp == 1) ? "q" : "q^" + std::to_string(q_exp);
    }
    return out.empty() ? "1" : out;
}

std::string to_text(const QSeries& s) {
    std::string out;
    for (int i = 0; i <= s.order(); ++i) {
        if (s.coeff(i) == 0) continue;
        append_term(out, s.coeff(i), monomial_text(0, i));
    }
    return out.empty() ? "0" : out;
}

std::string to_text(const XQSeries& s) {
    std::string out;
    for (int b = 0; b <= s.qorder(); ++b)
        for (int a = 0; a <= s.xorder(); ++a) {
            if (s.coeff(b, a) == 0) continue;
            append_term(out, s.coeff(b, a), monomial_text(a, b));
        }
    return out.empty() ? "0" : out;
}

std::string to_json(const QSeries& s) {
    nlohmann::json j;
    j["qorder"] = s.order();
    nlohmann::json coeffs = nlohmann::json::array();
    for (int i = 0; i <= s.order(); ++i) coeffs.push_back(s.coeff(i).str());
    j["coeffs"] = std::move(coeffs);
    return j.dump();
}

std::string to_json(const XQSeries& s) {
    nlohmann::json j;
    j["qorder"] = s.qorder();
    j["xorder"] = s.xorder();
    nlohmann::json rows = nlohmann::json::array();
    for (int b = 0; b <= s.qorder(); ++b) {
        nlohmann::json row = nlohmann::json::array();
        for (int a = 0; a <= s.xorder(); ++a) row.push_back(s.coeff(b, a).str());
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j.dump();
}

std::ostream& operator<<(std::ostream& os, const QSeries& s) {
    return os << to_text(s);
}

std::ostream& operator<<(std::ostream& os, const XQSeries& s) {
    return os << to_text(s);
}

}  // namespace qident

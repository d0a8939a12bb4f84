#ifndef PC2_REPORT_HPP
#define PC2_REPORT_HPP

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "conjecture.hpp"
#include "json.hpp"
#include "rational.hpp"

namespace pc2 {

struct IdentityRow {
    long n = 0;
    Rational lhs;
    Rational rhs;
    bool equal = false;
};

struct IdentityReport {
    std::string identity;
    long nmax = 0;
    std::string parameter_range;
    std::vector<IdentityRow> results;
    std::vector<ConjectureFit> conjecture;  // only for conjecture identities

    bool pass() const {
        return !first_failure().has_value() &&
               std::all_of(conjecture.begin(), conjecture.end(), [](const ConjectureFit& f) { return f.pass(); });
    }

    std::optional<IdentityRow> first_failure() const {
        for (const auto& row : results) {
            if (!row.equal) return row;
        }
        return std::nullopt;
    }
};

inline nlohmann::ordered_json polynomial_json(const Polynomial& p) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

inline nlohmann::ordered_json to_json(const IdentityReport& report) {
    nlohmann::ordered_json j;
    j["identity"] = report.identity;
    j["nmax"] = report.nmax;
    j["status"] = report.pass() ? "pass" : "fail";
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : report.results) {
        rows.push_back({{"n", row.n}, {"lhs", row.lhs.str()}, {"rhs", row.rhs.str()}, {"equal", row.equal}});
    }
    j["results"] = std::move(rows);
    if (auto f = report.first_failure()) {
        j["first_failure"] = {{"n", f->n}, {"lhs", f->lhs.str()}, {"rhs", f->rhs.str()}};
    } else {
        j["first_failure"] = nullptr;
    }
    if (!report.conjecture.empty()) {
        auto fits = nlohmann::ordered_json::array();
        for (const auto& fit : report.conjecture) {
            nlohmann::ordered_json f;
            f["r"] = fit.r;
            f["consistent"] = fit.consistent;
            f["constant_term_ok"] = fit.constant_term_ok;
            f["top_term_ok"] = fit.top_term_ok;
            auto polys = nlohmann::ordered_json::array();
            for (const auto& p : fit.polynomials) {
                polys.push_back({{"k", p.k},
                                 {"degree", p.interpolated.degree()},
                                 {"degree_ok", p.degree_ok},
                                 {"coefficients", polynomial_json(p.interpolated)}});
            }
            f["polynomials"] = std::move(polys);
            fits.push_back(std::move(f));
        }
        j["conjecture"] = std::move(fits);
    }
    return j;
}

inline std::string polynomial_text(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (long d = p.degree(); d >= 0; --d) {
        const Rational& c = p.coeffs()[static_cast<std::size_t>(d)];
        if (c.is_zero()) continue;
        if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
        else if (c.sign() < 0) out += "-";
        const Rational mag = c.sign() < 0 ? -c : c;
        const bool unit = mag == Rational(1);
        if (!unit || d == 0) out += mag.str();
        if (d > 0) out += (unit ? "" : "*") + std::string("n") + (d > 1 ? "^" + std::to_string(d) : "");
    }
    return out;
}

inline void write_text(std::ostream& os, const IdentityReport& report) {
    os << "identity: " << report.identity << "\n";
    os << "range: " << report.parameter_range << "\n";
    for (const auto& row : report.results) {
        os << "n=" << row.n << " lhs=" << row.lhs << " rhs=" << row.rhs << (row.equal ? " ok" : " MISMATCH") << "\n";
    }
    for (const auto& fit : report.conjecture) {
        os << "r=" << fit.r << " (slack " << fit.slack << ", " << fit.samples.size() << " samples)"
           << " consistent=" << (fit.consistent ? "yes" : "no")
           << " P0==1=" << (fit.constant_term_ok ? "yes" : "no")
           << " top==(2n-2r-1)^2r=" << (fit.top_term_ok ? "yes" : "no") << "\n";
        for (const auto& p : fit.polynomials) {
            os << "  P_{" << fit.r << "," << 2 * p.k << "}(n) = " << polynomial_text(p.interpolated)
               << "  [degree " << p.interpolated.degree() << (p.degree_ok ? ", ok" : ", TOO HIGH") << "]\n";
        }
    }
    os << "status: " << (report.pass() ? "pass" : "fail") << "\n";
    if (auto f = report.first_failure()) {
        os << "first_failure: n=" << f->n << " lhs=" << f->lhs << " rhs=" << f->rhs << "\n";
    }
}

}  // namespace pc2

#endif  // PC2_REPORT_HPP

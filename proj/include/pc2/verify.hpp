#ifndef PC2_VERIFY_HPP
#define PC2_VERIFY_HPP

// Named identity checks. Each check compares an independent left-hand side
// with the stated right-hand side for every n in range and records the exact
// values; a mismatch is data in the report, never an exception.
//
// For the per-n identities (thm*, fold*, thm1, cor1, duality) nmax bounds n.
// For the series identities (eqll, eqconvo02, arcsinh_power) nmax is the
// truncation order and each row is one coefficient index.

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "builtin_series.hpp"
#include "conjecture.hpp"
#include "convolution.hpp"
#include "parallel.hpp"
#include "poly_cauchy.hpp"
#include "report.hpp"
#include "series.hpp"
#include "stirling.hpp"

namespace pc2 {

struct Perturbation {
    long n = 0;
    Rational delta{1};
};

struct VerifyOptions {
    unsigned jobs = 1;
    std::optional<Perturbation> perturb;  // added to the RHS at one n
    bool truncate_thm3 = false;           // drop the l = n+1 term of thm3
};

inline constexpr std::array<std::string_view, 17> identity_names = {
    "thm1",  "cor1",  "thm2",          "thm3",         "thm4",         "thm5",         "thm6",
    "fold5", "fold7", "eqll",          "eqconvo02",    "arcsinh_power", "duality",     "conjecture",
    "conjecture-r1", "conjecture-r2", "conjecture-r3"};

inline bool is_identity_name(std::string_view name) {
    for (auto n : identity_names) {
        if (n == name) return true;
    }
    return false;
}

namespace detail {

struct ClosedFormIdentity {
    std::vector<long> offsets;
    long lower;
    long lookahead;  // how far past n the RHS reads the table
    std::function<Rational(long, CauchySpan)> rhs;
};

inline std::optional<ClosedFormIdentity> closed_form_identity(std::string_view name, const VerifyOptions& opt) {
    if (name == "thm2") return ClosedFormIdentity{{0, 0}, 0, 0, rhs_thm2};
    if (name == "thm3") {
        const bool trunc = opt.truncate_thm3;
        return ClosedFormIdentity{{0, 1}, 0, 1, [trunc](long n, CauchySpan c) {
                                      return trunc ? rhs_thm3(n, c, n) : rhs_thm3(n, c);
                                  }};
    }
    if (name == "thm4") return ClosedFormIdentity{{1, 1}, 0, 2, rhs_thm4};
    if (name == "thm5") return ClosedFormIdentity{{0, 0, 0}, 1, 0, rhs_thm5};
    if (name == "thm6") return ClosedFormIdentity{{0, 0, 0, 0}, 1, 0, rhs_thm6};
    if (name == "fold5") return ClosedFormIdentity{{0, 0, 0, 0, 0}, 2, 0, rhs_fold5};
    if (name == "fold7") return ClosedFormIdentity{{0, 0, 0, 0, 0, 0, 0}, 3, 0, rhs_fold7};
    return std::nullopt;
}

inline void apply_perturbation(IdentityReport& report, const VerifyOptions& opt) {
    if (!opt.perturb) return;
    for (auto& row : report.results) {
        if (row.n == opt.perturb->n) {
            row.rhs += opt.perturb->delta;
            row.equal = (row.lhs == row.rhs);
        }
    }
}

// One row per coefficient index of two series.
inline std::vector<IdentityRow> series_rows(const Series& lhs, const Series& rhs, long order) {
    std::vector<IdentityRow> rows;
    for (long i = 0; i <= order; ++i) rows.push_back({i, lhs[i], rhs[i], lhs[i] == rhs[i]});
    return rows;
}

inline IdentityReport verify_closed_form(std::string_view name, const ClosedFormIdentity& id, long nmax,
                                         PolyCauchyTable& table, const VerifyOptions& opt) {
    IdentityReport report;
    report.identity = std::string(name);
    report.nmax = nmax;
    report.parameter_range = std::to_string(id.lower) + " <= n <= " + std::to_string(nmax);
    if (nmax < id.lower) return report;
    const long max_off = *std::max_element(id.offsets.begin(), id.offsets.end());
    const std::vector<Rational> c = table.sequence(1, nmax + std::max(max_off, id.lookahead));
    const std::size_t count = static_cast<std::size_t>(nmax - id.lower + 1);
    report.results.resize(count);
    parallel_for(count, opt.jobs, [&](std::size_t i) {
        const long n = id.lower + static_cast<long>(i);
        const Rational lhs = convolve({id.offsets, n}, c);
        const Rational rhs = id.rhs(n, c);
        report.results[i] = {n, lhs, rhs, lhs == rhs};
    });
    return report;
}

// L^2 = -t sqrt(1+t^2) L' + sqrt(1+t^2) L
inline IdentityReport verify_eqll(long order) {
    const Series L = L_series(order + 1);
    const Series sq = sqrt_1pt2_series(order);
    const Series lhs = (L * L).truncated(order);
    const Series rhs = -(derivative(L).shift_up(1) * sq) + sq * L;
    IdentityReport report;
    report.identity = "eqll";
    report.nmax = order;
    report.parameter_range = "coefficients of t^0..t^" + std::to_string(order);
    report.results = series_rows(lhs, rhs.truncated(order), order);
    return report;
}

// L L'' expressed through L, L', L'', L''' with prefactors in sqrt(1+t^2).
inline IdentityReport verify_eqconvo02(long order) {
    const Rational half(1, 2), sixth(1, 6), third(1, 3);
    const Series L = L_series(order + 3);
    const Series L1 = derivative(L, 1), L2 = derivative(L, 2), L3 = derivative(L, 3);
    const Series sq = sqrt_1pt2_series(order + 1);
    const Series isq = invsqrt_1pt2_series(order + 1);
    const Series i32 = inv32_1pt2_series(order + 1);

    const Series a = half * i32 - sixth * isq;
    const Series b = (sixth * sq + half * i32 - Rational(2, 3) * isq).shift_down(1);
    const Series c = half * (isq - sq);
    const Series d = -(third * sq.shift_up(1));

    const Series lhs = (L * L2).truncated(order);
    const Series rhs = (a * L + b * L1 + c * L2 + d * L3).truncated(order);
    IdentityReport report;
    report.identity = "eqconvo02";
    report.nmax = order;
    report.parameter_range = "coefficients of t^0..t^" + std::to_string(order);
    report.results = series_rows(lhs, rhs, order);
    return report;
}

// (arcsinh t)^{2m} / (2m)! = sum_{n>=m} (-4)^{n-m} [[n,m]] t^{2n} / (2n)!, m = 1..6
inline IdentityReport verify_arcsinh_power(long order, long mmax = 6) {
    const Level2Triangle level2 = level2_by_recurrence(order / 2);
    const Series as = arcsinh_series(order);
    std::vector<Series> lhs, rhs;
    const Series as2 = as * as;
    Series p = as2;
    for (long m = 1; m <= mmax; ++m) {
        if (m > 1) p = p * as2;
        lhs.push_back(p * Rational(factorial(2 * m)).reciprocal());
        Series r(order);
        for (long n = m; 2 * n <= order; ++n) {
            r.set(2 * n, Rational(-4).pow(n - m) * Rational(level2.at(n, m)) / Rational(factorial(2 * n)));
        }
        rhs.push_back(std::move(r));
    }
    IdentityReport report;
    report.identity = "arcsinh_power";
    report.nmax = order;
    report.parameter_range = "1 <= m <= " + std::to_string(mmax) + ", coefficients of t^0..t^" + std::to_string(order);
    for (long i = 0; i <= order; ++i) {
        IdentityRow row{i, lhs[0][i], rhs[0][i], true};
        for (long m = 0; m < mmax; ++m) {
            if (lhs[m][i] != rhs[m][i]) {
                row = {i, lhs[m][i], rhs[m][i], false};
                break;
            }
        }
        report.results.push_back(std::move(row));
    }
    return report;
}

// EGF coefficients of products of L and L'' against the direct convolution.
inline IdentityReport verify_duality(long nmax, PolyCauchyTable& table, const VerifyOptions& opt) {
    const long order = 2 * nmax;
    const Series L = L_series(order + 2);
    const Series L2 = derivative(L, 2);
    const Series L0 = L.truncated(order);
    struct Case {
        Series product;
        std::vector<long> offsets;
    };
    const std::vector<Case> cases = {
        {L0 * L0, {0, 0}},       {L0 * L2, {0, 1}},       {L2 * L2, {1, 1}},
        {power(L0, 3), {0, 0, 0}}, {power(L0, 4), {0, 0, 0, 0}}, {power(L0, 5), {0, 0, 0, 0, 0}},
        {power(L0, 7), {0, 0, 0, 0, 0, 0, 0}}};
    const std::vector<Rational> c = table.sequence(1, nmax + 1);
    IdentityReport report;
    report.identity = "duality";
    report.nmax = nmax;
    report.parameter_range = "L^2, L L'', (L'')^2, L^3, L^4, L^5, L^7 for 0 <= n <= " + std::to_string(nmax);
    report.results.resize(static_cast<std::size_t>(nmax + 1));
    parallel_for(static_cast<std::size_t>(nmax + 1), opt.jobs, [&](std::size_t i) {
        const long n = static_cast<long>(i);
        IdentityRow row;
        bool first = true;
        for (const auto& cs : cases) {
            const Rational lhs = egf_even_coefficient(cs.product, n);
            const Rational rhs = convolve({cs.offsets, n}, c);
            if (first || lhs != rhs) {
                row = {n, lhs, rhs, lhs == rhs};
                first = false;
                if (lhs != rhs) break;
            }
        }
        report.results[i] = std::move(row);
    });
    return report;
}

// formula vs series route for -3 <= k <= 3
inline IdentityReport verify_thm1(long nmax, PolyCauchyTable& table, const VerifyOptions& opt) {
    constexpr long kmin = -3, kmax = 3;
    const long order = 2 * nmax;
    std::vector<Series> gen(kmax - kmin + 1);
    parallel_for(gen.size(), opt.jobs, [&](std::size_t i) {
        gen[i] = polycauchy2_generating_series(kmin + static_cast<long>(i), order);
    });
    for (long k = kmin; k <= kmax; ++k) table.sequence(k, nmax);
    IdentityReport report;
    report.identity = "thm1";
    report.nmax = nmax;
    report.parameter_range = "0 <= n <= " + std::to_string(nmax) + ", -3 <= k <= 3 (lhs: series, rhs: formula)";
    for (long n = 0; n <= nmax; ++n) {
        IdentityRow row;
        for (long k = kmin; k <= kmax; ++k) {
            const Rational lhs = egf_even_coefficient(gen[static_cast<std::size_t>(k - kmin)], n);
            const Rational rhs = table.get(n, k);
            if (k == 1 || lhs != rhs) row = {n, lhs, rhs, lhs == rhs};
            if (lhs != rhs) break;
        }
        report.results.push_back(std::move(row));
    }
    return report;
}

// termwise unit-cube integral of the binomial product vs formula, 1 <= k <= 3
inline IdentityReport verify_cor1(long nmax, PolyCauchyTable& table, const VerifyOptions& opt) {
    table.get(nmax, 1);
    const Level2Triangle level2 = table.level2();
    IdentityReport report;
    report.identity = "cor1";
    report.nmax = nmax;
    report.parameter_range = "0 <= n <= " + std::to_string(nmax) + ", 1 <= k <= 3 (lhs: integral, rhs: formula)";
    report.results.resize(static_cast<std::size_t>(nmax + 1));
    parallel_for(static_cast<std::size_t>(nmax + 1), opt.jobs, [&](std::size_t i) {
        const long n = static_cast<long>(i);
        IdentityRow row;
        for (long k = 1; k <= 3; ++k) {
            const IntegralCheckResult r = integral_representation_check(level2, n, k);
            if (k == 1 || !r.pass()) row = {n, r.integral_value, r.formula_value, r.pass()};
            if (!r.pass()) break;
        }
        report.results[i] = std::move(row);
    });
    return report;
}

inline void append_conjecture(IdentityReport& report, long r, long nmax, PolyCauchyTable& table) {
    std::vector<long> samples = conjecture_default_samples(r);
    for (long n = samples.back() + 1; n <= nmax; ++n) samples.push_back(n);
    const std::vector<Rational> c = table.sequence(1, samples.back());
    ConjectureFit fit = extract_conjecture_polynomials(r, samples, c);

    // Stated form: P_{r,0} = 1, P_{r,2r} = (2n-2r-1)^{2r}, the rest as
    // recovered but clipped to degree 2k.
    std::vector<Polynomial> stated;
    for (const auto& p : fit.polynomials) {
        std::vector<Rational> coeffs = p.interpolated.coeffs();
        if (static_cast<long>(coeffs.size()) > 2 * p.k + 1) coeffs.resize(static_cast<std::size_t>(2 * p.k + 1));
        stated.emplace_back(std::move(coeffs));
    }
    stated.front() = Polynomial::constant(Rational(1));
    Polynomial top = Polynomial::constant(Rational(1));
    for (long i = 0; i < 2 * r; ++i) top = top * Polynomial::linear(Rational(2), Rational(-2 * r - 1));
    stated.back() = top;

    const std::vector<Rational> lhs = convolution_power_sequence(c, 2 * r + 1, samples.back());
    for (long n : fit.samples) {
        const Rational rhs = conjecture_rhs(r, n, stated, c);
        report.results.push_back({n, lhs[static_cast<std::size_t>(n)], rhs, lhs[static_cast<std::size_t>(n)] == rhs});
    }
    report.conjecture.push_back(std::move(fit));
}

inline IdentityReport verify_conjecture(std::string_view name, long nmax, PolyCauchyTable& table) {
    IdentityReport report;
    report.identity = std::string(name);
    report.nmax = nmax;
    std::vector<long> rs;
    if (name == "conjecture") rs = {1, 2, 3};
    else rs = {static_cast<long>(name.back() - '0')};
    report.parameter_range = "(2r+1)-fold convolution, r in {";
    for (std::size_t i = 0; i < rs.size(); ++i) report.parameter_range += (i ? "," : "") + std::to_string(rs[i]);
    report.parameter_range += "}, n >= r+1";
    for (long r : rs) append_conjecture(report, r, nmax, table);
    return report;
}

}  // namespace detail

inline IdentityReport verify_identity(std::string_view name, long nmax, PolyCauchyTable& table,
                                      const VerifyOptions& opt = {}) {
    if (!is_identity_name(name)) {
        throw std::domain_error("verify_identity: unknown identity '" + std::string(name) + "'");
    }
    if (nmax < 0) {
        throw std::domain_error("verify_identity: negative nmax");
    }
    IdentityReport report;
    if (auto id = detail::closed_form_identity(name, opt)) {
        report = detail::verify_closed_form(name, *id, nmax, table, opt);
    } else if (name == "thm1") {
        report = detail::verify_thm1(nmax, table, opt);
    } else if (name == "cor1") {
        report = detail::verify_cor1(nmax, table, opt);
    } else if (name == "eqll") {
        report = detail::verify_eqll(nmax);
    } else if (name == "eqconvo02") {
        report = detail::verify_eqconvo02(nmax);
    } else if (name == "arcsinh_power") {
        report = detail::verify_arcsinh_power(nmax);
    } else if (name == "duality") {
        report = detail::verify_duality(nmax, table, opt);
    } else {
        report = detail::verify_conjecture(name, nmax, table);
    }
    detail::apply_perturbation(report, opt);
    return report;
}

inline IdentityReport verify_identity(std::string_view name, long nmax, const VerifyOptions& opt = {}) {
    PolyCauchyTable table;
    return verify_identity(name, nmax, table, opt);
}

}  // namespace pc2

#endif  // PC2_VERIFY_HPP

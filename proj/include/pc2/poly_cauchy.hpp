#ifndef PC2_POLY_CAUCHY_HPP
#define PC2_POLY_CAUCHY_HPP

// Poly-Cauchy numbers with level 2, C_{2n}^{(k)}, computed two ways:
//   - from the level-2 Stirling triangle,
//       C_{2n}^{(k)} = sum_{m=1}^n (-4)^{n-m} [[n,m]] / (2m+1)^k,
//   - as EGF coefficients of Lif_{2,k}(arcsinh t).
// Level-1 poly-Cauchy numbers are provided as a comparator.

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "builtin_series.hpp"
#include "combinatorics.hpp"
#include "polynomial.hpp"
#include "series.hpp"
#include "stirling.hpp"

namespace pc2 {

enum class Route { formula, series };

inline std::string to_string(Route r) { return r == Route::formula ? "formula" : "series"; }

inline Rational polycauchy2_by_formula(const Level2Triangle& level2, long n, long k) {
    if (n < 0) {
        throw std::domain_error("polycauchy2_by_formula: negative n");
    }
    if (n == 0) return Rational(1);
    Rational sum;
    for (long m = 1; m <= n; ++m) {
        const Rational weight = Rational(-4).pow(n - m) * Rational(2 * m + 1).pow(-k);
        sum += weight * Rational(level2.at(n, m));
    }
    return sum;
}

inline Rational polycauchy2_by_formula(long n, long k) {
    return polycauchy2_by_formula(level2_by_recurrence(std::max(n, 0L)), n, k);
}

/// Lif_{2,k}(arcsinh t) through t^order.
inline Series polycauchy2_generating_series(long k, long order) {
    return compose(lif2_series(k, order), arcsinh_series(order));
}

inline Rational polycauchy2_by_series(long n, long k, long order) {
    if (n < 0) {
        throw std::domain_error("polycauchy2_by_series: negative n");
    }
    if (order < 2 * n) {
        throw std::domain_error("polycauchy2_by_series: order " + std::to_string(order) +
                                " too small for n = " + std::to_string(n));
    }
    return egf_even_coefficient(polycauchy2_generating_series(k, order), n);
}

/// c_n^{(k)} = sum_{m=0}^n (-1)^{n-m} [n,m] / (m+1)^k
inline Rational polycauchy1(const StirlingTriangle& classical, long n, long k) {
    if (n < 0) {
        throw std::domain_error("polycauchy1: negative n");
    }
    Rational sum;
    for (long m = 0; m <= n; ++m) {
        sum += Rational(sign_pow(n - m)) * Rational(classical.at(n, m)) * Rational(m + 1).pow(-k);
    }
    return sum;
}

inline Rational polycauchy1(long n, long k) { return polycauchy1(stirling1_triangle(std::max(n, 0L)), n, k); }

/// Lif_k(log(1+t)) through t^order.
inline Series polycauchy1_generating_series(long k, long order) {
    return compose(lif_series(k, order), log1p_series(order));
}

inline Rational polycauchy1_by_series(long n, long k, long order) {
    if (order < n) {
        throw std::domain_error("polycauchy1_by_series: order too small");
    }
    return egf_coefficient(polycauchy1_generating_series(k, order), n);
}

// Memoized C_{2n}^{(k)} values with the route that produced each entry.
// Lookups and inserts are serialized; values never change once stored.
class PolyCauchyTable {
public:
    struct Entry {
        Rational value;
        Route route;
    };

    PolyCauchyTable() : level2_(level2_by_recurrence(0)) {}
    explicit PolyCauchyTable(Level2Triangle level2) : level2_(std::move(level2)) {}

    PolyCauchyTable(PolyCauchyTable&& o) noexcept
        : level2_(std::move(o.level2_)), entries_(std::move(o.entries_)), hits_(o.hits_), misses_(o.misses_) {}
    PolyCauchyTable& operator=(PolyCauchyTable&& o) noexcept {
        level2_ = std::move(o.level2_);
        entries_ = std::move(o.entries_);
        hits_ = o.hits_;
        misses_ = o.misses_;
        return *this;
    }

    const Level2Triangle& level2() const { return level2_; }

    const Level2Triangle& ensure_level2(long nmax) {
        std::lock_guard lock(mu_);
        if (nmax > level2_.nmax()) level2_ = level2_extend(level2_, nmax);
        return level2_;
    }

    // Grows the triangle if needed and returns C_{2n}^{(k)} by the formula route.
    Rational get(long n, long k) {
        std::lock_guard lock(mu_);
        if (auto it = entries_.find({n, k}); it != entries_.end()) {
            ++hits_;
            return it->second.value;
        }
        if (n > level2_.nmax()) {
            level2_ = level2_extend(level2_, n);
        }
        Rational v = polycauchy2_by_formula(level2_, n, k);
        entries_.emplace(std::pair{n, k}, Entry{v, Route::formula});
        ++misses_;
        return v;
    }

    void insert(long n, long k, Rational value, Route route) {
        std::lock_guard lock(mu_);
        entries_.insert_or_assign(std::pair{n, k}, Entry{std::move(value), route});
    }

    std::optional<Entry> find(long n, long k) const {
        std::lock_guard lock(mu_);
        if (auto it = entries_.find({n, k}); it != entries_.end()) return it->second;
        return std::nullopt;
    }

    // C_0^{(k)}, C_2^{(k)}, ..., C_{2 nmax}^{(k)}
    std::vector<Rational> sequence(long k, long nmax) {
        std::vector<Rational> out;
        for (long n = 0; n <= nmax; ++n) out.push_back(get(n, k));
        return out;
    }

    std::map<std::pair<long, long>, Entry> entries() const {
        std::lock_guard lock(mu_);
        return entries_;
    }

    std::size_t hits() const { return hits_; }
    std::size_t misses() const { return misses_; }

private:
    Level2Triangle level2_;
    std::map<std::pair<long, long>, Entry> entries_;
    std::size_t hits_ = 0;
    std::size_t misses_ = 0;
    mutable std::mutex mu_;
};

struct IntegralCheckResult {
    long n = 0;
    long k = 0;
    bool polynomial_stage = false;  // binomial product == level-2 polynomial
    bool integral_stage = false;    // termwise integral == formula value
    Rational integral_value;
    Rational formula_value;
    bool pass() const { return polynomial_stage && integral_stage; }
};

/// (-4)^n (n!)^2 C(z/2, n) C(-z/2, n) as a polynomial in z.
inline Polynomial binomial_product_polynomial(long n) {
    Polynomial up = Polynomial::constant(Rational(1));
    Polynomial down = Polynomial::constant(Rational(1));
    for (long i = 0; i < n; ++i) {
        up = up * Polynomial::linear(Rational(1, 2), Rational(-i));
        down = down * Polynomial::linear(Rational(-1, 2), Rational(-i));
    }
    const Rational nf(factorial(n));
    const Polynomial binom_up = up * nf.reciprocal();
    const Polynomial binom_down = down * nf.reciprocal();
    return binom_up * binom_down * (Rational(-4).pow(n) * nf * nf);
}

/// sum_m (-4)^{n-m} [[n,m]] z^{2m}
inline Polynomial level2_even_polynomial(const Level2Triangle& level2, long n) {
    std::vector<Rational> c(static_cast<std::size_t>(2 * n) + 1);
    for (long m = 0; m <= n; ++m) c[2 * m] = Rational(-4).pow(n - m) * Rational(level2.at(n, m));
    return Polynomial(std::move(c));
}

/// The k-fold unit-cube integral of p(x_1 ... x_k): each z^j integrates to
/// 1/(j+1)^k.
inline Rational integrate_product_monomials(const Polynomial& p, long k) {
    Rational sum;
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
        if (p.coeffs()[j].is_zero()) continue;
        sum += p.coeffs()[j] * Rational(static_cast<long>(j) + 1).pow(-k);
    }
    return sum;
}

inline IntegralCheckResult integral_representation_check(const Level2Triangle& level2, long n, long k) {
    if (n < 0 || k < 1) {
        throw std::domain_error("integral_representation_check: requires n >= 0 and k >= 1");
    }
    IntegralCheckResult r;
    r.n = n;
    r.k = k;
    const Polynomial lhs = binomial_product_polynomial(n);
    r.polynomial_stage = (lhs == level2_even_polynomial(level2, n));
    r.integral_value = integrate_product_monomials(lhs, k);
    r.formula_value = polycauchy2_by_formula(level2, n, k);
    r.integral_stage = (r.integral_value == r.formula_value);
    return r;
}

inline IntegralCheckResult integral_representation_check(long n, long k) {
    return integral_representation_check(level2_by_recurrence(std::max(n, 0L)), n, k);
}

}  // namespace pc2

#endif  // PC2_POLY_CAUCHY_HPP

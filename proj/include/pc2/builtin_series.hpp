#ifndef PC2_BUILTIN_SERIES_HPP
#define PC2_BUILTIN_SERIES_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "combinatorics.hpp"
#include "series.hpp"

namespace pc2 {

// arcsinh t = sum_j (-1)^j (2j)! / (4^j (j!)^2 (2j+1)) t^{2j+1}
inline Series arcsinh_series(long order) {
    Series s(order);
    for (long j = 0; 2 * j + 1 <= order; ++j) {
        const Integer fj = factorial(j);
        const Rational c = Rational(sign_pow(j) * factorial(2 * j),
                                    ipow(Integer(4), static_cast<unsigned long>(j)) * fj * fj * (2 * j + 1));
        s.set(2 * j + 1, c);
    }
    return s;
}

// Lif_{2,k}(z) = sum_m z^{2m} / ((2m)! (2m+1)^k), any integer k.
inline Series lif2_series(long k, long order) {
    Series s(order);
    for (long m = 0; 2 * m <= order; ++m) {
        s.set(2 * m, Rational(2 * m + 1).pow(-k) / Rational(factorial(2 * m)));
    }
    return s;
}

// Lif_k(z) = sum_m z^m / (m! (m+1)^k).
inline Series lif_series(long k, long order) {
    Series s(order);
    for (long m = 0; m <= order; ++m) {
        s.set(m, Rational(m + 1).pow(-k) / Rational(factorial(m)));
    }
    return s;
}

inline Series log1p_series(long order) {
    Series s(order);
    for (long m = 1; m <= order; ++m) s.set(m, Rational(sign_pow(m + 1), m));
    return s;
}

inline Series exp_series(long order) {
    Series s(order);
    for (long m = 0; m <= order; ++m) s.set(m, Rational(Integer(1), factorial(m)));
    return s;
}

// Odd part of exp.
inline Series sinh_series(long order) {
    Series s(order);
    for (long m = 1; m <= order; m += 2) s.set(m, Rational(Integer(1), factorial(m)));
    return s;
}

// sqrt(1+t^2) = sum_j (-1)^{j-1} (2j-3)!! / (2^j j!) t^{2j}
inline Series sqrt_1pt2_series(long order) {
    Series s(order);
    for (long j = 0; 2 * j <= order; ++j) {
        s.set(2 * j, Rational(sign_pow(j - 1)) * double_factorial_ext(2 * j - 3) /
                         (pow2(j) * Rational(factorial(j))));
    }
    return s;
}

// (1+t^2)^{-1/2} = sum_j (-1)^j (2j-1)!! / (2^j j!) t^{2j}
inline Series invsqrt_1pt2_series(long order) {
    Series s(order);
    for (long j = 0; 2 * j <= order; ++j) {
        s.set(2 * j, Rational(sign_pow(j)) * double_factorial_ext(2 * j - 1) /
                         (pow2(j) * Rational(factorial(j))));
    }
    return s;
}

// (1+t^2)^{-3/2} = sum_j (-1)^j (2j+1)!! / (2^j j!) t^{2j}
inline Series inv32_1pt2_series(long order) {
    Series s(order);
    for (long j = 0; 2 * j <= order; ++j) {
        s.set(2 * j, Rational(sign_pow(j)) * double_factorial_ext(2 * j + 1) /
                         (pow2(j) * Rational(factorial(j))));
    }
    return s;
}

// L(t) = t / arcsinh t
inline Series L_series(long order) {
    const Series t = Series::monomial(1, order + 1);
    return divide(t, arcsinh_series(order + 1));
}

inline constexpr std::array<std::string_view, 10> builtin_series_names = {
    "arcsinh", "lif2k", "lif_k", "log1p", "sqrt_1pt2", "invsqrt_1pt2", "inv32_1pt2", "L", "exp", "sinh"};

inline bool needs_k(std::string_view name) { return name == "lif2k" || name == "lif_k"; }

inline Series builtin_series(std::string_view name, long order, std::optional<long> k = std::nullopt) {
    if (order < 0) {
        throw std::domain_error("builtin_series: negative order");
    }
    if (needs_k(name) && !k) {
        throw std::domain_error("builtin_series: '" + std::string(name) + "' requires k");
    }
    if (name == "arcsinh") return arcsinh_series(order);
    if (name == "lif2k") return lif2_series(*k, order);
    if (name == "lif_k") return lif_series(*k, order);
    if (name == "log1p") return log1p_series(order);
    if (name == "sqrt_1pt2") return sqrt_1pt2_series(order);
    if (name == "invsqrt_1pt2") return invsqrt_1pt2_series(order);
    if (name == "inv32_1pt2") return inv32_1pt2_series(order);
    if (name == "L") return L_series(order);
    if (name == "exp") return exp_series(order);
    if (name == "sinh") return sinh_series(order);
    throw std::domain_error("builtin_series: unknown series '" + std::string(name) + "'");
}

}  // namespace pc2

#endif  // PC2_BUILTIN_SERIES_HPP

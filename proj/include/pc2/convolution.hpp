#ifndef PC2_CONVOLUTION_HPP
#define PC2_CONVOLUTION_HPP

// Multinomial convolutions of the level-2 Cauchy numbers C_{2m} = C_{2m}^{(1)}
//
//   (C_{2j_1} + ... + C_{2j_k})^n
//     = sum_{i_1+...+i_k = n} (2n)! / ((2i_1)! ... (2i_k)!) C_{2i_1+2j_1} ... C_{2i_k+2j_k}
//
// and the closed-form right-hand sides claimed for particular offset lists.
// All functions take the sequence as a span c with c[m] = C_{2m}.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "rational.hpp"

namespace pc2 {

using CauchySpan = std::span<const Rational>;

struct ConvolutionSpec {
    std::vector<long> offsets;
    long n = 0;
};

namespace detail {

inline const Rational& cauchy_at(CauchySpan c, long m) {
    if (m < 0 || m >= static_cast<long>(c.size())) {
        throw std::domain_error("Cauchy table does not cover index 2*" + std::to_string(m));
    }
    return c[static_cast<std::size_t>(m)];
}

// Sums prod_j c[i_j + offset_j] / (2 i_j)! over compositions of `remaining`
// into the parts from `slot` onward.
inline void convolve_rec(CauchySpan c, std::span<const long> offsets, std::span<const Rational> inv_even_fact,
                         std::size_t slot, long remaining, const Rational& partial, Rational& sum) {
    if (slot + 1 == offsets.size()) {
        sum += partial * inv_even_fact[static_cast<std::size_t>(remaining)] *
               cauchy_at(c, remaining + offsets[slot]);
        return;
    }
    for (long i = 0; i <= remaining; ++i) {
        const Rational& v = cauchy_at(c, i + offsets[slot]);
        if (v.is_zero()) continue;
        convolve_rec(c, offsets, inv_even_fact, slot + 1, remaining - i,
                     partial * inv_even_fact[static_cast<std::size_t>(i)] * v, sum);
    }
}

inline Rational df(long a) { return double_factorial_ext(a); }
inline Rational fact(long n) { return Rational(factorial(n)); }
inline Rational binom(long n, long j) { return Rational(binomial(n, j)); }

// 2^{n-l} (n-l)! (2l)! as it appears in most of the sums below
inline Rational common_denominator(long n, long l) { return pow2(n - l) * fact(n - l) * fact(2 * l); }

inline void require_range(const char* name, long n, long lower) {
    if (n < lower) {
        throw std::domain_error(std::string(name) + ": identity is stated for n >= " + std::to_string(lower) +
                                ", got n = " + std::to_string(n));
    }
}

}  // namespace detail

/// Direct multinomial sum over all compositions of n. Offsets must be
/// nonnegative and at least two.
inline Rational convolve(const ConvolutionSpec& spec, CauchySpan c) {
    if (spec.offsets.size() < 2) {
        throw std::domain_error("convolve: need at least two summands");
    }
    if (spec.n < 0) {
        throw std::domain_error("convolve: negative n");
    }
    for (long j : spec.offsets) {
        if (j < 0) throw std::domain_error("convolve: negative offset");
    }
    const long max_off = *std::max_element(spec.offsets.begin(), spec.offsets.end());
    if (spec.n + max_off >= static_cast<long>(c.size())) {
        throw std::domain_error("convolve: table covers C_{2m} only for m < " + std::to_string(c.size()));
    }
    std::vector<Rational> inv_even_fact;
    for (long i = 0; i <= spec.n; ++i) inv_even_fact.push_back(Rational(factorial(2 * i)).reciprocal());
    Rational sum;
    detail::convolve_rec(c, spec.offsets, inv_even_fact, 0, spec.n, Rational(1), sum);
    return sum * Rational(factorial(2 * spec.n));
}

/// Same value as convolve() with `copies` zero offsets, computed by repeated
/// binomial convolution of even-index EGF sequences: O(copies * n^2).
inline std::vector<Rational> convolution_power_sequence(CauchySpan c, long copies, long nmax) {
    if (copies < 1) {
        throw std::domain_error("convolution_power_sequence: copies must be >= 1");
    }
    if (nmax >= static_cast<long>(c.size())) {
        throw std::domain_error("convolution_power_sequence: table too short");
    }
    std::vector<Rational> acc(c.begin(), c.begin() + nmax + 1);
    for (long r = 1; r < copies; ++r) {
        std::vector<Rational> next(static_cast<std::size_t>(nmax) + 1);
        for (long n = 0; n <= nmax; ++n) {
            for (long i = 0; i <= n; ++i) {
                next[n] += Rational(binomial(2 * n, 2 * i)) * acc[i] * c[n - i];
            }
        }
        acc = std::move(next);
    }
    return acc;
}

// (C_0 + C_0)^n
inline Rational rhs_thm2(long n, CauchySpan c) {
    using namespace detail;
    require_range("rhs_thm2", n, 0);
    Rational sum;
    for (long l = 0; l <= n; ++l) {
        sum += Rational(sign_pow(n - l)) * df(2 * n - 2 * l - 3) * Rational(2 * l - 1) /
               common_denominator(n, l) * cauchy_at(c, l);
    }
    return fact(2 * n) * sum;
}

// (C_0 + C_2)^n. The sum runs to l = n+1 unless `upper` is given.
inline Rational rhs_thm3(long n, CauchySpan c, std::optional<long> upper = std::nullopt) {
    using namespace detail;
    require_range("rhs_thm3", n, 0);
    const long last = upper.value_or(n + 1);
    Rational sum;
    for (long l = 0; l <= last; ++l) {
        const long poly = 3 * n * n - 3 * n * l + 2 * l * l + 4 * n - 3 * l + 1;
        sum += Rational(sign_pow(n - l - 1) * (2 * l - 1) * poly) * df(2 * n - 2 * l - 1) /
               (Rational(3) * pow2(n - l) * fact(n - l + 1) * fact(2 * l)) * cauchy_at(c, l);
    }
    return fact(2 * n) * sum;
}

// (C_2 + C_2)^n
inline Rational rhs_thm4(long n, CauchySpan c) {
    using namespace detail;
    require_range("rhs_thm4", n, 0);
    Rational s1, s2, s3;
    for (long l = 0; l <= n; ++l) {
        const Rational sgn(sign_pow(n - l));
        const Rational den = common_denominator(n, l);
        s1 += sgn * Rational(10 * n - 8 * l + 5) * df(2 * n - 2 * l - 3) / den * cauchy_at(c, l + 2);
        s2 += sgn * Rational(6 * l + 1) * df(2 * n - 2 * l + 1) / den * cauchy_at(c, l + 1);
        const long cubic = 160 * l * l * l - 220 * l * l + 72 * l - 1;
        s3 += sgn * Rational(cubic) * df(2 * n - 2 * l + 1) / den * cauchy_at(c, l);
    }
    const Rational f = fact(2 * n);
    return f / Rational(30) * s1 - f / Rational(3) * s2 - f / Rational(30) * s3;
}

// (C_0 + C_0 + C_0)^n, n >= 1
inline Rational rhs_thm5(long n, CauchySpan c) {
    using namespace detail;
    require_range("rhs_thm5", n, 1);
    return Rational((2 * n - 1) * (n - 1)) * cauchy_at(c, n) +
           Rational(n * (2 * n - 1) * (2 * n - 3) * (2 * n - 3)) * cauchy_at(c, n - 1);
}

// (C_0 + C_0 + C_0 + C_0)^n, n >= 1
inline Rational rhs_thm6(long n, CauchySpan c) {
    using namespace detail;
    require_range("rhs_thm6", n, 1);
    Rational s1, s2;
    for (long l = 0; l <= n; ++l) {
        s1 += Rational(sign_pow(n - l) * (2 * l - 1) * (2 * l - 2) * (2 * l - 3)) * df(2 * n - 2 * l - 3) /
              common_denominator(n, l) * cauchy_at(c, l);
    }
    for (long l = 1; l <= n; ++l) {
        const long cube = (2 * l - 3) * (2 * l - 3) * (2 * l - 3);
        s2 += Rational(sign_pow(n - l) * (2 * l) * (2 * l - 1) * cube) * df(2 * n - 2 * l - 3) /
              common_denominator(n, l) * cauchy_at(c, l - 1);
    }
    return fact(2 * n) / Rational(6) * (s1 + s2);
}

// five-fold (C_0 + ... + C_0)^n, n >= 2
inline Rational rhs_fold5(long n, CauchySpan c) {
    using namespace detail;
    require_range("rhs_fold5", n, 2);
    const Rational p = Rational(4 * n * n - 16 * n + 17, 3);
    return binom(2 * n - 1, 4) * cauchy_at(c, n) +
           p * binom(2 * n, 2) * binom(2 * n - 3, 2) * cauchy_at(c, n - 1) +
           binom(2 * n, 4) * Rational(2 * n - 5).pow(4) * cauchy_at(c, n - 2);
}

// seven-fold (C_0 + ... + C_0)^n, n >= 3
inline Rational rhs_fold7(long n, CauchySpan c) {
    using namespace detail;
    require_range("rhs_fold7", n, 3);
    const Rational p2 = Rational(12 * n * n - 60 * n + 83, 15);
    const Rational p4 = Rational((4 * n * n - 24 * n + 39) * (12 * n * n - 72 * n + 109), 15);
    return binom(2 * n - 1, 6) * cauchy_at(c, n) +
           p2 * binom(2 * n, 2) * binom(2 * n - 3, 4) * cauchy_at(c, n - 1) +
           p4 * binom(2 * n, 4) * binom(2 * n - 5, 2) * cauchy_at(c, n - 2) +
           binom(2 * n, 6) * Rational(2 * n - 7).pow(6) * cauchy_at(c, n - 3);
}

}  // namespace pc2

#endif  // PC2_CONVOLUTION_HPP

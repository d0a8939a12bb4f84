#ifndef PC2_COMBINATORICS_HPP
#define PC2_COMBINATORICS_HPP

#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace pc2 {

inline Integer factorial(long n) {
    if (n < 0) {
        throw std::domain_error("factorial: negative argument " + std::to_string(n));
    }
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

/// Double factorial of an odd integer, extended to negative odd arguments by
/// (-1)!! = 1 and (-(2i+1))!! = (-1)^i / (2i-1)!!.
inline Rational double_factorial_ext(long a) {
    if (a % 2 == 0) {
        throw std::domain_error("double_factorial_ext: even argument " + std::to_string(a));
    }
    if (a > 0) {
        Integer out;
        mpz_2fac_ui(out.get_mpz_t(), static_cast<unsigned long>(a));
        return Rational(out);
    }
    if (a == -1) {
        return Rational(1);
    }
    const long i = (-a - 1) / 2;
    return Rational(sign_pow(i)) / double_factorial_ext(2 * i - 1);
}

/// Binomial coefficient C(n, j) for any integer n and j >= 0 (falling
/// factorial form for negative n). Zero when 0 <= n < j.
inline Integer binomial(long n, long j) {
    if (j < 0) {
        throw std::domain_error("binomial: negative lower index");
    }
    Integer out;
    if (n >= 0) {
        if (j > n) {
            return Integer(0);
        }
        mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(j));
    } else {
        mpz_bin_ui(out.get_mpz_t(), Integer(n).get_mpz_t(), static_cast<unsigned long>(j));
    }
    return out;
}

inline Integer multinomial(long top, std::span<const long> parts) {
    long total = 0;
    for (long p : parts) {
        if (p < 0) {
            throw std::domain_error("multinomial: negative part");
        }
        total += p;
    }
    if (total != top) {
        throw std::domain_error("multinomial: parts sum to " + std::to_string(total) +
                                ", expected " + std::to_string(top));
    }
    Integer out = factorial(top);
    for (long p : parts) {
        out /= factorial(p);
    }
    return out;
}

inline Integer multinomial(long top, std::initializer_list<long> parts) {
    return multinomial(top, std::span<const long>(parts.begin(), parts.size()));
}

inline Rational harmonic(long n, long k) {
    if (k < 1) {
        throw std::domain_error("harmonic: order must be >= 1");
    }
    if (n < 0) {
        throw std::domain_error("harmonic: negative n");
    }
    Rational sum;
    for (long j = 1; j <= n; ++j) {
        sum += Rational(Integer(1), ipow(Integer(j), static_cast<unsigned long>(k)));
    }
    return sum;
}

// Prefix table H_0^{(k)}, H_1^{(k)}, ... grown on demand.
class HarmonicCache {
public:
    explicit HarmonicCache(long order) : order_(order), values_{Rational(0)} {
        if (order < 1) {
            throw std::domain_error("HarmonicCache: order must be >= 1");
        }
    }

    long order() const { return order_; }

    const Rational& operator()(long n) {
        if (n < 0) {
            throw std::domain_error("HarmonicCache: negative n");
        }
        while (static_cast<long>(values_.size()) <= n) {
            const long j = static_cast<long>(values_.size());
            values_.push_back(values_.back() +
                              Rational(Integer(1), ipow(Integer(j), static_cast<unsigned long>(order_))));
        }
        return values_[static_cast<std::size_t>(n)];
    }

private:
    long order_;
    std::vector<Rational> values_;
};

}  // namespace pc2

#endif  // PC2_COMBINATORICS_HPP

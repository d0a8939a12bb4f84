#ifndef PC2_SERIES_HPP
#define PC2_SERIES_HPP

// Truncated formal power series in t over Rational.
//
// A Series of truncation order N stores the ordinary coefficients of
// t^0 .. t^N; everything beyond t^N is unknown. Binary operations keep the
// smaller order. Coefficients are never EGF-scaled; egf_coefficient() is the
// only place where the n! factor enters.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "rational.hpp"

namespace pc2 {

class Series {
public:
    Series() : coeffs_(1) {}

    // Zero series valid through t^order.
    explicit Series(long order) {
        if (order < 0) {
            throw std::domain_error("Series: negative truncation order");
        }
        coeffs_.resize(static_cast<std::size_t>(order) + 1);
    }

    // Coefficients beyond `order` are dropped, missing ones are zero.
    Series(std::vector<Rational> coeffs, long order) : Series(order) {
        const std::size_t n = std::min(coeffs.size(), coeffs_.size());
        std::move(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(n), coeffs_.begin());
    }

    static Series constant(Rational c, long order) {
        Series s(order);
        s.coeffs_[0] = std::move(c);
        return s;
    }

    // t^power, zero if power > order.
    static Series monomial(long power, long order, Rational c = Rational(1)) {
        Series s(order);
        if (power <= order) {
            s.coeffs_[static_cast<std::size_t>(power)] = std::move(c);
        }
        return s;
    }

    long order() const { return static_cast<long>(coeffs_.size()) - 1; }

    const Rational& operator[](long i) const {
        if (i < 0 || i > order()) {
            throw std::domain_error("Series: coefficient index " + std::to_string(i) +
                                    " outside truncation order " + std::to_string(order()));
        }
        return coeffs_[static_cast<std::size_t>(i)];
    }

    void set(long i, Rational v) {
        if (i < 0 || i > order()) {
            throw std::domain_error("Series: set outside truncation order");
        }
        coeffs_[static_cast<std::size_t>(i)] = std::move(v);
    }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    // Index of the first nonzero coefficient, or nullopt if all known
    // coefficients vanish.
    std::optional<long> valuation() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (!coeffs_[i].is_zero()) return static_cast<long>(i);
        }
        return std::nullopt;
    }

    Series truncated(long order) const {
        if (order > this->order()) {
            throw std::domain_error("Series: cannot extend truncation order");
        }
        return Series(coeffs_, order);
    }

    Series operator-() const {
        Series s = *this;
        for (auto& c : s.coeffs_) c = -c;
        return s;
    }

    friend Series operator+(const Series& a, const Series& b) {
        Series s(std::min(a.order(), b.order()));
        for (long i = 0; i <= s.order(); ++i) s.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        return s;
    }
    friend Series operator-(const Series& a, const Series& b) { return a + (-b); }

    friend Series operator*(const Series& a, const Series& b) {
        Series s(std::min(a.order(), b.order()));
        const long n = s.order();
        for (long i = 0; i <= n; ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (long j = 0; i + j <= n; ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                s.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return s;
    }

    friend Series operator*(Series a, const Rational& c) {
        for (auto& v : a.coeffs_) v *= c;
        return a;
    }
    friend Series operator*(const Rational& c, Series a) { return std::move(a) * c; }

    friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

    // Multiplication by t^v; the known range grows with it.
    Series shift_up(long v) const {
        Series s(order() + v);
        for (long i = 0; i <= order(); ++i) s.coeffs_[i + v] = coeffs_[i];
        return s;
    }

    // Exact division by t^v. The low v coefficients must be zero.
    Series shift_down(long v) const {
        if (v > order() + 1) {
            throw std::domain_error("Series: shift_down beyond truncation order");
        }
        for (long i = 0; i < v; ++i) {
            if (!coeffs_[i].is_zero()) {
                throw std::domain_error("Series: division by t^" + std::to_string(v) +
                                        " with nonzero coefficient at t^" + std::to_string(i));
            }
        }
        if (v == order() + 1) {
            throw std::domain_error("Series: shift_down leaves no known coefficients");
        }
        Series s(order() - v);
        for (long i = 0; i <= s.order(); ++i) s.coeffs_[i] = coeffs_[i + v];
        return s;
    }

private:
    std::vector<Rational> coeffs_;
};

inline Series derivative(const Series& a, long times = 1) {
    if (times < 1) {
        throw std::domain_error("derivative: times must be >= 1");
    }
    if (times > a.order()) {
        throw std::domain_error("derivative: times exceeds truncation order");
    }
    Series out(a.order() - times);
    for (long i = 0; i <= out.order(); ++i) {
        // falling factorial (i+times)!/i!
        Integer ff(1);
        for (long j = i + 1; j <= i + times; ++j) ff *= j;
        out.set(i, a[i + times] * Rational(ff));
    }
    return out;
}

/// outer(inner(t)), valid through min(outer.order(), inner.order()).
inline Series compose(const Series& outer, const Series& inner) {
    if (!inner[0].is_zero()) {
        throw std::domain_error("compose: inner series has nonzero constant term");
    }
    const long n = std::min(outer.order(), inner.order());
    const Series in = inner.truncated(n);
    Series acc = Series::constant(outer[n], n);
    for (long i = n - 1; i >= 0; --i) {
        acc = acc * in;
        acc.set(0, acc[0] + outer[i]);
    }
    return acc;
}

inline Series reciprocal(const Series& a) {
    if (a[0].is_zero()) {
        throw std::domain_error("reciprocal: zero constant term");
    }
    const long n = a.order();
    Series out(n);
    const Rational inv0 = a[0].reciprocal();
    out.set(0, inv0);
    for (long i = 1; i <= n; ++i) {
        Rational acc;
        for (long j = 1; j <= i; ++j) {
            if (a[j].is_zero()) continue;
            acc += a[j] * out[i - j];
        }
        out.set(i, -acc * inv0);
    }
    return out;
}

/// num/den where den = t^v * (unit). num must also be divisible by t^v; the
/// result is valid through min(orders) - v.
inline Series divide(const Series& num, const Series& den) {
    const auto v = den.valuation();
    if (!v) {
        throw std::domain_error("divide: denominator is zero through its truncation order");
    }
    const long n = std::min(num.order(), den.order());
    const Series top = num.truncated(n).shift_down(*v);
    const Series bottom = den.truncated(n).shift_down(*v);
    return top * reciprocal(bottom);
}

inline Series power(const Series& a, long e) {
    if (e < 0) {
        throw std::domain_error("power: negative exponent");
    }
    Series out = Series::constant(Rational(1), a.order());
    for (long i = 0; i < e; ++i) out = out * a;
    return out;
}

/// n! times the coefficient of t^n.
inline Rational egf_coefficient(const Series& a, long n) {
    if (n < 0 || n > a.order()) {
        throw std::domain_error("egf_coefficient: index " + std::to_string(n) +
                                " outside truncation order " + std::to_string(a.order()));
    }
    return a[n] * Rational(factorial(n));
}

/// (2n)! times the coefficient of t^{2n}.
inline Rational egf_even_coefficient(const Series& a, long n) {
    if (n < 0) {
        throw std::domain_error("egf_even_coefficient: negative index");
    }
    return egf_coefficient(a, 2 * n);
}

}  // namespace pc2

#endif  // PC2_SERIES_HPP

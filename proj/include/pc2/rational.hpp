#ifndef PC2_RATIONAL_HPP
#define PC2_RATIONAL_HPP

// Exact rational scalars backed by GMP.
//
// A Rational is always canonical: lowest terms, positive denominator, zero
// stored as 0/1, so equality is structural.

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace pc2 {

using Integer = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}
    Rational(int v) : v_(static_cast<long>(v)) {}
    Rational(const Integer& v) : v_(v) {}
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) {
            throw std::domain_error("Rational: zero denominator");
        }
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    static Rational from_mpq(mpq_class q) {
        q.canonicalize();
        Rational r;
        r.v_ = std::move(q);
        return r;
    }

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    const mpq_class& raw() const { return v_; }

    Rational operator-() const { return from_raw(-v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) {
            throw std::domain_error("Rational: division by zero");
        }
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational reciprocal() const {
        if (is_zero()) {
            throw std::domain_error("Rational: reciprocal of zero");
        }
        return from_raw(1 / v_);
    }

    // Integer powers, negative exponents allowed for nonzero bases.
    Rational pow(long e) const {
        if (e < 0) {
            return reciprocal().pow(-e);
        }
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
        return Rational(num, den);
    }

    // Canonical text form: "p/q", or "p" when q = 1.
    std::string str() const { return v_.get_str(10); }

    static Rational parse(std::string_view text) {
        mpq_class q;
        if (text.empty() || q.set_str(std::string(text), 10) != 0 || q.get_den() == 0) {
            throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
        }
        return from_mpq(std::move(q));
    }

private:
    static Rational from_raw(mpq_class q) {
        Rational r;
        r.v_ = std::move(q);
        return r;
    }

    mpq_class v_{0};
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(const Integer& z) { return z.get_str(10); }

inline Integer ipow(const Integer& base, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

// (-1)^e for any integer e.
inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

// 2^e as a Rational; e may be negative.
inline Rational pow2(long e) { return Rational(2).pow(e); }

}  // namespace pc2

#endif  // PC2_RATIONAL_HPP

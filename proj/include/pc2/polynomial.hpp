#ifndef PC2_POLYNOMIAL_HPP
#define PC2_POLYNOMIAL_HPP

// Dense univariate polynomials over Rational, exact Lagrange interpolation
// and an exact Gaussian-elimination solver.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace pc2 {

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(Rational v) { return Polynomial({std::move(v)}); }
    static Polynomial monomial(std::size_t degree, Rational v = Rational(1)) {
        std::vector<Rational> c(degree + 1);
        c[degree] = std::move(v);
        return Polynomial(std::move(c));
    }
    // a*x + b
    static Polynomial linear(Rational a, Rational b) { return Polynomial({std::move(b), std::move(a)}); }

    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational operator()(const Rational& x) const {
        Rational acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size());
        }
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            c_[i] += o.c_[i];
        }
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) { return *this += o * Rational(-1); }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                out[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Polynomial(std::move(out));
    }
    friend Polynomial operator*(Polynomial a, const Rational& s) {
        for (auto& v : a.c_) v *= s;
        a.trim();
        return a;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) {
            c_.pop_back();
        }
    }

    std::vector<Rational> c_;
};

/// Unique polynomial of degree < points.size() through the given (x, y)
/// samples. The x values must be distinct.
inline Polynomial lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    Polynomial result;
    for (std::size_t i = 0; i < points.size(); ++i) {
        Polynomial basis = Polynomial::constant(Rational(1));
        Rational denom(1);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (i == j) continue;
            const Rational diff = points[i].first - points[j].first;
            if (diff.is_zero()) {
                throw std::domain_error("lagrange_interpolate: repeated abscissa");
            }
            basis = basis * Polynomial::linear(Rational(1), -points[j].first);
            denom *= diff;
        }
        result += basis * (points[i].second / denom);
    }
    return result;
}

struct LinearSolution {
    std::vector<Rational> x;
    std::size_t rank = 0;
    bool unique = false;
    bool consistent = false;
};

/// Solves A x = b exactly. Free variables (if any) are set to zero.
inline LinearSolution solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a.front().size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        const Rational inv = a[r][c].reciprocal();
        for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            const Rational f = a[i][c];
            for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    LinearSolution out;
    out.rank = r;
    out.unique = (r == cols);
    out.consistent = true;
    for (std::size_t i = r; i < rows; ++i) {
        if (!b[i].is_zero()) out.consistent = false;
    }
    out.x.assign(cols, Rational(0));
    for (std::size_t i = 0; i < r; ++i) out.x[pivot_col[i]] = b[i];
    return out;
}

}  // namespace pc2

#endif  // PC2_POLYNOMIAL_HPP

#ifndef PC2_STIRLING_HPP
#define PC2_STIRLING_HPP

// Stirling numbers of the first kind (classical and level 2) and the
// even-index central factorial numbers.
//
// The level-2 numbers [[n,m]] are the coefficients of
//     x (x + 1^2) (x + 2^2) ... (x + (n-1)^2).
// There are four independent constructions: the three-term recurrence, the
// rising-factorial product, subset enumeration of the squares, and the
// alternating combination of classical numbers.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace pc2 {

// Lower-triangular table of integers; out-of-range lookups are zero.
class Triangle {
public:
    Triangle() = default;
    explicit Triangle(std::vector<std::vector<Integer>> rows) : rows_(std::move(rows)) {
        for (std::size_t n = 0; n < rows_.size(); ++n) {
            if (rows_[n].size() != n + 1) {
                throw std::invalid_argument("Triangle: row " + std::to_string(n) + " has wrong length");
            }
        }
    }

    long nmax() const { return static_cast<long>(rows_.size()) - 1; }

    Integer at(long n, long m) const {
        if (n < 0 || m < 0 || n > nmax() || m > n) {
            if (n > nmax()) {
                throw std::out_of_range("Triangle: row " + std::to_string(n) + " beyond nmax " +
                                        std::to_string(nmax()));
            }
            return Integer(0);
        }
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
    }

    const std::vector<Integer>& row(long n) const { return rows_.at(static_cast<std::size_t>(n)); }
    const std::vector<std::vector<Integer>>& rows() const { return rows_; }

    friend bool operator==(const Triangle&, const Triangle&) = default;

protected:
    std::vector<std::vector<Integer>> rows_;
};

struct StirlingTriangle : Triangle {
    using Triangle::Triangle;
};

struct Level2Triangle : Triangle {
    using Triangle::Triangle;
};

// rows[n][m] = t(2n, 2m)
struct CentralFactorialTriangle : Triangle {
    using Triangle::Triangle;
};

/// Unsigned classical Stirling numbers of the first kind through row nmax.
inline StirlingTriangle stirling1_triangle(long nmax) {
    std::vector<std::vector<Integer>> rows;
    rows.push_back({Integer(1)});
    for (long n = 1; n <= nmax; ++n) {
        const auto& prev = rows.back();
        std::vector<Integer> row(static_cast<std::size_t>(n) + 1);
        for (long m = 1; m <= n; ++m) {
            Integer v = prev[m - 1];
            if (m <= n - 1) v += (n - 1) * prev[m];
            row[m] = v;
        }
        rows.push_back(std::move(row));
    }
    return StirlingTriangle(std::move(rows));
}

inline Integer stirling1(long n, long m) {
    if (n < 0 || m < 0 || m > n) return Integer(0);
    return stirling1_triangle(n).at(n, m);
}

/// Continues the recurrence [[n,m]] = [[n-1,m-1]] + (n-1)^2 [[n-1,m]] from
/// the rows already in `base` up to row nmax.
inline Level2Triangle level2_extend(const Level2Triangle& base, long nmax) {
    std::vector<std::vector<Integer>> rows = base.rows();
    if (rows.empty()) rows.push_back({Integer(1)});
    for (long n = static_cast<long>(rows.size()); n <= nmax; ++n) {
        const auto& prev = rows.back();
        const Integer sq = Integer(n - 1) * (n - 1);
        std::vector<Integer> row(static_cast<std::size_t>(n) + 1);
        for (long m = 1; m <= n; ++m) {
            Integer v = prev[m - 1];
            if (m <= n - 1) v += sq * prev[m];
            row[m] = v;
        }
        rows.push_back(std::move(row));
    }
    return Level2Triangle(std::move(rows));
}

/// [[n,m]] with [[0,0]] = 1 (empty product).
inline Level2Triangle level2_by_recurrence(long nmax) {
    if (nmax < 0) {
        throw std::domain_error("level2_by_recurrence: negative nmax");
    }
    return level2_extend(Level2Triangle(), nmax);
}

/// Expands x (x + 1^2) ... (x + (n-1)^2) one factor at a time.
inline Level2Triangle level2_by_rising_factorial(long nmax) {
    if (nmax < 0) {
        throw std::domain_error("level2_by_rising_factorial: negative nmax");
    }
    std::vector<std::vector<Integer>> rows;
    rows.push_back({Integer(1)});
    std::vector<Integer> poly{Integer(1)};  // running product, low degree first
    for (long n = 1; n <= nmax; ++n) {
        // next factor is x for n = 1, otherwise x + (n-1)^2
        const Integer shift = Integer(n - 1) * (n - 1);
        std::vector<Integer> next(poly.size() + 1);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] += shift * poly[i];
        }
        poly = std::move(next);
        rows.push_back(poly);
    }
    return Level2Triangle(std::move(rows));
}

namespace detail {

inline void enumerate_square_products(long next, long last, long remaining, const Integer& product,
                                      Integer& sum) {
    if (remaining == 0) {
        sum += product;
        return;
    }
    for (long i = next; i + remaining - 1 <= last; ++i) {
        enumerate_square_products(i + 1, last, remaining - 1, product * i * i, sum);
    }
}

}  // namespace detail

/// e_{n-m}(1^2, 2^2, ..., (n-1)^2) by enumerating every subset of size n-m.
/// Exponential in n; meant as a brute-force reference for small n.
inline Integer level2_by_symmetric_sum(long n, long m) {
    if (n < 0 || m < 0 || m > n) return Integer(0);
    if (m == 0) return Integer(n == 0 ? 1 : 0);
    Integer sum(0);
    detail::enumerate_square_products(1, n - 1, n - m, Integer(1), sum);
    return sum;
}

/// [n,m]^2 + sum_{d>=1, m-d>=1} 2 (-1)^d [n,m-d] [n,m+d], given the classical
/// triangle through row n.
inline Integer level2_by_classical_combination(const StirlingTriangle& classical, long n, long m) {
    if (n < 0 || m < 0 || m > n) return Integer(0);
    if (m == 0) return Integer(n == 0 ? 1 : 0);
    Integer v = classical.at(n, m) * classical.at(n, m);
    for (long d = 1; m - d >= 1; ++d) {
        const Integer term = 2 * classical.at(n, m - d) * classical.at(n, m + d);
        if (d % 2 == 0) {
            v += term;
        } else {
            v -= term;
        }
    }
    return v;
}

inline Integer level2_by_classical_combination(long n, long m) {
    if (n < 0) return Integer(0);
    return level2_by_classical_combination(stirling1_triangle(n), n, m);
}

/// t(2n, 2m): the x^{2m} coefficient of the central factorial polynomial
///     x * prod_{j=1}^{2n-1} (x + n - j),
/// expanded literally over signed integers.
inline Integer central_factorial_even(long n, long m) {
    if (n < 0 || m < 0 || m > n) return Integer(0);
    if (n == 0) return Integer(1);
    std::vector<Integer> poly{Integer(0), Integer(1)};  // x
    for (long j = 1; j <= 2 * n - 1; ++j) {
        const long shift = n - j;
        std::vector<Integer> next(poly.size() + 1);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] += shift * poly[i];
        }
        poly = std::move(next);
    }
    return poly[static_cast<std::size_t>(2 * m)];
}

inline CentralFactorialTriangle central_factorial_triangle(long nmax) {
    std::vector<std::vector<Integer>> rows;
    for (long n = 0; n <= nmax; ++n) {
        std::vector<Integer> row;
        for (long m = 0; m <= n; ++m) row.push_back(central_factorial_even(n, m));
        rows.push_back(std::move(row));
    }
    return CentralFactorialTriangle(std::move(rows));
}

/// Applies (-1)^{n-m} to every entry.
inline Triangle signed_view(const Triangle& t) {
    std::vector<std::vector<Integer>> rows = t.rows();
    for (std::size_t n = 0; n < rows.size(); ++n) {
        for (std::size_t m = 0; m <= n; ++m) {
            if ((n - m) % 2 == 1) rows[n][m] = -rows[n][m];
        }
    }
    return Triangle(std::move(rows));
}

}  // namespace pc2

#endif  // PC2_STIRLING_HPP

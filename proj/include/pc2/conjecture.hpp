#ifndef PC2_CONJECTURE_HPP
#define PC2_CONJECTURE_HPP

// Recovers the polynomials P_{r,2k}(n) in
//
//   (C_0 + ... + C_0)^n  [2r+1 copies]
//     = sum_{k=0}^r P_{r,2k}(n) C(2n,2k) C(2n-2k-1, 2r-2k) C_{2n-2k}
//
// from exact samples. Every P_{r,2k} is given room for degree 2k + slack;
// the coefficients are the unique solution of the exact linear system built
// from the samples, and the extra samples beyond the unknown count must be
// reproduced exactly. A polynomial passes its degree test when the recovered
// coefficients above degree 2k vanish.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "convolution.hpp"
#include "polynomial.hpp"

namespace pc2 {

struct ConjecturePolynomial {
    long r = 0;
    long k = 0;
    std::vector<std::pair<long, Rational>> sample_points;  // (n, P_{r,2k}(n))
    Polynomial interpolated;
    bool degree_ok = false;
};

struct ConjectureFit {
    long r = 0;
    long slack = 0;
    std::vector<long> samples;             // sample n actually used
    std::vector<ConjecturePolynomial> polynomials;  // index k
    bool consistent = false;  // every sample reproduced by the recovered polynomials
    bool constant_term_ok = false;  // P_{r,0} == 1
    bool top_term_ok = false;       // P_{r,2r}(n) == (2n-2r-1)^{2r}

    bool pass() const {
        return consistent && constant_term_ok && top_term_ok &&
               std::all_of(polynomials.begin(), polynomials.end(), [](const auto& p) { return p.degree_ok; });
    }
};

inline Integer conjecture_prefactor(long r, long k, long n) {
    return binomial(2 * n, 2 * k) * binomial(2 * n - 2 * k - 1, 2 * r - 2 * k);
}

inline long conjecture_unknowns(long r, long slack) {
    long u = 0;
    for (long k = 0; k <= r; ++k) u += 2 * k + 1 + slack;
    return u;
}

/// Default sample range: n = r+1, r+2, ... with `extra` more points than unknowns.
inline std::vector<long> conjecture_default_samples(long r, long slack = 2, long extra = 4) {
    std::vector<long> s;
    const long count = conjecture_unknowns(r, slack) + extra;
    for (long n = r + 1; n < r + 1 + count; ++n) s.push_back(n);
    return s;
}

/// Right-hand side of the conjectured identity for given polynomials.
inline Rational conjecture_rhs(long r, long n, const std::vector<Polynomial>& p, CauchySpan c) {
    Rational sum;
    for (long k = 0; k <= r; ++k) {
        sum += p[static_cast<std::size_t>(k)](Rational(n)) * Rational(conjecture_prefactor(r, k, n)) *
               detail::cauchy_at(c, n - k);
    }
    return sum;
}

/// `c` must cover C_{2m} for every m up to the largest sample.
inline ConjectureFit extract_conjecture_polynomials(long r, const std::vector<long>& n_samples, CauchySpan c,
                                                    long slack = 2) {
    if (r < 1) {
        throw std::domain_error("extract_conjecture_polynomials: r must be >= 1");
    }
    if (slack < 0) {
        throw std::domain_error("extract_conjecture_polynomials: negative slack");
    }
    ConjectureFit fit;
    fit.r = r;
    fit.slack = slack;
    for (long n : n_samples) {
        if (n < r + 1) continue;  // C index 2n-2r would be negative
        bool singular = false;
        for (long k = 0; k <= r; ++k) singular = singular || conjecture_prefactor(r, k, n) == 0;
        if (!singular) fit.samples.push_back(n);
    }
    std::sort(fit.samples.begin(), fit.samples.end());
    fit.samples.erase(std::unique(fit.samples.begin(), fit.samples.end()), fit.samples.end());

    const long unknowns = conjecture_unknowns(r, slack);
    if (static_cast<long>(fit.samples.size()) < unknowns + 1) {
        throw std::domain_error("extract_conjecture_polynomials: " + std::to_string(fit.samples.size()) +
                                " usable samples, need at least " + std::to_string(unknowns + 1));
    }

    const long nmax = fit.samples.back();
    const std::vector<Rational> lhs = convolution_power_sequence(c, 2 * r + 1, nmax);

    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (long n : fit.samples) {
        std::vector<Rational> row;
        for (long k = 0; k <= r; ++k) {
            const Rational base = Rational(conjecture_prefactor(r, k, n)) * detail::cauchy_at(c, n - k);
            Rational npow(1);
            for (long d = 0; d <= 2 * k + slack; ++d) {
                row.push_back(base * npow);
                npow *= Rational(n);
            }
        }
        a.push_back(std::move(row));
        b.push_back(lhs[static_cast<std::size_t>(n)]);
    }
    const LinearSolution sol = solve_exact(std::move(a), std::move(b));
    if (!sol.unique) {
        throw std::domain_error("extract_conjecture_polynomials: samples do not determine the polynomials (rank " +
                                std::to_string(sol.rank) + " of " + std::to_string(unknowns) + ")");
    }
    fit.consistent = sol.consistent;

    std::size_t pos = 0;
    std::vector<Polynomial> solved;
    for (long k = 0; k <= r; ++k) {
        const std::size_t len = static_cast<std::size_t>(2 * k + 1 + slack);
        solved.emplace_back(std::vector<Rational>(sol.x.begin() + static_cast<std::ptrdiff_t>(pos),
                                                  sol.x.begin() + static_cast<std::ptrdiff_t>(pos + len)));
        pos += len;
    }

    for (long k = 0; k <= r; ++k) {
        ConjecturePolynomial p;
        p.r = r;
        p.k = k;
        std::vector<std::pair<Rational, Rational>> pts;
        for (long n : fit.samples) {
            Rational v = solved[static_cast<std::size_t>(k)](Rational(n));
            pts.emplace_back(Rational(n), v);
            p.sample_points.emplace_back(n, std::move(v));
        }
        p.interpolated = lagrange_interpolate(pts);
        p.degree_ok = p.interpolated.degree() <= 2 * k;
        fit.polynomials.push_back(std::move(p));
    }

    fit.constant_term_ok = fit.polynomials.front().interpolated == Polynomial::constant(Rational(1));
    Polynomial top = Polynomial::constant(Rational(1));
    for (long i = 0; i < 2 * r; ++i) top = top * Polynomial::linear(Rational(2), Rational(-2 * r - 1));
    fit.top_term_ok = fit.polynomials.back().interpolated == top;
    return fit;
}

}  // namespace pc2

#endif  // PC2_CONJECTURE_HPP

#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "pc2/conjecture.hpp"
#include "test_support.hpp"

using pc2::Polynomial;
using pc2::Rational;

namespace {

// (a n + b)^e
Polynomial linear_power(long a, long b, long e) {
    Polynomial p = Polynomial::constant(Rational(1));
    for (long i = 0; i < e; ++i) p = p * Polynomial::linear(Rational(a), Rational(b));
    return p;
}

pc2::ConjectureFit fit_for(long r) {
    const auto samples = pc2::conjecture_default_samples(r);
    const auto c = pc2_test::cauchy_k1(samples.back());
    return pc2::extract_conjecture_polynomials(r, samples, c);
}

}  // namespace

TEST(Conjecture, RecoversThreeFoldCoefficients) {
    const auto fit = fit_for(1);
    ASSERT_TRUE(fit.pass());
    EXPECT_EQ(fit.polynomials[0].interpolated, Polynomial::constant(Rational(1)));
    EXPECT_EQ(fit.polynomials[1].interpolated, linear_power(2, -3, 2));
}

TEST(Conjecture, RecoversFiveFoldCoefficients) {
    const auto fit = fit_for(2);
    ASSERT_TRUE(fit.pass());
    EXPECT_EQ(fit.polynomials[1].interpolated,
              Polynomial({Rational(17, 3), Rational(-16, 3), Rational(4, 3)}));
    EXPECT_EQ(fit.polynomials[2].interpolated, linear_power(2, -5, 4));
}

TEST(Conjecture, RecoversSevenFoldCoefficients) {
    const auto fit = fit_for(3);
    ASSERT_TRUE(fit.pass());
    EXPECT_EQ(fit.polynomials[1].interpolated, Polynomial({Rational(83, 15), Rational(-4), Rational(4, 5)}));
    const Polynomial middle = Polynomial({Rational(39), Rational(-24), Rational(4)}) *
                              Polynomial({Rational(109), Rational(-72), Rational(12)}) * Rational(1, 15);
    EXPECT_EQ(fit.polynomials[2].interpolated, middle);
    EXPECT_EQ(fit.polynomials[3].interpolated, linear_power(2, -7, 6));
}

TEST(Conjecture, DegreesAreBounded) {
    for (long r = 1; r <= 4; ++r) {
        const auto fit = fit_for(r);
        EXPECT_TRUE(fit.consistent) << r;
        EXPECT_TRUE(fit.constant_term_ok) << r;
        EXPECT_TRUE(fit.top_term_ok) << r;
        for (const auto& p : fit.polynomials) EXPECT_LE(p.interpolated.degree(), 2 * p.k) << r << "," << p.k;
    }
}

TEST(Conjecture, TooFewSamplesThrow) {
    const auto c = pc2_test::cauchy_k1(10);
    EXPECT_THROW(pc2::extract_conjecture_polynomials(1, {2, 3, 4}, c), std::domain_error);
    EXPECT_THROW(pc2::extract_conjecture_polynomials(0, {2, 3, 4}, c), std::domain_error);
}

TEST(Conjecture, RecoveredPolynomialsReproduceLhs) {
    const long r = 2;
    const auto fit = fit_for(r);
    std::vector<Polynomial> ps;
    for (const auto& p : fit.polynomials) ps.push_back(p.interpolated);
    const auto c = pc2_test::cauchy_k1(30);
    const auto lhs = pc2::convolution_power_sequence(c, 2 * r + 1, 30);
    for (long n = r + 1; n <= 30; ++n) EXPECT_EQ(pc2::conjecture_rhs(r, n, ps, c), lhs[n]) << n;
}

TEST(Lagrange, RecoversCubic) {
    const Polynomial p({Rational(2), Rational(-1, 3), Rational(0), Rational(5, 7)});
    std::vector<std::pair<Rational, Rational>> pts;
    for (long x = -2; x <= 4; ++x) pts.emplace_back(Rational(x), p(Rational(x)));
    EXPECT_EQ(pc2::lagrange_interpolate(pts), p);
}

TEST(SolveExact, DetectsRankAndConsistency) {
    using Row = std::vector<Rational>;
    const auto s = pc2::solve_exact({Row{1, 1}, Row{1, -1}}, {Rational(3), Rational(1)});
    EXPECT_TRUE(s.unique);
    EXPECT_TRUE(s.consistent);
    EXPECT_EQ(s.x, (Row{2, 1}));
    const auto bad = pc2::solve_exact({Row{1, 1}, Row{2, 2}}, {Rational(1), Rational(3)});
    EXPECT_FALSE(bad.unique);
    EXPECT_FALSE(bad.consistent);
}

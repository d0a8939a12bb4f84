#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "pc2/convolution.hpp"
#include "test_support.hpp"

using pc2::ConvolutionSpec;
using pc2::Rational;
using pc2::Series;

namespace {

const std::vector<Rational>& table() {
    static const std::vector<Rational> c = pc2_test::cauchy_k1(24);
    return c;
}

// Product of the shifted EGFs sum_m C_{2(m+j)} t^{2m}/(2m)!, read back at t^{2n}.
Rational series_oracle(const std::vector<long>& offsets, long n) {
    const long order = 2 * n;
    Series prod = Series::constant(Rational(1), order);
    for (long j : offsets) {
        Series f(order);
        for (long m = 0; 2 * m <= order; ++m) f.set(2 * m, table()[m + j] / Rational(pc2::factorial(2 * m)));
        prod = prod * f;
    }
    return pc2::egf_even_coefficient(prod, n);
}

}  // namespace

TEST(Convolve, Fixtures) {
    EXPECT_EQ(pc2::convolve({{0, 0}, 0}, table()), Rational(1));
    EXPECT_EQ(pc2::convolve({{0, 0}, 1}, table()), Rational(2, 3));
    EXPECT_EQ(pc2::convolve({{1, 1}, 0}, table()), Rational(1, 9));
    EXPECT_EQ(pc2::convolve({{0, 1}, 0}, table()), Rational(1, 3));
    EXPECT_EQ(pc2::convolve({{0, 0, 0}, 1}, table()), Rational(1));
}

TEST(Convolve, Errors) {
    EXPECT_THROW(pc2::convolve({{0}, 1}, table()), std::domain_error);
    EXPECT_THROW(pc2::convolve({{0, 0}, 25}, table()), std::domain_error);
    EXPECT_THROW(pc2::convolve({{0, 3}, 22}, table()), std::domain_error);
}

TEST(Convolve, MatchesSeriesProduct) {
    const std::vector<std::vector<long>> cases = {{0, 0}, {0, 1}, {1, 1}, {0, 0, 0}, {0, 2, 1}, {0, 0, 0, 0, 0}};
    for (const auto& offsets : cases) {
        for (long n = 0; n <= 8; ++n) EXPECT_EQ(pc2::convolve({offsets, n}, table()), series_oracle(offsets, n));
    }
}

TEST(Convolve, InvariantUnderPermutingOffsets) {
    std::vector<long> offsets = {0, 1, 2};
    const Rational base = pc2::convolve({offsets, 6}, table());
    while (std::next_permutation(offsets.begin(), offsets.end())) {
        EXPECT_EQ(pc2::convolve({offsets, 6}, table()), base);
    }
}

TEST(Convolve, IteratedRouteAgrees) {
    for (long copies = 2; copies <= 7; ++copies) {
        const auto seq = pc2::convolution_power_sequence(table(), copies, 10);
        for (long n = 0; n <= 10; ++n) {
            EXPECT_EQ(seq[n], pc2::convolve({std::vector<long>(copies, 0), n}, table())) << copies << "," << n;
        }
    }
    EXPECT_EQ(pc2::convolution_power_sequence(table(), 1, 5), std::vector<Rational>(table().begin(), table().begin() + 6));
}

TEST(ClosedFormRhs, Fixtures) {
    EXPECT_EQ(pc2::rhs_thm2(0, table()), Rational(1));
    EXPECT_EQ(pc2::rhs_thm2(1, table()), Rational(2, 3));
    EXPECT_EQ(pc2::rhs_thm3(0, table()), Rational(1, 3));
    EXPECT_EQ(pc2::rhs_thm4(0, table()), Rational(1, 9));
    EXPECT_EQ(pc2::rhs_thm5(1, table()), Rational(1));
}

TEST(ClosedFormRhs, BelowRangeThrows) {
    EXPECT_THROW(pc2::rhs_thm5(0, table()), std::domain_error);
    EXPECT_THROW(pc2::rhs_thm6(0, table()), std::domain_error);
    EXPECT_THROW(pc2::rhs_fold5(1, table()), std::domain_error);
    EXPECT_THROW(pc2::rhs_fold7(2, table()), std::domain_error);
}

TEST(ClosedFormRhs, AgreeWithConvolutionThroughFifteen) {
    for (long n = 0; n <= 15; ++n) {
        EXPECT_EQ(pc2::rhs_thm2(n, table()), pc2::convolve({{0, 0}, n}, table())) << n;
        EXPECT_EQ(pc2::rhs_thm3(n, table()), pc2::convolve({{0, 1}, n}, table())) << n;
        EXPECT_EQ(pc2::rhs_thm4(n, table()), pc2::convolve({{1, 1}, n}, table())) << n;
        if (n >= 1) {
            EXPECT_EQ(pc2::rhs_thm5(n, table()), pc2::convolve({{0, 0, 0}, n}, table())) << n;
        }
        if (n >= 1) {
            EXPECT_EQ(pc2::rhs_thm6(n, table()), pc2::convolve({{0, 0, 0, 0}, n}, table())) << n;
        }
        if (n >= 2) {
            EXPECT_EQ(pc2::rhs_fold5(n, table()), pc2::convolve({std::vector<long>(5, 0), n}, table())) << n;
        }
        if (n >= 3) {
            EXPECT_EQ(pc2::rhs_fold7(n, table()), pc2::convolve({std::vector<long>(7, 0), n}, table())) << n;
        }
    }
}

TEST(ClosedFormRhs, TruncatedThm3Breaks) {
    bool broke = false;
    for (long n = 0; n <= 12; ++n) broke = broke || pc2::rhs_thm3(n, table(), n) != pc2::convolve({{0, 1}, n}, table());
    EXPECT_TRUE(broke);
}

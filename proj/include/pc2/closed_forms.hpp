#ifndef PC2_CLOSED_FORMS_HPP
#define PC2_CLOSED_FORMS_HPP

// Closed forms for the first columns and the near-diagonals of the classical
// and level-2 Stirling triangles, checked against a recurrence-built table.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "stirling.hpp"

namespace pc2 {

struct FormulaCheck {
    std::string name;
    bool pass = true;
    std::optional<long> first_failure;  // smallest n where the formula disagreed
    long nmax = 0;
};

namespace detail {

inline Rational binom_r(long n, long j) { return Rational(binomial(n, j)); }

inline Rational poly_r(std::initializer_list<long> coeffs_high_first, long n) {
    Rational acc;
    for (long c : coeffs_high_first) acc = acc * Rational(n) + Rational(c);
    return acc;
}

struct ClosedForm {
    std::string name;
    bool level2;  // which triangle the formula targets
    std::function<long(long)> column;  // m as a function of n
    std::function<Rational(long)> value;
};

inline std::vector<ClosedForm> closed_forms() {
    using R = Rational;
    auto fact = [](long n) { return R(factorial(n)); };
    return {
        // classical columns
        {"[n,1] = (n-1)!", false, [](long) { return 1L; }, [=](long n) { return fact(n - 1); }},
        {"[n,2] = (n-1)! H_{n-1}", false, [](long) { return 2L; },
         [=](long n) { return fact(n - 1) * harmonic(n - 1, 1); }},
        // classical diagonals
        {"[n,n] = 1", false, [](long n) { return n; }, [](long) { return R(1); }},
        {"[n,n-1] = C(n,2)", false, [](long n) { return n - 1; }, [](long n) { return binom_r(n, 2); }},
        {"[n,n-2] = (3n-1)/4 C(n,3)", false, [](long n) { return n - 2; },
         [](long n) { return R(3 * n - 1, 4) * binom_r(n, 3); }},
        {"[n,n-3] = C(n,2) C(n,4)", false, [](long n) { return n - 3; },
         [](long n) { return binom_r(n, 2) * binom_r(n, 4); }},
        {"[n,n-4] = (15n^3-30n^2+5n+2)/48 C(n,5)", false, [](long n) { return n - 4; },
         [](long n) { return poly_r({15, -30, 5, 2}, n) / R(48) * binom_r(n, 5); }},
        {"[n,n-5] = (3n^2-7n-2)/8 C(n,2) C(n,6)", false, [](long n) { return n - 5; },
         [](long n) { return poly_r({3, -7, -2}, n) / R(8) * binom_r(n, 2) * binom_r(n, 6); }},
        {"[n,n-6] = (63n^5-315n^4+315n^3+91n^2-42n-16)/576 C(n,7)", false, [](long n) { return n - 6; },
         [](long n) { return poly_r({63, -315, 315, 91, -42, -16}, n) / R(576) * binom_r(n, 7); }},
        // level-2 columns
        {"[[n,1]] = ((n-1)!)^2", true, [](long) { return 1L; },
         [=](long n) { return fact(n - 1) * fact(n - 1); }},
        {"[[n,2]] = ((n-1)!)^2 H2_{n-1}", true, [](long) { return 2L; },
         [=](long n) { return fact(n - 1) * fact(n - 1) * harmonic(n - 1, 2); }},
        {"[[n,3]] = ((n-1)!)^2 ((H2_{n-1})^2 - H4_{n-1}) / 2", true, [](long) { return 3L; },
         [=](long n) {
             const R h2 = harmonic(n - 1, 2);
             return fact(n - 1) * fact(n - 1) * (h2 * h2 - harmonic(n - 1, 4)) / R(2);
         }},
        // level-2 diagonals
        {"[[n,n]] = 1", true, [](long n) { return n; }, [](long) { return R(1); }},
        {"[[n,n-1]] = C(2n,3)/4", true, [](long n) { return n - 1; },
         [](long n) { return binom_r(2 * n, 3) / R(4); }},
        {"[[n,n-2]] = (5n+1)/24 C(2n,5)", true, [](long n) { return n - 2; },
         [](long n) { return poly_r({5, 1}, n) / R(3 * 8) * binom_r(2 * n, 5); }},
        {"[[n,n-3]] = (35n^2+21n+4)/144 C(2n,7)", true, [](long n) { return n - 3; },
         [](long n) { return poly_r({35, 21, 4}, n) / R(9 * 16) * binom_r(2 * n, 7); }},
        {"[[n,n-4]] = (5n+2)(35n^2+28n+9)/480 C(2n,9)", true, [](long n) { return n - 4; },
         [](long n) { return poly_r({5, 2}, n) * poly_r({35, 28, 9}, n) / R(15 * 32) * binom_r(2 * n, 9); }},
        {"[[n,n-5]] = (385n^4+770n^3+671n^2+286n+48)/576 C(2n,11)", true, [](long n) { return n - 5; },
         [](long n) { return poly_r({385, 770, 671, 286, 48}, n) / R(9 * 64) * binom_r(2 * n, 11); }},
    };
}

}  // namespace detail

/// Checks every listed closed form for 1 <= n <= nmax.
inline std::vector<FormulaCheck> level2_closed_form_fixtures(long nmax) {
    if (nmax < 1) {
        throw std::domain_error("level2_closed_form_fixtures: nmax must be >= 1");
    }
    const StirlingTriangle classical = stirling1_triangle(nmax);
    const Level2Triangle level2 = level2_by_recurrence(nmax);
    std::vector<FormulaCheck> out;
    for (const auto& form : detail::closed_forms()) {
        FormulaCheck check{form.name, true, std::nullopt, nmax};
        for (long n = 1; n <= nmax; ++n) {
            const long m = form.column(n);
            const Integer actual = form.level2 ? level2.at(n, m) : classical.at(n, m);
            if (Rational(actual) != form.value(n)) {
                check.pass = false;
                check.first_failure = n;
                break;
            }
        }
        out.push_back(std::move(check));
    }
    return out;
}

}  // namespace pc2

#endif  // PC2_CLOSED_FORMS_HPP

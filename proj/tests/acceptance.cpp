// Acceptance run: one PASS/FAIL line per criterion. Every comparison is
// exact rational equality. Exit status is nonzero if any criterion fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pc2/pc2.hpp"

using pc2::Rational;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Records the first problem; later ones are dropped to keep the line short.
struct Checker {
    Outcome out;
    void expect(bool ok, const std::string& what) {
        if (!ok && out.pass) {
            out.pass = false;
            out.detail = what;
        }
    }
};

std::string run_cli(const std::string& args, int& code) {
    const std::string cmd = std::string(PC2_CLI_PATH) + " " + args + " 2>/dev/null";
    std::string text;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) {
        code = -1;
        return text;
    }
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) text.append(buf.data(), got);
    const int status = ::pclose(pipe);
    code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return text;
}

std::vector<Rational> cauchy_k1(long nmax) {
    pc2::PolyCauchyTable table;
    return table.sequence(1, nmax);
}

Outcome ac1() {
    Checker c;
    int code = 0;
    const std::string out = run_cli("polycauchy --k 1 --nmax 6", code);
    const std::string expect =
        "n,value\n0,1\n1,1/3\n2,-17/15\n3,367/21\n4,-27859/45\n5,1295803/33\n6,-5329242827/1365\n";
    c.expect(code == 0, "exit code " + std::to_string(code));
    c.expect(out == expect, "output differs: " + out);
    return c.out;
}

Outcome ac2() {
    Checker c;
    const long nmax = 25;
    const auto rec = pc2::level2_by_recurrence(nmax);
    const auto rising = pc2::level2_by_rising_factorial(nmax);
    const auto classical = pc2::stirling1_triangle(nmax);
    for (long n = 0; n <= nmax; ++n) {
        for (long m = 0; m <= n; ++m) {
            const std::string at = " at (" + std::to_string(n) + "," + std::to_string(m) + ")";
            c.expect(rec.at(n, m) == rising.at(n, m), "rising factorial" + at);
            c.expect(rec.at(n, m) == pc2::level2_by_classical_combination(classical, n, m), "classical combination" + at);
            if (n <= 20) c.expect(rec.at(n, m) == pc2::level2_by_symmetric_sum(n, m), "symmetric sum" + at);
        }
    }
    return c.out;
}

Outcome ac3() {
    Checker c;
    const auto checks = pc2::level2_closed_form_fixtures(30);
    long classical_diag = 0, level2_col = 0, level2_diag = 0;
    for (const auto& f : checks) {
        c.expect(f.pass, f.name + " fails at n = " + std::to_string(f.first_failure.value_or(-1)));
        const bool is_level2 = f.name.rfind("[[", 0) == 0;
        const bool diagonal = f.name.find(",n-") != std::string::npos || f.name.find(",n]") != std::string::npos;
        if (!is_level2 && diagonal) ++classical_diag;
        if (is_level2 && !diagonal) ++level2_col;
        if (is_level2 && diagonal) ++level2_diag;
    }
    c.expect(classical_diag == 7, "expected 7 classical diagonal forms, found " + std::to_string(classical_diag));
    c.expect(level2_col == 3, "expected 3 level-2 column forms, found " + std::to_string(level2_col));
    c.expect(level2_diag == 6, "expected 6 level-2 diagonal forms, found " + std::to_string(level2_diag));
    return c.out;
}

Outcome ac4() {
    Checker c;
    const long nmax = 20;
    const auto level2 = pc2::level2_by_recurrence(nmax);
    for (long n = 0; n <= nmax; ++n) {
        for (long m = 0; m <= n; ++m) {
            const pc2::Integer sign = (n - m) % 2 == 0 ? 1 : -1;
            c.expect(level2.at(n, m) == sign * pc2::central_factorial_even(n, m),
                     "(" + std::to_string(n) + "," + std::to_string(m) + ")");
        }
    }
    return c.out;
}

Outcome ac5() {
    Checker c;
    const long nmax = 12;
    const auto level2 = pc2::level2_by_recurrence(nmax);
    for (long k = -3; k <= 3; ++k) {
        const pc2::Series gen = pc2::polycauchy2_generating_series(k, 2 * nmax);
        for (long n = 0; n <= nmax; ++n) {
            c.expect(pc2::egf_even_coefficient(gen, n) == pc2::polycauchy2_by_formula(level2, n, k),
                     "routes differ at n = " + std::to_string(n) + ", k = " + std::to_string(k));
        }
    }
    const auto power = pc2::verify_identity("arcsinh_power", 30);
    c.expect(power.pass(), "arcsinh power identity fails");
    return c.out;
}

Outcome ac6() {
    Checker c;
    const auto level2 = pc2::level2_by_recurrence(10);
    for (long n = 0; n <= 10; ++n) {
        for (long k = 1; k <= 3; ++k) {
            const auto r = pc2::integral_representation_check(level2, n, k);
            const std::string at = " at n = " + std::to_string(n) + ", k = " + std::to_string(k);
            c.expect(r.polynomial_stage, "polynomial stage" + at);
            c.expect(r.integral_stage, "integral stage" + at);
        }
    }
    return c.out;
}

Outcome ac7() {
    Checker c;
    pc2::PolyCauchyTable table;
    pc2::VerifyOptions opt;
    opt.jobs = 4;
    const std::vector<std::pair<const char*, long>> lower = {{"thm2", 0}, {"thm3", 0}, {"thm4", 0}, {"thm5", 1},
                                                             {"thm6", 1}, {"fold5", 2}, {"fold7", 3}};
    for (const auto& [name, lo] : lower) {
        const auto report = pc2::verify_identity(name, 15, table, opt);
        c.expect(report.pass(), std::string(name) + " fails");
        c.expect(!report.results.empty() && report.results.front().n == lo && report.results.back().n == 15,
                 std::string(name) + " does not cover its range");
    }
    for (const char* name : {"eqll", "eqconvo02"}) {
        const auto report = pc2::verify_identity(name, 30);
        c.expect(report.pass() && report.results.size() == 31, std::string(name) + " fails through order 30");
    }
    const auto duality = pc2::verify_identity("duality", 10, table, opt);
    c.expect(duality.pass() && duality.results.size() == 11, "duality fails");
    return c.out;
}

Outcome ac8() {
    Checker c;
    const auto report = pc2::verify_identity("conjecture", 0);
    c.expect(report.conjecture.size() == 3, "expected fits for r = 1, 2, 3");
    for (const auto& fit : report.conjecture) {
        const std::string r = "r = " + std::to_string(fit.r);
        c.expect(fit.consistent, r + ": samples not reproduced");
        c.expect(fit.constant_term_ok, r + ": P_0 is not 1");
        c.expect(fit.top_term_ok, r + ": top polynomial is not (2n-2r-1)^(2r)");
        for (const auto& p : fit.polynomials) c.expect(p.degree_ok, r + ": degree too high at k = " + std::to_string(p.k));
    }
    if (!report.conjecture.empty()) {
        // (2n-1)(n-1) C_{2n} + n(2n-1)(2n-3)^2 C_{2n-2}
        const auto& fit = report.conjecture.front();
        const auto c_tab = cauchy_k1(20);
        for (long n = 2; n <= 20; ++n) {
            const Rational three_fold = Rational((2 * n - 1) * (n - 1)) * c_tab[n] +
                                        Rational(n * (2 * n - 1)) * Rational((2 * n - 3) * (2 * n - 3)) * c_tab[n - 1];
            std::vector<pc2::Polynomial> ps;
            for (const auto& p : fit.polynomials) ps.push_back(p.interpolated);
            c.expect(pc2::conjecture_rhs(1, n, ps, c_tab) == three_fold,
                     "r = 1 differs from the three-fold identity at n = " + std::to_string(n));
            c.expect(pc2::rhs_thm5(n, c_tab) == three_fold, "three-fold evaluator mismatch at n = " + std::to_string(n));
        }
    }
    return c.out;
}

Outcome ac9() {
    Checker c;
    for (auto name : pc2::identity_names) {
        const auto clean = pc2::verify_identity(name, 12);
        c.expect(clean.pass() && !clean.results.empty(), std::string(name) + " fails unperturbed");
        if (clean.results.empty()) continue;
        // first covered n and one from the middle of the range
        for (long n : {clean.results.front().n, clean.results[clean.results.size() / 2].n}) {
            pc2::VerifyOptions opt;
            opt.perturb = pc2::Perturbation{n};
            const auto report = pc2::verify_identity(name, 12, opt);
            const auto f = report.first_failure();
            c.expect(!report.pass() && f && f->n == n,
                     std::string(name) + " still passes with rhs + 1 at n = " + std::to_string(n));
        }
    }
    pc2::VerifyOptions trunc;
    trunc.truncate_thm3 = true;
    const auto report = pc2::verify_identity("thm3", 12, trunc);
    c.expect(!report.pass() && report.first_failure().has_value(), "truncated thm3 still passes");
    return c.out;
}

Outcome ac10() {
    Checker c;
    for (long k = -2; k <= 3; ++k) {
        const pc2::Series gen = pc2::polycauchy2_generating_series(k, 31);
        for (long i = 1; i <= 31; i += 2) {
            c.expect(gen[i].is_zero(), "t^" + std::to_string(i) + " nonzero for k = " + std::to_string(k));
        }
    }
    return c.out;
}

struct Criterion {
    const char* id;
    const char* title;
    std::function<Outcome()> run;
    double limit_seconds;  // 0 = no runtime bound
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"AC1", "k = 1 list reproduced by the CLI", ac1, 1.0},
        {"AC2", "four level-2 triangle constructions agree, n <= 25", ac2, 30.0},
        {"AC3", "classical and level-2 closed forms, n <= 30", ac3, 0.0},
        {"AC4", "central factorial sign relation, n <= 20", ac4, 0.0},
        {"AC5", "formula vs series routes and arcsinh powers", ac5, 10.0},
        {"AC6", "two-stage integral representation, n <= 10, k <= 3", ac6, 0.0},
        {"AC7", "convolution identity sweeps", ac7, 60.0},
        {"AC8", "conjecture polynomials for r = 1, 2, 3", ac8, 0.0},
        {"AC9", "negative controls", ac9, 0.0},
        {"AC10", "odd coefficients vanish through order 31", ac10, 0.0},
    };
    int failures = 0;
    for (const auto& crit : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = crit.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (o.pass && crit.limit_seconds > 0 && secs >= crit.limit_seconds) {
            o = {false, "runtime over " + std::to_string(crit.limit_seconds) + " s"};
        }
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(3);
        line << crit.id << " " << (o.pass ? "PASS" : "FAIL") << " " << crit.title << " (" << secs << " s)";
        if (!o.pass) line << ": " << o.detail;
        std::cout << line.str() << std::endl;
        if (!o.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}

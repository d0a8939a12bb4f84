// pc2: tables, series dumps and identity reports for level-2 poly-Cauchy
// numbers. Exit codes: 0 success/pass, 1 identity failure, 2 usage error.

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pc2/pc2.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

struct Globals {
    std::string format;
    std::string cache_path;
    unsigned jobs = 1;
    long order = 40;
    bool stats = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string table_format(const Globals& g) {
    const std::string f = g.format.empty() ? "csv" : g.format;
    if (f != "csv" && f != "tsv" && f != "json") throw UsageError("--format must be csv, tsv or json");
    return f;
}

// Loads the cache (if any) into a table and writes it back when done.
class CacheSession {
public:
    explicit CacheSession(const Globals& g) : g_(g) {
        if (g_.cache_path.empty()) return;
        std::string reason;
        if (auto c = pc2::load_cache(g_.cache_path, &reason)) {
            cached_rows_ = c->level2.nmax() + 1;
            table_ = pc2::table_from_cache(*c);
        } else if (g_.stats) {
            std::cerr << "cache: not used (" << reason << ")\n";
        }
    }

    pc2::PolyCauchyTable& table() { return table_; }
    long cached_rows() const { return cached_rows_; }

    void finish(long row_hits, long row_misses) {
        if (!g_.cache_path.empty()) pc2::save_cache(g_.cache_path, pc2::cache_from_table(table_));
        if (g_.stats) {
            std::cerr << "cache: triangle rows hit=" << row_hits << " computed=" << row_misses
                      << "; values hit=" << table_.hits() << " computed=" << table_.misses() << "\n";
        }
    }

private:
    const Globals& g_;
    pc2::PolyCauchyTable table_;
    long cached_rows_ = 0;
};

int cmd_stirling2(const Globals& g, long nmax, bool is_signed) {
    const std::string fmt = table_format(g);
    if (nmax < 0) throw UsageError("--nmax must be >= 0");
    CacheSession session(g);
    const long hits = std::min(session.cached_rows(), nmax + 1);
    const pc2::Triangle tri = is_signed ? pc2::signed_view(session.table().ensure_level2(nmax))
                                        : static_cast<const pc2::Triangle&>(session.table().ensure_level2(nmax));
    if (fmt == "json") {
        nlohmann::ordered_json j;
        j["nmax"] = nmax;
        j["signed"] = is_signed;
        auto rows = nlohmann::ordered_json::array();
        for (long n = 0; n <= nmax; ++n) {
            auto r = nlohmann::ordered_json::array();
            for (const auto& v : tri.row(n)) r.push_back(v.get_str());
            rows.push_back(std::move(r));
        }
        j["rows"] = std::move(rows);
        std::cout << j.dump(2) << "\n";
    } else {
        const char sep = fmt == "csv" ? ',' : '\t';
        for (long n = 0; n <= nmax; ++n) {
            std::cout << n << (fmt == "csv" ? ':' : '\t');
            for (std::size_t m = 0; m < tri.row(n).size(); ++m) {
                if (m) std::cout << sep;
                std::cout << tri.row(n)[m].get_str();
            }
            std::cout << "\n";
        }
    }
    session.finish(hits, nmax + 1 - hits);
    return exit_ok;
}

int cmd_polycauchy(const Globals& g, long k, long nmax, const std::string& route) {
    const std::string fmt = table_format(g);
    if (nmax < 0) throw UsageError("--nmax must be >= 0");
    CacheSession session(g);
    const long row_hits = std::min(session.cached_rows(), nmax + 1);
    const bool want_formula = route != "series";
    const bool want_series = route != "formula";

    std::vector<pc2::Rational> formula, series;
    if (want_formula) formula = session.table().sequence(k, nmax);
    if (want_series) {
        // never truncate: the order is raised to cover t^{2 nmax}
        const long order = std::max(g.order, 2 * nmax);
        const pc2::Series gen = pc2::polycauchy2_generating_series(k, order);
        for (long n = 0; n <= nmax; ++n) series.push_back(pc2::egf_even_coefficient(gen, n));
    }

    bool agree = true;
    if (fmt == "json") {
        nlohmann::ordered_json j;
        j["k"] = k;
        j["nmax"] = nmax;
        j["route"] = route;
        auto values = nlohmann::ordered_json::array();
        for (long n = 0; n <= nmax; ++n) {
            nlohmann::ordered_json v;
            v["n"] = n;
            if (want_formula && want_series) {
                v["formula"] = formula[n].str();
                v["series"] = series[n].str();
            } else {
                v["value"] = (want_formula ? formula[n] : series[n]).str();
            }
            values.push_back(std::move(v));
        }
        j["values"] = std::move(values);
        std::cout << j.dump(2) << "\n";
    } else {
        const char sep = fmt == "csv" ? ',' : '\t';
        if (want_formula && want_series) std::cout << "n" << sep << "formula" << sep << "series\n";
        else std::cout << "n" << sep << "value\n";
        for (long n = 0; n <= nmax; ++n) {
            std::cout << n << sep;
            if (want_formula && want_series) std::cout << formula[n] << sep << series[n];
            else std::cout << (want_formula ? formula[n] : series[n]);
            std::cout << "\n";
        }
    }
    if (want_formula && want_series) {
        for (long n = 0; n <= nmax; ++n) {
            if (formula[n] != series[n]) {
                std::cerr << "routes disagree at n = " << n << "\n";
                agree = false;
            }
        }
    }
    session.finish(row_hits, nmax + 1 - row_hits);
    return agree ? exit_ok : exit_fail;
}

int cmd_series(const Globals& g, const std::string& name, std::optional<long> k) {
    const std::string fmt = table_format(g);
    if (std::find(pc2::builtin_series_names.begin(), pc2::builtin_series_names.end(), name) ==
        pc2::builtin_series_names.end()) {
        throw UsageError("unknown series '" + name + "'");
    }
    if (pc2::needs_k(name) && !k) throw UsageError("series '" + name + "' needs --k");
    if (g.order < 0) throw UsageError("--order must be >= 0");
    const pc2::Series s = pc2::builtin_series(name, g.order, k);
    if (fmt == "json") {
        nlohmann::ordered_json j;
        j["name"] = name;
        j["order"] = g.order;
        if (k) j["k"] = *k;
        auto coeffs = nlohmann::ordered_json::array();
        for (const auto& c : s.coefficients()) coeffs.push_back(c.str());
        j["coefficients"] = std::move(coeffs);
        std::cout << j.dump(2) << "\n";
    } else {
        const char sep = fmt == "csv" ? ',' : '\t';
        std::cout << "index" << sep << "coefficient\n";
        for (long i = 0; i <= s.order(); ++i) std::cout << i << sep << s[i] << "\n";
    }
    return exit_ok;
}

int cmd_verify(const Globals& g, const std::string& identity, long nmax) {
    const std::string fmt = g.format.empty() ? "text" : g.format;
    if (fmt != "text" && fmt != "json") throw UsageError("verify supports --format text or json");
    if (!pc2::is_identity_name(identity)) throw UsageError("unknown identity '" + identity + "'");
    if (nmax < 0) throw UsageError("--nmax must be >= 0");
    CacheSession session(g);
    const long row_hits = session.cached_rows();
    pc2::VerifyOptions opt;
    opt.jobs = std::max(1u, g.jobs);
    const pc2::IdentityReport report = pc2::verify_identity(identity, nmax, session.table(), opt);
    if (fmt == "json") {
        std::cout << pc2::to_json(report).dump(2) << "\n";
    } else {
        pc2::write_text(std::cout, report);
    }
    session.finish(row_hits, std::max(0L, session.table().level2().nmax() + 1 - row_hits));
    return report.pass() ? exit_ok : exit_fail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Level-2 poly-Cauchy numbers, level-2 Stirling numbers and convolution identity checks", "pc2"};
    app.require_subcommand(1);

    Globals g;
    app.add_option("--format", g.format, "Output format: csv, tsv, json (verify: text, json)");
    app.add_option("--cache", g.cache_path, "JSON cache file for triangle rows and computed values");
    app.add_option("--jobs", g.jobs, "Worker threads for verification sweeps")->check(CLI::PositiveNumber);
    app.add_option("--order", g.order, "Series truncation order")->check(CLI::NonNegativeNumber);
    app.add_flag("--stats", g.stats, "Report cache hits on stderr");

    long nmax = 12;
    bool is_signed = false;
    auto* stirling = app.add_subcommand("stirling2", "Level-2 Stirling triangle [[n,m]]")->fallthrough();
    stirling->add_option("--nmax", nmax, "Last row");
    stirling->add_flag("--signed", is_signed, "Apply (-1)^(n-m) (central factorial convention)");

    long k = 1;
    std::string route = "formula";
    auto* poly = app.add_subcommand("polycauchy", "Poly-Cauchy numbers with level 2, C_{2n}^{(k)}")->fallthrough();
    poly->add_option("--k", k, "Index k (any integer)");
    poly->add_option("--nmax", nmax, "Largest n");
    poly->add_option("--route", route, "formula, series or both")
        ->check(CLI::IsMember({"formula", "series", "both"}));

    std::string series_name;
    std::optional<long> series_k;
    auto* series = app.add_subcommand("series", "Coefficients of a built-in power series")->fallthrough();
    series->add_option("name", series_name, "arcsinh, lif2k, lif_k, log1p, sqrt_1pt2, invsqrt_1pt2, inv32_1pt2, L, exp, sinh")
        ->required();
    series->add_option("--k", series_k, "Index k for lif2k and lif_k");

    std::string identity;
    auto* verify = app.add_subcommand("verify", "Check a named identity")->fallthrough();
    verify->add_option("--identity,identity", identity, "thm1, cor1, thm2..thm6, fold5, fold7, eqll, eqconvo02, "
                                                        "arcsinh_power, duality, conjecture[-r1|-r2|-r3]")
        ->required();
    verify->add_option("--nmax", nmax, "Largest n (series identities: truncation order)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return exit_usage;
    }

    try {
        if (*stirling) return cmd_stirling2(g, nmax, is_signed);
        if (*poly) return cmd_polycauchy(g, k, nmax, route);
        if (*series) return cmd_series(g, series_name, series_k);
        if (*verify) return cmd_verify(g, identity, nmax);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

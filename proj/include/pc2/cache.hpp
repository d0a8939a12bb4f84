#ifndef PC2_CACHE_HPP
#define PC2_CACHE_HPP

// On-disk cache of the level-2 triangle and computed C_{2n}^{(k)} values.
//
// The cache is a single JSON document. It is only an optimization: a file
// with an unknown format_version, malformed content, or a row that fails the
// spot check against the recurrence is discarded and everything is
// recomputed.

#include <algorithm>
#include <fstream>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "poly_cauchy.hpp"
#include "stirling.hpp"

namespace pc2 {

inline constexpr int cache_format_version = 1;

struct CacheEntry {
    long n = 0;
    long k = 0;
    Rational value;
};

struct CacheFile {
    int format_version = cache_format_version;
    Level2Triangle level2;
    std::vector<CacheEntry> polycauchy_entries;
};

inline nlohmann::ordered_json to_json(const CacheFile& cache) {
    nlohmann::ordered_json j;
    j["format_version"] = cache.format_version;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : cache.level2.rows()) {
        auto r = nlohmann::ordered_json::array();
        for (const auto& v : row) r.push_back(v.get_str());
        rows.push_back(std::move(r));
    }
    j["triangles"] = {{"level2", std::move(rows)}};
    auto entries = nlohmann::ordered_json::array();
    for (const auto& e : cache.polycauchy_entries) {
        entries.push_back({{"n", e.n}, {"k", e.k}, {"value", e.value.str()}});
    }
    j["polycauchy_entries"] = std::move(entries);
    return j;
}

namespace detail {

// Recomputes up to three pseudo-randomly chosen rows from their predecessor
// and a few C_{2n}^{(k)} entries from the cached triangle.
inline bool spot_check(const CacheFile& cache) {
    const Level2Triangle& t = cache.level2;
    if (t.nmax() < 0) return cache.polycauchy_entries.empty();
    if (t.row(0) != std::vector<Integer>{Integer(1)}) return false;
    std::mt19937_64 rng(0x5eed);
    const long nmax = t.nmax();
    for (int trial = 0; trial < 3 && nmax >= 1; ++trial) {
        const long n = std::uniform_int_distribution<long>(1, nmax)(rng);
        const Integer sq = Integer(n - 1) * (n - 1);
        for (long m = 0; m <= n; ++m) {
            const Integer expect = t.at(n - 1, m - 1) + sq * t.at(n - 1, m);
            if (m == 0 ? t.at(n, 0) != 0 : t.at(n, m) != expect) return false;
        }
    }
    if (!cache.polycauchy_entries.empty()) {
        for (int trial = 0; trial < 3; ++trial) {
            const auto idx = std::uniform_int_distribution<std::size_t>(0, cache.polycauchy_entries.size() - 1)(rng);
            const CacheEntry& e = cache.polycauchy_entries[idx];
            if (e.n < 0 || e.n > nmax || polycauchy2_by_formula(t, e.n, e.k) != e.value) return false;
        }
    }
    return true;
}

}  // namespace detail

/// Parses and validates a cache document. Returns nullopt (with a reason)
/// when the content must not be used.
inline std::optional<CacheFile> cache_from_json(const nlohmann::json& j, std::string* reason = nullptr) {
    auto reject = [&](std::string why) -> std::optional<CacheFile> {
        if (reason) *reason = std::move(why);
        return std::nullopt;
    };
    try {
        if (!j.contains("format_version") || j.at("format_version").get<int>() != cache_format_version) {
            return reject("unknown format_version");
        }
        CacheFile cache;
        std::vector<std::vector<Integer>> rows;
        for (const auto& r : j.at("triangles").at("level2")) {
            std::vector<Integer> row;
            for (const auto& v : r) row.emplace_back(v.get<std::string>());
            rows.push_back(std::move(row));
        }
        cache.level2 = Level2Triangle(std::move(rows));
        for (const auto& e : j.at("polycauchy_entries")) {
            cache.polycauchy_entries.push_back(
                {e.at("n").get<long>(), e.at("k").get<long>(), Rational::parse(e.at("value").get<std::string>())});
        }
        if (!detail::spot_check(cache)) return reject("spot check against the recurrence failed");
        return cache;
    } catch (const std::exception& ex) {
        return reject(std::string("malformed cache: ") + ex.what());
    }
}

inline std::optional<CacheFile> load_cache(const std::string& path, std::string* reason = nullptr) {
    std::ifstream in(path);
    if (!in) {
        if (reason) *reason = "no cache file";
        return std::nullopt;
    }
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded()) {
        if (reason) *reason = "cache is not valid JSON";
        return std::nullopt;
    }
    return cache_from_json(j, reason);
}

inline void save_cache(const std::string& path, const CacheFile& cache) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write cache file " + path);
    }
    out << to_json(cache).dump() << "\n";
}

/// Table seeded from a cache; entries found there count as hits.
inline PolyCauchyTable table_from_cache(const CacheFile& cache) {
    PolyCauchyTable table(cache.level2.nmax() >= 0 ? cache.level2 : level2_by_recurrence(0));
    for (const auto& e : cache.polycauchy_entries) table.insert(e.n, e.k, e.value, Route::formula);
    return table;
}

inline CacheFile cache_from_table(const PolyCauchyTable& table) {
    CacheFile cache;
    cache.level2 = table.level2();
    for (const auto& [key, entry] : table.entries()) {
        if (entry.route == Route::formula) cache.polycauchy_entries.push_back({key.first, key.second, entry.value});
    }
    return cache;
}

}  // namespace pc2

#endif  // PC2_CACHE_HPP

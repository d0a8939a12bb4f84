#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <unistd.h>

#include "pc2/cache.hpp"

using pc2::Rational;

namespace {

std::string temp_path(const char* stem) {
    return (std::filesystem::temp_directory_path() / (std::string(stem) + "_" + std::to_string(::getpid()) + ".json"))
        .string();
}

}  // namespace

TEST(Cache, RoundTrip) {
    pc2::PolyCauchyTable table;
    table.sequence(1, 8);
    table.sequence(-2, 5);
    const std::string path = temp_path("pc2_cache_roundtrip");
    pc2::save_cache(path, pc2::cache_from_table(table));

    std::string reason;
    const auto loaded = pc2::load_cache(path, &reason);
    ASSERT_TRUE(loaded.has_value()) << reason;
    EXPECT_EQ(loaded->level2, table.level2());
    EXPECT_EQ(loaded->polycauchy_entries.size(), 15u);

    pc2::PolyCauchyTable restored = pc2::table_from_cache(*loaded);
    EXPECT_EQ(restored.get(6, 1), Rational(-5329242827L, 1365));
    EXPECT_EQ(restored.hits(), 1u);
    EXPECT_EQ(restored.misses(), 0u);
    std::remove(path.c_str());
}

TEST(Cache, RejectsWrongVersion) {
    auto j = pc2::to_json(pc2::cache_from_table(pc2::PolyCauchyTable()));
    j["format_version"] = 99;
    std::string reason;
    EXPECT_FALSE(pc2::cache_from_json(j, &reason).has_value());
    EXPECT_NE(reason.find("format_version"), std::string::npos);
}

TEST(Cache, RejectsCorruptTriangle) {
    pc2::PolyCauchyTable table(pc2::level2_by_recurrence(6));
    auto j = pc2::to_json(pc2::cache_from_table(table));
    // damage every row past the first so any spot-checked row is wrong
    for (std::size_t n = 1; n < j["triangles"]["level2"].size(); ++n) j["triangles"]["level2"][n][1] = "12345";
    std::string reason;
    EXPECT_FALSE(pc2::cache_from_json(j, &reason).has_value());
    EXPECT_NE(reason.find("spot check"), std::string::npos);
}

TEST(Cache, RejectsCorruptEntry) {
    pc2::PolyCauchyTable table;
    table.get(3, 1);
    auto j = pc2::to_json(pc2::cache_from_table(table));
    j["polycauchy_entries"][0]["value"] = "1/7";
    EXPECT_FALSE(pc2::cache_from_json(j).has_value());
}

TEST(Cache, RejectsMalformedFiles) {
    const std::string path = temp_path("pc2_cache_bad");
    {
        std::ofstream out(path);
        out << "{not json";
    }
    std::string reason;
    EXPECT_FALSE(pc2::load_cache(path, &reason).has_value());
    {
        std::ofstream out(path);
        out << R"({"format_version": 1, "triangles": {"level2": [["1"], ["0"]]}, "polycauchy_entries": []})";
    }
    EXPECT_FALSE(pc2::load_cache(path, &reason).has_value());
    std::remove(path.c_str());
    EXPECT_FALSE(pc2::load_cache(path, &reason).has_value());
    EXPECT_EQ(reason, "no cache file");
}

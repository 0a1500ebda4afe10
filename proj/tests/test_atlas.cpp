#include <autograph/analysis.hpp>
#include <autograph/atlas.hpp>
#include <autograph/families.hpp>
#include <autograph/graph_io.hpp>

#include "support.hpp"

#include <doctest.h>

#include <stdexcept>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace autograph;
namespace fs = std::filesystem;

namespace
{
    auto read_lines(const fs::path &path) -> std::vector<std::string>
    {
        std::ifstream in(path);
        std::vector<std::string> lines;
        for (std::string line; std::getline(in, line);)
            lines.push_back(line);
        return lines;
    }

    auto scratch(const std::string &name) -> fs::path
    {
        auto dir = fs::temp_directory_path() / ("autograph_atlas_" + name);
        fs::remove_all(dir);
        fs::create_directories(dir);
        return dir / "catalog.jsonl";
    }

    auto without_timestamps(std::vector<std::string> lines) -> std::vector<nlohmann::json>
    {
        std::vector<nlohmann::json> out;
        for (auto &line : lines) {
            auto j = nlohmann::json::parse(line);
            j.erase("timestamp");
            out.push_back(j);
        }
        return out;
    }

    auto options_for(const fs::path &path, int max_n, Value bound) -> CatalogOptions
    {
        CatalogOptions o;
        o.max_n = max_n;
        o.config.bound = bound;
        o.output = path;
        return o;
    }
}

TEST_CASE("class counts for n = 1..6")
{
    std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156};
    for (int n = 1; n <= 6; ++n) {
        CHECK(enumerate_graphs(n).size() == expected[static_cast<std::size_t>(n - 1)]);
        CHECK(census_count(n) == expected[static_cast<std::size_t>(n - 1)]);
    }
}

TEST_CASE("enumeration agrees with an exhaustive brute-force census")
{
    for (int n = 1; n <= 5; ++n) {
        int pairs = n * (n - 1) / 2;
        std::set<std::string> classes;
        for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
            Graph g(n);
            int bit = 0;
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i, ++bit)
                    if (mask >> bit & 1U)
                        g.add_edge(i, j);
            classes.insert(oracle::canonical_string(g));
        }
        std::set<std::string> enumerated;
        for (const auto &g : enumerate_graphs(n))
            enumerated.insert(oracle::canonical_string(g));
        CHECK(enumerated == classes);
    }
}

TEST_CASE("enumerated representatives are canonical and distinct")
{
    auto graphs = enumerate_graphs(6);
    std::set<std::string> keys;
    for (const auto &g : graphs) {
        CHECK(canonical_graph(g) == g);
        keys.insert(canonical_form(g).key.to_bitstring());
    }
    CHECK(keys.size() == graphs.size());
    CHECK_THROWS_AS(enumerate_graphs(8), std::invalid_argument);
}

TEST_CASE("catalog entries serialize and verify")
{
    CatalogEntry e;
    e.graph6 = canonical_graph6(path_graph(3));
    e.vertices = 3;
    e.edges = 2;
    e.found = true;
    e.signature = parse_signature("-1,0,1");
    e.bound = 5;
    e.config_digest = "0123456789abcdef";
    e.timestamp = "2026-01-01T00:00:00Z";
    auto j = to_json(e);
    CHECK(j["status"] == "found");
    auto back = catalog_entry_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back.signature == e.signature);
    CHECK(verify_entry(back));

    back.signature = parse_signature("1,2,3");
    CHECK_FALSE(verify_entry(back));

    CatalogEntry missing = e;
    missing.found = false;
    missing.signature.reset();
    CHECK(to_json(missing)["status"] == "not-found-within-bound");
    CHECK(to_json(missing)["signature"].is_null());
}

TEST_CASE("catalog build covers every class and sorts its lines")
{
    auto path = scratch("build");
    auto summary = build_catalog(options_for(path, 4, 6));
    auto lines = read_lines(path);
    CHECK(lines.size() == 1 + 2 + 4 + 11);
    CHECK(summary.searched == 18);
    CHECK(summary.reused == 0);
    CHECK(summary.not_found.empty());
    std::vector<std::pair<int, std::string>> order;
    for (const auto &j : without_timestamps(lines)) {
        order.emplace_back(j["n"].get<int>(), j["graph6"].get<std::string>());
        CHECK(j["status"] == "found");
    }
    CHECK(std::is_sorted(order.begin(), order.end()));
    REQUIRE(summary.rows.size() == 4);
    CHECK(summary.rows[3].classes == 11);
    CHECK(summary_table(summary).find("  11") != std::string::npos);
}

TEST_CASE("resume reuses entries and is idempotent")
{
    auto path = scratch("resume");
    build_catalog(options_for(path, 4, 6));
    auto first = read_lines(path);

    auto options = options_for(path, 4, 6);
    options.resume = true;
    auto again = build_catalog(options);
    CHECK(again.searched == 0);
    CHECK(again.reused == 18);
    CHECK(read_lines(path) == first);

    // a run interrupted mid-line
    {
        std::ofstream out(path, std::ios::trunc);
        for (std::size_t k = 0; k < 9; ++k)
            out << first[k] << '\n';
        out << first[9].substr(0, first[9].size() / 2);
    }
    auto recovered = build_catalog(options);
    CHECK(recovered.reused == 9);
    CHECK(recovered.searched == 9);
    CHECK(without_timestamps(read_lines(path)) == without_timestamps(first));
}

TEST_CASE("resume ignores entries from another configuration or failing verification")
{
    auto path = scratch("digest");
    build_catalog(options_for(path, 3, 6));
    auto options = options_for(path, 3, 7);
    options.resume = true;
    CHECK(build_catalog(options).reused == 0);

    auto lines = read_lines(path);
    auto j = nlohmann::json::parse(lines.back());
    j["signature"] = nlohmann::json::array({1, 2, 3, 4});
    lines.back() = j.dump();
    {
        std::ofstream out(path, std::ios::trunc);
        for (auto &line : lines)
            out << line << '\n';
    }
    auto repaired = build_catalog(options);
    CHECK(repaired.reused == 6);
    CHECK(repaired.searched == 1);
}

TEST_CASE("order seven needs an explicit opt-in")
{
    auto options = options_for(scratch("seven"), 7, 3);
    CHECK_THROWS_AS(build_catalog(options), std::invalid_argument);
}

TEST_CASE("config digest tracks result-relevant fields only")
{
    SearchConfig a, b;
    b.workers = 8;
    CHECK(config_digest(a) == config_digest(b));
    CHECK(config_digest(a).size() == 16);
    b.bound = a.bound + 1;
    CHECK(config_digest(a) != config_digest(b));
}

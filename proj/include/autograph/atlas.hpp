#pragma once

#include <autograph/graph.hpp>
#include <autograph/search.hpp>
#include <autograph/signature.hpp>

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace autograph
{
    inline constexpr int max_atlas_vertices = 7;

    /// One canonical representative per isomorphism class on n vertices,
    /// 1 <= n <= 7, ordered by canonical key. Built by adding a vertex in
    /// every possible way to each class on n - 1 vertices.
    auto enumerate_graphs(int n) -> std::vector<Graph>;

    /// Number of classes found by canonicalizing every labelled graph on n
    /// vertices; 1 <= n <= 7.
    auto census_count(int n) -> std::uint64_t;

    /// 64-bit FNV-1a of describe(config), as 16 hex digits.
    auto config_digest(const SearchConfig &config) -> std::string;

    struct CatalogEntry
    {
        std::string graph6;    // canonical
        int vertices = 0;
        int edges = 0;
        bool found = false;
        std::optional<Signature> signature;
        Value bound = 0;
        std::string config_digest;
        std::string timestamp;
    };

    auto to_json(const CatalogEntry &e) -> nlohmann::ordered_json;

    /// Throws std::invalid_argument on missing or mistyped fields.
    auto catalog_entry_from_json(const nlohmann::json &j) -> CatalogEntry;

    /// graph6 is canonical and consistent with the counts; a found signature
    /// realizes the decoded graph.
    auto verify_entry(const CatalogEntry &e) -> bool;

    /// Reads a JSON-lines catalog. Unparsable lines (an interrupted write) are skipped.
    auto load_catalog(const std::filesystem::path &path) -> std::vector<CatalogEntry>;

    struct CatalogOptions
    {
        int max_n = 6;
        SearchConfig config;
        std::filesystem::path output;
        bool resume = false;
        bool allow_seven = false;
        std::function<void(const CatalogEntry &)> on_entry;
    };

    struct CatalogRow
    {
        int vertices = 0;
        int classes = 0;
        int found = 0;
        int not_found = 0;
    };

    struct CatalogSummary
    {
        std::vector<CatalogRow> rows;
        std::vector<std::string> not_found;   // graph6 of classes without a signature in the bound
        std::optional<bool> m6_found;         // set once n = 6 is covered
        int reused = 0;                       // entries kept from a previous run
        int searched = 0;
    };

    /// Searches every class with n <= max_n and writes one JSON line per class,
    /// sorted by (n, graph6). Entries from an earlier run with the same config
    /// digest are reused when resume is set.
    auto build_catalog(const CatalogOptions &options) -> CatalogSummary;

    auto summary_table(const CatalogSummary &summary) -> std::string;
}

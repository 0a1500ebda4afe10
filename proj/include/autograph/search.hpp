#pragma once

#include <autograph/analysis.hpp>
#include <autograph/graph.hpp>
#include <autograph/signature.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace autograph
{
    struct SearchConfig
    {
        Value bound = 10;                 // values drawn from [-bound, bound]
        bool allow_zero = true;
        bool allow_multiset = false;      // false: strictly increasing tuples only
        bool paper_pruning = true;        // structural pruning rules; see prune_candidate
        std::optional<int> max_negatives; // restricts the candidate space itself
        int workers = 1;
        std::uint64_t candidate_ceiling = 5'000'000'000ULL;
        std::size_t match_limit = 1000;   // matches stored in a report; match_count is exact
    };

    /// Throws std::invalid_argument for a bad configuration.
    auto validate(const SearchConfig &config) -> void;

    /// Stable text form of every field that affects results (workers excluded).
    auto describe(const SearchConfig &config) -> std::string;

    auto to_json(const SearchConfig &config) -> nlohmann::ordered_json;

    /// Raised before any work when the candidate space exceeds the ceiling.
    class InfeasibleSearch : public std::runtime_error
    {
    public:
        InfeasibleSearch(std::uint64_t estimate, std::uint64_t ceiling);

        std::uint64_t estimate;
        std::uint64_t ceiling;
    };

    /// Size of the configured candidate space for n values, saturating at 2^64-1.
    auto estimate_candidates(int n, const SearchConfig &config) -> std::uint64_t;

    /// Precomputed invariants of a search target.
    struct TargetDescriptor
    {
        Graph graph;
        int edges = 0;
        std::vector<int> degrees;        // ascending
        int min_degree = 0;
        AdjacencyKey key;
        bool zero_free = false;          // isomorphic to M6 or G_n: no signature contains 0
    };

    auto describe_target(const Graph &target) -> TargetDescriptor;

    enum class PruneReason
    {
        none,
        negative_count,    // more negatives than n - 1 - min degree (monographs)
        zero_in_signature, // 0 in a candidate for a zero-free target
        scaled_duplicate,  // gcd of a complete candidate exceeds 1
        degree_sequence    // realized degree sequence differs from the target's
    };

    auto to_string(PruneReason r) -> std::string;

    struct PruneVerdict
    {
        bool keep = true;
        PruneReason reason = PruneReason::none;
    };

    /// Decides whether a sorted prefix (complete = false) or a complete
    /// candidate can be discarded. Rules are only active with paper_pruning;
    /// the negative-count and zero rules rely on monograph lemmas and are off
    /// in multiset mode. The degree-sequence rule needs a complete candidate.
    auto prune_candidate(std::span<const Value> candidate, bool complete, const TargetDescriptor &target, const SearchConfig &config)
        -> PruneVerdict;

    struct SearchCounters
    {
        std::uint64_t enumerated = 0;
        std::uint64_t pruned_negative_count = 0;
        std::uint64_t pruned_zero = 0;
        std::uint64_t pruned_scaled = 0;
        std::uint64_t realized = 0;
        std::uint64_t degree_rejected = 0;
        std::uint64_t isomorphism_tests = 0;
        std::uint64_t unnormalized_matches = 0;

        auto pruned() const -> std::uint64_t { return pruned_negative_count + pruned_zero + pruned_scaled; }
        auto operator+=(const SearchCounters &o) -> SearchCounters &;
        friend auto operator==(const SearchCounters &, const SearchCounters &) -> bool = default;
    };

    struct SignatureSearchResult
    {
        std::optional<Signature> signature;
        SearchCounters counters;   // candidates up to and including the match, in lexicographic order
        double wall_clock_seconds = 0;
    };

    /// Lexicographically first normalized signature whose realization is
    /// isomorphic to target. Identical for every worker count.
    auto search_signature(const Graph &target, const SearchConfig &config) -> SignatureSearchResult;

    auto find_signature(const Graph &target, const SearchConfig &config) -> std::optional<Signature>;

    struct AbsenceReport
    {
        std::string target_graph6;     // canonical graph6 of the target
        std::string target_key;        // canonical adjacency bitstring
        int vertices = 0;
        SearchConfig config;
        SearchCounters counters;
        std::uint64_t space_size = 0;
        std::vector<Signature> matches;  // normalized, lexicographic, at most config.match_limit
        std::uint64_t match_count = 0;
        double wall_clock_seconds = 0;
        bool exhaustive = false;

        auto candidates_enumerated() const -> std::uint64_t { return counters.enumerated; }
        auto candidates_realized() const -> std::uint64_t { return counters.realized; }
    };

    /// Enumerates the whole configured space and records every normalized match.
    auto certify_absence(const Graph &target, const SearchConfig &config) -> AbsenceReport;

    /// Report fields in a fixed order; wall_clock_seconds is the only
    /// scheduling-dependent field, and workers the only config field not
    /// affecting results.
    auto to_json(const AbsenceReport &report) -> nlohmann::ordered_json;
}

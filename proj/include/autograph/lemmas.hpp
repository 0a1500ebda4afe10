#pragma once

#include <autograph/graph.hpp>
#include <autograph/realize.hpp>
#include <autograph/signature.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace autograph
{
    enum class CheckOutcome
    {
        pass,
        fail,
        not_applicable
    };

    auto to_string(CheckOutcome o) -> std::string;

    /// Closed-form degree of the vertex p*s after deleting positions from the
    /// complete-graph signature {s, 2s, ..., ns}. Corrections:
    ///   eps_i   = 1 when p = 2i and i <= floor(n/2)  (likewise eps_j)
    ///   gamma   = 2 when p = i + j
    ///   beta    = 1 when p = j - i
    struct DegreePrediction
    {
        int n = 0;
        int i = 0;
        std::optional<int> j;
        int p = 0;
        int base = 0;
        int eps_i = 0;
        int eps_j = 0;
        int gamma_ij = 0;
        int beta_ij = 0;
        int predicted = 0;
    };

    /// Requires n >= 3, 1 <= i, p <= n, p != i.
    auto predict_degree_one_deletion(int n, int i, int p) -> DegreePrediction;

    /// Requires n >= 4, 1 <= i < j <= n, 1 <= p <= n, p not in {i, j}.
    auto predict_degree_two_deletions(int n, int i, int j, int p) -> DegreePrediction;

    /// Degree of p*s in realize({s, ..., ns} minus the deleted positions),
    /// computed through the realization engine.
    auto realized_deletion_degree(int n, Value s, std::span<const int> deletions, int p) -> int;

    struct KthLargestViolation
    {
        int rank;                  // r: the vertex holds the r-th largest non-negative value
        int negative_neighbours;   // exceeds r - 1
    };

    /// The r-th largest non-negative value has at most r - 1 negative
    /// neighbours. Throws std::invalid_argument for a non-monograph.
    auto check_kth_largest(const Realization &r) -> std::vector<KthLargestViolation>;

    /// m <= n - 1 - deg(s_n) for a monograph with s_n >= 0. All-negative
    /// signatures realize the edgeless graph and are not applicable.
    /// Throws for a non-monograph.
    auto check_negative_count_bound(const Realization &r) -> CheckOutcome;

    /// When the signature is a monograph without 0, with a positive maximum
    /// s_n adjacent to every positive value: s_n = s_{m+k} + s_{n-k} for every
    /// k in 1..n-m-1. Inputs failing a premise are not_applicable.
    auto check_max_element_lemma(const Realization &r) -> CheckOutcome;

    struct APBlock
    {
        Value first;
        int length;

        friend auto operator==(const APBlock &, const APBlock &) -> bool = default;
    };

    struct APDecomposition
    {
        Value difference = 1;
        std::vector<APBlock> blocks;   // ordered by first element

        auto longest() const -> int;
    };

    /// Partition of a strictly increasing value list into maximal progressions
    /// with common difference d >= 1.
    auto ap_partition(std::span<const Value> values, Value difference) -> APDecomposition;

    struct ObservationResult
    {
        std::string name;
        CheckOutcome outcome = CheckOutcome::not_applicable;
        std::string detail;
        bool informational = false;   // reported, never gating
    };

    struct StructureReport
    {
        int codegree = 0;
        std::vector<ObservationResult> results;

        auto failures() const -> int;
    };

    /// Names of the gated progression-structure checks, in report order.
    inline constexpr const char *proper_block_count = "proper-ap-blocks";
    inline constexpr const char *proper_missing_multiples = "proper-missing-multiples";
    inline constexpr const char *negative_block_count = "negative-ap-blocks";
    inline constexpr const char *single_negative_missing_multiples = "single-negative-missing-multiples";
    inline constexpr const char *negative_longest_over_n = "negative-ap-longest-over-n";

    /// Progression-structure bounds driven by the codegree k of the realized graph:
    ///  - proper monographs: S splits into <= k+1 maximal progressions of
    ///    difference s_1, the longest with >= n/(k+1) terms, and at most k of
    ///    s_1, ..., (l-1)s_1 are missing, l the longest length;
    ///  - per negative s_i of nonzero degree: S+ splits into <= k progressions
    ///    of difference |s_i|, the longest with >= |S+|/k terms;
    ///  - exactly one negative and 0 not in S: at most k-1 of |s_1|, ...,
    ///    (l-1)|s_1| are missing.
    /// The stronger longest >= n/k form is reported as informational only.
    /// Throws for a non-monograph.
    auto check_structure_observations(const Realization &r) -> StructureReport;

    /// Six values: exactly one negative, the other five a non-negative
    /// progression with positive step. Throws for any other length.
    auto matches_m6_ap5_shape(const Signature &candidate) -> bool;

    /// not_applicable unless the shape matches; pass when the realization is
    /// not isomorphic to M6.
    auto check_m6_ap5_lemma(const Signature &candidate) -> CheckOutcome;

    /// True when realize(candidate) is not isomorphic to target. The candidate
    /// must contain 0.
    auto check_zero_exclusion(const Graph &target, const Signature &candidate) -> bool;

    struct DeletionLemmaResult
    {
        bool holds = false;               // realization is not isomorphic to the G target
        bool rejected_by_degree = false;  // some degree differs from the regular target degree
    };

    /// One deletion: odd n >= 9, target G_{n-1}. Two deletions: even n >= 10,
    /// target G_{n-2}. Throws std::invalid_argument otherwise.
    auto check_kn_deletion_lemmas(int n, Value s, std::span<const int> deletions) -> DeletionLemmaResult;
}

#pragma once

#include <autograph/graph.hpp>

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace autograph
{
    inline constexpr int max_canonical_vertices = 16;

    /// Upper-triangular adjacency bits in graph6 column order (for j = 1..n-1,
    /// for i = 0..j-1: edge(i, j)), packed most-significant-bit first into 128
    /// bits. Ordering is lexicographic on the bitstring for a fixed n.
    struct AdjacencyKey
    {
        int n = 0;
        std::array<std::uint64_t, 2> words{};

        auto bit_count() const noexcept -> int { return n * (n - 1) / 2; }
        auto bit(int index) const noexcept -> bool;
        auto to_bitstring() const -> std::string;

        friend auto operator==(const AdjacencyKey &, const AdjacencyKey &) -> bool = default;
        friend auto operator<=>(const AdjacencyKey &, const AdjacencyKey &) = default;
    };

    /// Key of g with vertex order[i] placed at position i.
    auto adjacency_key(const Graph &g, const std::vector<int> &order) -> AdjacencyKey;
    auto adjacency_key(const Graph &g) -> AdjacencyKey;

    struct CanonicalForm
    {
        AdjacencyKey key;
        std::vector<int> order;   // order[i] = original vertex at canonical position i
    };

    /// Minimal adjacency key over the leaves of an individualization-refinement
    /// search tree. Invariant under relabelling. Supports 1 <= n <= 16.
    auto canonical_form(const Graph &g) -> CanonicalForm;

    /// The relabelled graph g.relabel(canonical_form(g).order).
    auto canonical_graph(const Graph &g) -> Graph;

    /// Sorted ascending.
    auto degree_sequence(const Graph &g) -> std::vector<int>;

    /// Rejects on size, edge count and degree sequence before canonicalizing.
    /// Graphs of different size are simply not isomorphic.
    auto is_isomorphic(const Graph &a, const Graph &b) -> bool;

    auto complement(const Graph &g) -> Graph;

    auto clique_number(const Graph &g) -> int;
    auto independence_number(const Graph &g) -> int;

    /// Number of edges on a longest simple path; 0 for a graph without edges.
    auto longest_path_edges(const Graph &g) -> int;

    struct GraphStats
    {
        std::vector<int> degree_sequence;
        int min_degree = 0;
        int max_degree = 0;
        int codegree = 0;            // n - 1 - min_degree
        int clique_number = 0;
        int independence_number = 0;
        int longest_path_in_complement = 0;
    };

    /// Exact statistics; n <= 16.
    auto stats(const Graph &g) -> GraphStats;

    /// Vertices u != v with N(u) \ {v} == N(v) \ {u}.
    auto are_twins(const Graph &g, int u, int v) -> bool;

    /// True when some pair of distinct vertices are twins.
    auto has_twins(const Graph &g) -> bool;

    /// True when two distinct vertices have identical neighbour sets. Only
    /// such graphs can need a repeated signature value.
    auto has_shared_neighbourhood(const Graph &g) -> bool;
}

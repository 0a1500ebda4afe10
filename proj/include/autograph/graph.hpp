#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace autograph
{
    using VertexMask = std::uint64_t;

    inline constexpr int max_graph_vertices = 64;

    /// Simple undirected graph on vertices 0..n-1, stored as adjacency bitrows.
    class Graph
    {
    public:
        Graph() = default;

        /// Edgeless graph on n vertices; 0 <= n <= max_graph_vertices.
        explicit Graph(int n);

        auto size() const noexcept -> int { return _n; }
        auto has_edge(int u, int v) const -> bool { return (_rows[u] >> v) & 1U; }
        auto neighbours(int v) const -> VertexMask { return _rows[v]; }
        auto rows() const noexcept -> std::span<const VertexMask> { return _rows; }
        auto degree(int v) const -> int;
        auto edge_count() const noexcept -> int;
        auto all_vertices() const noexcept -> VertexMask;

        /// Throws on self-loops or out-of-range endpoints.
        auto add_edge(int u, int v) -> void;
        auto remove_edge(int u, int v) -> void;

        auto edges() const -> std::vector<std::pair<int, int>>;

        /// Graph whose vertex i is vertex order[i] of this one.
        auto relabel(std::span<const int> order) const -> Graph;

        friend auto operator==(const Graph &, const Graph &) -> bool = default;

    private:
        int _n = 0;
        std::vector<VertexMask> _rows;

        auto check_vertex(int v) const -> void;
    };

    /// Builds a graph from a row-mask array; the caller guarantees symmetry.
    auto graph_from_rows(std::span<const VertexMask> rows) -> Graph;
}

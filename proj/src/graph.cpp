#include <autograph/graph.hpp>

#include <bit>
#include <stdexcept>
#include <string>

namespace autograph
{
    Graph::Graph(int n) :
        _n(n)
    {
        if (n < 0 || n > max_graph_vertices)
            throw std::invalid_argument("graph size " + std::to_string(n) + " outside [0, 64]");
        _rows.assign(static_cast<std::size_t>(n), 0);
    }

    auto Graph::check_vertex(int v) const -> void
    {
        if (v < 0 || v >= _n)
            throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of size " + std::to_string(_n));
    }

    auto Graph::degree(int v) const -> int
    {
        return std::popcount(_rows[v]);
    }

    auto Graph::edge_count() const noexcept -> int
    {
        int twice = 0;
        for (auto r : _rows)
            twice += std::popcount(r);
        return twice / 2;
    }

    auto Graph::all_vertices() const noexcept -> VertexMask
    {
        return _n == 64 ? ~VertexMask{0} : ((VertexMask{1} << _n) - 1);
    }

    auto Graph::add_edge(int u, int v) -> void
    {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
        _rows[u] |= VertexMask{1} << v;
        _rows[v] |= VertexMask{1} << u;
    }

    auto Graph::remove_edge(int u, int v) -> void
    {
        check_vertex(u);
        check_vertex(v);
        _rows[u] &= ~(VertexMask{1} << v);
        _rows[v] &= ~(VertexMask{1} << u);
    }

    auto Graph::edges() const -> std::vector<std::pair<int, int>>
    {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < _n; ++u)
            for (int v = u + 1; v < _n; ++v)
                if (has_edge(u, v))
                    out.emplace_back(u, v);
        return out;
    }

    auto Graph::relabel(std::span<const int> order) const -> Graph
    {
        if (static_cast<int>(order.size()) != _n)
            throw std::invalid_argument("relabelling has wrong length");
        Graph result(_n);
        for (int i = 0; i < _n; ++i)
            for (int j = i + 1; j < _n; ++j)
                if (has_edge(order[i], order[j]))
                    result.add_edge(i, j);
        return result;
    }

    auto graph_from_rows(std::span<const VertexMask> rows) -> Graph
    {
        Graph g(static_cast<int>(rows.size()));
        for (int u = 0; u < g.size(); ++u)
            for (int v = u + 1; v < g.size(); ++v)
                if ((rows[u] >> v) & 1U)
                    g.add_edge(u, v);
        return g;
    }
}

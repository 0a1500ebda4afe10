#include <autograph/analysis.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>

using std::vector;

namespace autograph
{
    auto complement(const Graph &g) -> Graph
    {
        Graph c(g.size());
        for (int u = 0; u < g.size(); ++u)
            for (int v = u + 1; v < g.size(); ++v)
                if (! g.has_edge(u, v))
                    c.add_edge(u, v);
        return c;
    }

    namespace
    {
        auto check_size(const Graph &g) -> void
        {
            if (g.size() > max_canonical_vertices)
                throw std::invalid_argument("exact statistics support at most 16 vertices");
        }

        // Plain branch and bound over candidate bitsets; the popcount bound is
        // enough at n <= 16.
        auto extend_clique(const Graph &g, VertexMask candidates, int size, int &best) -> void
        {
            if (candidates == 0) {
                best = std::max(best, size);
                return;
            }
            while (candidates != 0) {
                if (size + std::popcount(candidates) <= best)
                    return;
                int v = std::countr_zero(candidates);
                candidates &= candidates - 1;
                extend_clique(g, candidates & g.neighbours(v), size + 1, best);
            }
        }
    }

    auto clique_number(const Graph &g) -> int
    {
        check_size(g);
        int best = 0;
        extend_clique(g, g.all_vertices(), 0, best);
        return best;
    }

    auto independence_number(const Graph &g) -> int
    {
        return clique_number(complement(g));
    }

    auto longest_path_edges(const Graph &g) -> int
    {
        check_size(g);
        int n = g.size();
        if (n == 0)
            return 0;

        // reach[mask] = set of end vertices of simple paths visiting exactly mask.
        vector<VertexMask> reach(std::size_t{1} << n, 0);
        int best_vertices = 1;
        for (int v = 0; v < n; ++v)
            reach[std::size_t{1} << v] = VertexMask{1} << v;
        for (std::size_t mask = 1; mask < reach.size(); ++mask) {
            auto ends = reach[mask];
            if (ends == 0)
                continue;
            best_vertices = std::max(best_vertices, std::popcount(mask));
            while (ends != 0) {
                int v = std::countr_zero(ends);
                ends &= ends - 1;
                auto next = g.neighbours(v) & ~static_cast<VertexMask>(mask);
                while (next != 0) {
                    int w = std::countr_zero(next);
                    next &= next - 1;
                    reach[mask | (std::size_t{1} << w)] |= VertexMask{1} << w;
                }
            }
        }
        return best_vertices - 1;
    }

    auto stats(const Graph &g) -> GraphStats
    {
        check_size(g);
        GraphStats s;
        s.degree_sequence = degree_sequence(g);
        if (! s.degree_sequence.empty()) {
            s.min_degree = s.degree_sequence.front();
            s.max_degree = s.degree_sequence.back();
        }
        s.codegree = g.size() - 1 - s.min_degree;
        s.clique_number = clique_number(g);
        auto co = complement(g);
        s.independence_number = clique_number(co);
        s.longest_path_in_complement = longest_path_edges(co);
        return s;
    }
}

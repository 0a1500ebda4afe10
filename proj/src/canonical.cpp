#include <autograph/analysis.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

using std::vector;

namespace autograph
{
    auto AdjacencyKey::bit(int index) const noexcept -> bool
    {
        return (words[index / 64] >> (63 - index % 64)) & 1U;
    }

    auto AdjacencyKey::to_bitstring() const -> std::string
    {
        std::string out;
        for (int b = 0; b < bit_count(); ++b)
            out += bit(b) ? '1' : '0';
        return out;
    }

    auto adjacency_key(const Graph &g, const vector<int> &order) -> AdjacencyKey
    {
        if (g.size() > max_canonical_vertices)
            throw std::invalid_argument("adjacency keys support at most 16 vertices");
        AdjacencyKey key;
        key.n = g.size();
        int b = 0;
        for (int j = 1; j < g.size(); ++j)
            for (int i = 0; i < j; ++i, ++b)
                if (g.has_edge(order[i], order[j]))
                    key.words[b / 64] |= std::uint64_t{1} << (63 - b % 64);
        return key;
    }

    auto adjacency_key(const Graph &g) -> AdjacencyKey
    {
        vector<int> identity(static_cast<std::size_t>(g.size()));
        for (int i = 0; i < g.size(); ++i)
            identity[i] = i;
        return adjacency_key(g, identity);
    }

    auto are_twins(const Graph &g, int u, int v) -> bool
    {
        auto mu = g.neighbours(u) & ~(VertexMask{1} << v);
        auto mv = g.neighbours(v) & ~(VertexMask{1} << u);
        return u != v && mu == mv;
    }

    auto has_shared_neighbourhood(const Graph &g) -> bool
    {
        for (int u = 0; u < g.size(); ++u)
            for (int v = u + 1; v < g.size(); ++v)
                if (g.neighbours(u) == g.neighbours(v))
                    return true;
        return false;
    }

    auto has_twins(const Graph &g) -> bool
    {
        for (int u = 0; u < g.size(); ++u)
            for (int v = u + 1; v < g.size(); ++v)
                if (are_twins(g, u, v))
                    return true;
        return false;
    }

    namespace
    {
        using Cell = vector<int>;
        using Partition = vector<Cell>;

        auto cell_mask(const Cell &cell) -> VertexMask
        {
            VertexMask m = 0;
            for (int v : cell)
                m |= VertexMask{1} << v;
            return m;
        }

        // Splits cells by neighbour counts into each splitter cell until the
        // ordered partition is equitable. Sub-cells are ordered by count, so the
        // result depends only on the graph structure and the input partition.
        auto refine(const Graph &g, Partition &cells) -> void
        {
            bool changed = true;
            while (changed) {
                changed = false;
                for (std::size_t s = 0; s < cells.size() && ! changed; ++s) {
                    auto splitter = cell_mask(cells[s]);
                    for (std::size_t c = 0; c < cells.size(); ++c) {
                        if (cells[c].size() < 2)
                            continue;
                        vector<std::pair<int, int>> counted;
                        counted.reserve(cells[c].size());
                        for (int v : cells[c])
                            counted.emplace_back(std::popcount(g.neighbours(v) & splitter), v);
                        std::sort(counted.begin(), counted.end());
                        if (counted.front().first == counted.back().first)
                            continue;

                        Partition pieces;
                        for (std::size_t k = 0; k < counted.size(); ++k) {
                            if (k == 0 || counted[k].first != counted[k - 1].first)
                                pieces.emplace_back();
                            pieces.back().push_back(counted[k].second);
                        }
                        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
                        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
                        changed = true;
                        break;
                    }
                }
            }
        }

        struct TreeSearch
        {
            const Graph &graph;
            bool have_best = false;
            CanonicalForm best;

            auto visit(Partition cells) -> void
            {
                refine(graph, cells);

                auto target = std::find_if(cells.begin(), cells.end(), [](const Cell &c) { return c.size() > 1; });
                if (target == cells.end()) {
                    vector<int> order;
                    order.reserve(cells.size());
                    for (const auto &c : cells)
                        order.push_back(c.front());
                    auto key = adjacency_key(graph, order);
                    if (! have_best || key < best.key) {
                        have_best = true;
                        best = CanonicalForm{key, std::move(order)};
                    }
                    return;
                }

                auto t = static_cast<std::size_t>(target - cells.begin());
                Cell candidates = cells[t];
                std::sort(candidates.begin(), candidates.end());
                vector<int> tried;
                for (int v : candidates) {
                    // Swapping twins is an automorphism fixing the current
                    // partition, so their subtrees produce the same leaf keys.
                    if (std::any_of(tried.begin(), tried.end(), [&](int u) { return are_twins(graph, u, v); }))
                        continue;
                    tried.push_back(v);

                    Partition child = cells;
                    Cell rest;
                    for (int w : cells[t])
                        if (w != v)
                            rest.push_back(w);
                    child[t] = Cell{v};
                    child.insert(child.begin() + static_cast<std::ptrdiff_t>(t) + 1, rest);
                    visit(std::move(child));
                }
            }
        };
    }

    auto canonical_form(const Graph &g) -> CanonicalForm
    {
        if (g.size() < 1 || g.size() > max_canonical_vertices)
            throw std::invalid_argument("canonical form supports 1..16 vertices, got " + std::to_string(g.size()));

        Cell all;
        for (int v = 0; v < g.size(); ++v)
            all.push_back(v);

        TreeSearch search{g, false, {}};
        search.visit(Partition{all});
        return search.best;
    }

    auto canonical_graph(const Graph &g) -> Graph
    {
        return g.relabel(canonical_form(g).order);
    }

    auto degree_sequence(const Graph &g) -> vector<int>
    {
        vector<int> seq;
        seq.reserve(static_cast<std::size_t>(g.size()));
        for (int v = 0; v < g.size(); ++v)
            seq.push_back(g.degree(v));
        std::sort(seq.begin(), seq.end());
        return seq;
    }

    auto is_isomorphic(const Graph &a, const Graph &b) -> bool
    {
        if (a.size() != b.size())
            return false;
        if (a.edge_count() != b.edge_count())
            return false;
        if (degree_sequence(a) != degree_sequence(b))
            return false;
        if (a.size() == 0)
            return true;
        return canonical_form(a).key == canonical_form(b).key;
    }
}

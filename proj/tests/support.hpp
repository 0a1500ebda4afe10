#pragma once

// Brute-force reference implementations shared by the tests. None of them
// reuse library code beyond the Graph container.

#include <autograph/graph.hpp>
#include <autograph/signature.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle
{
    using autograph::Graph;
    using autograph::Value;

    inline auto realize(const std::vector<Value> &values) -> Graph
    {
        std::multiset<Value> pool(values.begin(), values.end());
        int n = static_cast<int>(values.size());
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Value d = values[i] > values[j] ? values[i] - values[j] : values[j] - values[i];
                if (pool.count(d) > 0)
                    g.add_edge(i, j);
            }
        return g;
    }

    // graph6 column order: for j = 1..n-1, for i = 0..j-1.
    inline auto adjacency_string(const Graph &g, const std::vector<int> &order) -> std::string
    {
        std::string bits;
        for (int j = 1; j < g.size(); ++j)
            for (int i = 0; i < j; ++i)
                bits += g.has_edge(order[i], order[j]) ? '1' : '0';
        return bits;
    }

    // Minimum over all n! orders.
    inline auto canonical_string(const Graph &g) -> std::string
    {
        std::vector<int> order(static_cast<std::size_t>(g.size()));
        std::iota(order.begin(), order.end(), 0);
        std::string best;
        bool first = true;
        do {
            auto bits = adjacency_string(g, order);
            if (first || bits < best)
                best = bits;
            first = false;
        } while (std::next_permutation(order.begin(), order.end()));
        return best;
    }

    inline auto isomorphic(const Graph &a, const Graph &b) -> bool
    {
        return a.size() == b.size() && canonical_string(a) == canonical_string(b);
    }

    inline auto random_graph(std::mt19937_64 &rng, int n, double p) -> Graph
    {
        std::bernoulli_distribution coin(p);
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng))
                    g.add_edge(i, j);
        return g;
    }

    inline auto random_order(std::mt19937_64 &rng, int n) -> std::vector<int>
    {
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        return order;
    }

    inline auto clique_number(const Graph &g) -> int
    {
        int n = g.size(), best = 0;
        for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
            bool clique = true;
            for (int i = 0; i < n && clique; ++i)
                for (int j = i + 1; j < n && clique; ++j)
                    if ((mask >> i & 1U) && (mask >> j & 1U) && ! g.has_edge(i, j))
                        clique = false;
            if (clique)
                best = std::max(best, std::popcount(mask));
        }
        return best;
    }

    inline auto longest_path(const Graph &g) -> int
    {
        int best = 0;
        std::vector<bool> used(static_cast<std::size_t>(g.size()));
        auto dfs = [&](auto &&self, int v, int length) -> void {
            best = std::max(best, length);
            used[v] = true;
            for (int w = 0; w < g.size(); ++w)
                if (g.has_edge(v, w) && ! used[w])
                    self(self, w, length + 1);
            used[v] = false;
        };
        for (int v = 0; v < g.size(); ++v)
            dfs(dfs, v, 0);
        return best;
    }

    inline auto gcd_of(const std::vector<Value> &values) -> Value
    {
        Value g = 0;
        for (auto v : values)
            g = std::gcd(g, v < 0 ? -v : v);
        return g;
    }

    // Lexicographically first normalized tuple over [-bound, bound] realizing target.
    inline auto first_signature(const Graph &target, Value bound, bool allow_zero, bool multiset) -> std::optional<std::vector<Value>>
    {
        std::vector<Value> pool;
        for (Value v = -bound; v <= bound; ++v)
            if (allow_zero || v != 0)
                pool.push_back(v);
        auto want = canonical_string(target);
        int n = target.size();
        std::vector<std::size_t> idx(static_cast<std::size_t>(n));
        std::optional<std::vector<Value>> found;
        auto rec = [&](auto &&self, int depth, std::size_t from) -> void {
            if (found)
                return;
            if (depth == n) {
                std::vector<Value> values;
                for (auto k : idx)
                    values.push_back(pool[k]);
                if (gcd_of(values) == 1 && canonical_string(realize(values)) == want)
                    found = values;
                return;
            }
            for (std::size_t k = from; k < pool.size() && ! found; ++k) {
                idx[static_cast<std::size_t>(depth)] = k;
                self(self, depth + 1, multiset ? k : k + 1);
            }
        };
        rec(rec, 0, 0);
        return found;
    }
}

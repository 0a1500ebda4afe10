#include <autograph/analysis.hpp>
#include <autograph/graph.hpp>
#include <autograph/realize.hpp>
#include <autograph/sampling.hpp>

#include "support.hpp"

#include <doctest.h>

#include <stdexcept>

#include <random>

using namespace autograph;

TEST_CASE("graph edges and degrees")
{
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 1);
    CHECK(g.has_edge(1, 0));
    CHECK(g.degree(1) == 2);
    CHECK(g.edge_count() == 2);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    g.remove_edge(0, 1);
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::out_of_range);
    CHECK_THROWS_AS(Graph(65), std::invalid_argument);
}

TEST_CASE("relabel moves vertex order[i] to position i")
{
    Graph g(3);
    g.add_edge(0, 1);
    std::vector<int> order{2, 0, 1};
    auto h = g.relabel(order);
    CHECK(h.has_edge(1, 2));
    CHECK(h.edge_count() == 1);
}

TEST_CASE("graph with 64 vertices")
{
    Graph g(64);
    g.add_edge(0, 63);
    CHECK(g.degree(63) == 1);
    CHECK(std::popcount(g.all_vertices()) == 64);
}

TEST_CASE("realize {1,2,4} gives a path")
{
    auto r = realize(parse_signature("1,2,4"));
    CHECK(r.graph.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("realize matches the brute-force construction")
{
    SignatureSampler sampler(7, SamplerConfig{1, 12, 20, 0.4});
    for (int k = 0; k < 500; ++k) {
        auto s = sampler.next();
        auto r = realize(s);
        CHECK(r.graph == oracle::realize({s.values().begin(), s.values().end()}));
        CHECK(realization_consistent(r));
    }
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<Value> value(-6, 6);
    for (int k = 0; k < 500; ++k) {
        std::vector<Value> values(static_cast<std::size_t>(2 + k % 9));
        for (auto &v : values)
            v = value(rng);
        Signature s{values};
        CHECK(realize(s).graph == oracle::realize({s.values().begin(), s.values().end()}));
    }
}

TEST_CASE("repeated values")
{
    // equal values are adjacent exactly when 0 is present
    CHECK(realize(parse_signature("1,1")).graph.edge_count() == 0);
    CHECK(realize(parse_signature("0,1,1")).graph.edge_count() == 3);
}

TEST_CASE("difference multiset counts the degree")
{
    auto s = parse_signature("-3,1,2,4,5");
    auto r = realize(s);
    for (std::size_t v = 0; v < s.size(); ++v) {
        auto d = difference_multiset(s, v);
        CHECK(d.center == s[v]);
        CHECK(d.diffs.size() == s.size() - 1);
        CHECK(d.in_signature == r.graph.degree(static_cast<int>(v)));
        CHECK(std::is_sorted(d.distinct.begin(), d.distinct.end()));
    }
    auto d = difference_multiset(s, 1);
    CHECK(d.diffs == std::vector<Value>{4, 1, 3, 4});
    CHECK(d.distinct == std::vector<Value>{1, 3, 4});
    CHECK_THROWS_AS(difference_multiset(s, 5), std::out_of_range);
}

TEST_CASE("realize is invariant under scaling")
{
    SignatureSampler sampler(11, SamplerConfig{});
    for (int k = 0; k < 200; ++k) {
        auto s = sampler.next();
        for (Value c : {2, 3, 17})
            CHECK(realize(scale(s, c)).graph == realize(s).graph);
    }
}

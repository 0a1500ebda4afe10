#include <autograph/analysis.hpp>
#include <autograph/families.hpp>
#include <autograph/realize.hpp>

#include <doctest.h>

#include <stdexcept>

using namespace autograph;

TEST_CASE("basic families")
{
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK(empty_graph(5).edge_count() == 0);
    CHECK(path_graph(4).edge_count() == 3);
    CHECK(cycle_graph(6).edge_count() == 6);
    CHECK(degree_sequence(cycle_graph(6)) == std::vector<int>(6, 2));
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
}

TEST_CASE("M6 is the complement of two disjoint paths")
{
    auto m6 = m6_graph();
    CHECK(m6.size() == 6);
    CHECK(m6.edge_count() == 11);
    auto c = complement(m6);
    CHECK(c.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {3, 4}, {4, 5}});
}

TEST_CASE("G_n is the complement of two disjoint cycles")
{
    for (int n = 8; n <= 14; n += 2) {
        auto g = gn_graph(n);
        CHECK(g.edge_count() == n * (n - 3) / 2);
        auto c = complement(g);
        for (int v = 0; v < n; ++v) {
            int half = n / 2, base = v < half ? 0 : half, next = base + (v - base + 1) % half;
            CHECK(c.has_edge(v, next));
        }
        CHECK(c.edge_count() == n);
    }
    CHECK(gn_graph(10).edge_count() == 35);
    CHECK_THROWS_AS(gn_graph(7), std::invalid_argument);
    CHECK_THROWS_AS(gn_graph(6), std::invalid_argument);
}

TEST_CASE("progression signatures")
{
    CHECK(to_string(expand_ap({1, 1, 5, {}})) == "1,2,3,4,5");
    CHECK(to_string(expand_ap({2, 3, 4, {}})) == "6,9,12,15");
    CHECK(to_string(expand_ap({1, 1, 10, {3}})) == "1,2,4,5,6,7,8,9,10");
    CHECK(to_string(expand_ap({1, 2, 6, {2, 5}})) == "2,6,8,12");
    CHECK_THROWS_AS(expand_ap({1, 1, 5, {6}}), std::invalid_argument);
    CHECK_THROWS_AS(expand_ap({1, 1, 5, {2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(expand_ap({1, 0, 5, {}}), std::invalid_argument);
    CHECK_THROWS_AS(expand_ap({1, 1, 3, {1, 2, 3}}), std::invalid_argument);
}

TEST_CASE("[1]_1^n realizes K_n")
{
    for (int n = 2; n <= 10; ++n)
        CHECK(is_isomorphic(realize(expand_ap({1, 1, n, {}})).graph, complete_graph(n)));
}

TEST_CASE("family specs")
{
    CHECK(make_family("kn:5").graph == complete_graph(5));
    CHECK(make_family("empty:4").graph == empty_graph(4));
    CHECK(make_family("path:4").graph == path_graph(4));
    CHECK(make_family("cycle:6").graph == cycle_graph(6));
    CHECK(make_family("m6").graph == m6_graph());
    CHECK(make_family("gn:10").graph == gn_graph(10));
    CHECK(make_family("complement:cycle:6").graph == complement(cycle_graph(6)));

    auto ap = make_family("ap:1,1,10,del=3");
    REQUIRE(ap.signature);
    CHECK(to_string(*ap.signature) == "1,2,4,5,6,7,8,9,10");
    CHECK(ap.graph == realize(*ap.signature).graph);
    CHECK_FALSE(make_family("m6").signature);

    CHECK(looks_like_family_spec("gn:8"));
    CHECK_FALSE(looks_like_family_spec("EVzo"));
    CHECK_THROWS_AS(make_family("kn:x"), std::invalid_argument);
    CHECK_THROWS_AS(make_family("unknown:3"), std::invalid_argument);
    CHECK_THROWS_AS(make_family("ap:1,1"), std::invalid_argument);
}

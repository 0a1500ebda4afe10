#include <autograph/analysis.hpp>
#include <autograph/families.hpp>
#include <autograph/graph_io.hpp>
#include <autograph/realize.hpp>
#include <autograph/search.hpp>

#include "support.hpp"

#include <doctest.h>

#include <stdexcept>

#include <random>
#include <set>

using namespace autograph;

namespace
{
    auto config_with(Value bound, bool pruning = true, int workers = 1) -> SearchConfig
    {
        SearchConfig c;
        c.bound = bound;
        c.paper_pruning = pruning;
        c.workers = workers;
        return c;
    }

    auto values_of(const std::optional<Signature> &s) -> std::optional<std::vector<Value>>
    {
        if (! s)
            return std::nullopt;
        return std::vector<Value>(s->values().begin(), s->values().end());
    }

    // every normalized tuple realizing target, in lexicographic order
    auto all_matches(const Graph &target, Value bound, bool multiset) -> std::vector<std::vector<Value>>
    {
        std::vector<std::vector<Value>> out;
        auto want = oracle::canonical_string(target);
        int n = target.size();
        std::vector<Value> current;
        auto rec = [&](auto &&self, Value from) -> void {
            if (static_cast<int>(current.size()) == n) {
                if (oracle::gcd_of(current) == 1 && oracle::canonical_string(oracle::realize(current)) == want)
                    out.push_back(current);
                return;
            }
            for (Value v = from; v <= bound; ++v) {
                current.push_back(v);
                self(self, multiset ? v : v + 1);
                current.pop_back();
            }
        };
        rec(rec, -bound);
        return out;
    }

    auto strip_timing(nlohmann::ordered_json j) -> nlohmann::ordered_json
    {
        j.erase("wallClockSeconds");
        j["config"].erase("workers");
        return j;
    }
}

TEST_CASE("first signatures match reference values")
{
    // lexicographically first normalized signatures from an independent Python search
    struct Case
    {
        const char *family;
        Value bound;
        std::vector<Value> with_zero, without_zero;
    };
    std::vector<Case> cases{
        {"path:3", 5, {-1, 0, 1}, {-1, 1, 2}},
        {"kn:4", 4, {0, 1, 2, 3}, {1, 2, 3, 4}},
        {"cycle:4", 6, {1, 2, 4, 5}, {1, 2, 4, 5}},
        {"path:4", 6, {-5, 0, 1, 6}, {-5, 1, 5, 6}},
        {"cycle:5", 8, {-2, -1, 1, 3, 4}, {-2, -1, 1, 3, 4}},
        {"kn:2", 3, {0, 1}, {1, 2}},
        {"empty:3", 3, {-3, -2, -1}, {-3, -2, -1}},
        {"kn:1", 3, {-1}, {-1}},
    };
    for (const auto &c : cases) {
        CAPTURE(c.family);
        auto target = make_family(c.family).graph;
        for (bool pruning : {true, false}) {
            auto config = config_with(c.bound, pruning);
            CHECK(values_of(find_signature(target, config)) == c.with_zero);
            config.allow_zero = false;
            CHECK(values_of(find_signature(target, config)) == c.without_zero);
        }
    }
    // the star K_{1,3}
    Graph star(4);
    for (int v = 1; v < 4; ++v)
        star.add_edge(0, v);
    CHECK(values_of(find_signature(star, config_with(6))) == std::vector<Value>{-6, 0, 1, 6});
}

TEST_CASE("P3 has the proper signature {1,2,4} without negatives or zero")
{
    auto config = config_with(5);
    config.allow_zero = false;
    config.max_negatives = 0;
    CHECK(values_of(find_signature(path_graph(3), config)) == std::vector<Value>{1, 2, 4});
}

TEST_CASE("first signature agrees with brute force on random small graphs")
{
    std::mt19937_64 rng(21);
    for (int k = 0; k < 40; ++k) {
        int n = 2 + k % 4;
        auto g = oracle::random_graph(rng, n, 0.5);
        Value bound = 4 + k % 3;
        bool multiset = k % 5 == 0;
        auto config = config_with(bound, k % 2 == 0);
        config.allow_multiset = multiset;
        CHECK(values_of(find_signature(g, config)) == oracle::first_signature(g, bound, true, multiset));
    }
}

TEST_CASE("all matches agree with brute force and with pruning disabled")
{
    std::vector<Graph> targets{path_graph(3), path_graph(4), cycle_graph(4), complete_graph(3), empty_graph(3), cycle_graph(5)};
    for (const auto &target : targets) {
        std::vector<Signature> expected;
        for (auto &v : all_matches(target, 6, false))
            expected.emplace_back(v);
        auto on = certify_absence(target, config_with(6, true));
        auto off = certify_absence(target, config_with(6, false));
        CHECK(on.matches == expected);
        CHECK(off.matches == expected);
        CHECK(on.match_count == expected.size());
        CHECK(on.exhaustive);
        CHECK(off.exhaustive);
        CHECK(off.counters.pruned() == 0);
        for (const auto &m : on.matches)
            CHECK(is_normalized(m));
    }
}

TEST_CASE("multiset matches agree with brute force")
{
    SearchConfig config = config_with(3);
    config.allow_multiset = true;
    for (const auto &target : {empty_graph(3), complete_graph(3), path_graph(3)}) {
        std::vector<Signature> expected;
        for (auto &v : all_matches(target, 3, true))
            expected.emplace_back(v);
        CHECK(certify_absence(target, config).matches == expected);
    }
}

TEST_CASE("space size and counter bookkeeping")
{
    auto config = config_with(7);
    auto report = certify_absence(m6_graph(), config);
    CHECK(report.space_size == 5005);   // C(15, 6)
    CHECK(report.candidates_enumerated() == report.space_size);
    CHECK(report.counters.pruned() + report.candidates_realized() == report.space_size);
    CHECK(report.match_count == 0);
    CHECK(report.exhaustive);
    CHECK(report.counters.pruned_negative_count > 0);
    CHECK(report.counters.pruned_zero > 0);

    CHECK(estimate_candidates(6, config_with(25)) == 18009460);
    auto no_zero = config_with(10);
    no_zero.allow_zero = false;
    CHECK(estimate_candidates(3, no_zero) == 1140);   // C(20, 3)
    auto multi = config_with(2);
    multi.allow_multiset = true;
    CHECK(estimate_candidates(3, multi) == 35);        // C(7, 3)
    auto capped = config_with(3);
    capped.max_negatives = 1;
    CHECK(estimate_candidates(3, capped) == 4 + 3 * 6);   // C(4,3) + 3 * C(4,2)
}

TEST_CASE("max_negatives restricts the space")
{
    auto config = config_with(5);
    config.max_negatives = 0;
    auto report = certify_absence(path_graph(3), config);
    for (const auto &m : report.matches)
        CHECK(m.negative_count() == 0);
    CHECK(report.space_size == estimate_candidates(3, config));
    CHECK(report.exhaustive);
}

TEST_CASE("results do not depend on the worker count")
{
    std::vector<std::pair<Graph, Value>> runs{{m6_graph(), 12}, {gn_graph(8), 9}, {cycle_graph(5), 8}, {path_graph(4), 7}};
    for (const auto &[target, bound] : runs)
        for (bool pruning : {true, false}) {
            auto base = certify_absence(target, config_with(bound, pruning, 1));
            auto first = search_signature(target, config_with(bound, pruning, 1));
            for (int workers : {2, 8}) {
                auto other = certify_absence(target, config_with(bound, pruning, workers));
                CHECK(strip_timing(to_json(other)) == strip_timing(to_json(base)));
                auto found = search_signature(target, config_with(bound, pruning, workers));
                CHECK(found.signature == first.signature);
                CHECK(found.counters == first.counters);
            }
        }
}

TEST_CASE("a signature found at one bound is found at every larger bound")
{
    for (const auto &target : {path_graph(4), cycle_graph(5), complete_graph(4), complement(cycle_graph(5))}) {
        bool seen = false;
        for (Value b = 2; b <= 9; ++b) {
            bool found = find_signature(target, config_with(b)).has_value();
            if (seen)
                CHECK(found);
            seen = seen || found;
        }
        CHECK(seen);
    }
}

TEST_CASE("pruning verdicts are sound")
{
    std::mt19937_64 rng(8);
    std::vector<Graph> targets{m6_graph(), gn_graph(8), path_graph(5), cycle_graph(6)};
    for (const auto &target : targets) {
        auto descriptor = describe_target(target);
        auto config = config_with(12);
        std::uniform_int_distribution<Value> value(-12, 12);
        for (int k = 0; k < 3000; ++k) {
            std::set<Value> picked;
            while (static_cast<int>(picked.size()) < target.size())
                picked.insert(value(rng));
            std::vector<Value> candidate(picked.begin(), picked.end());
            auto verdict = prune_candidate(candidate, true, descriptor, config);
            if (! verdict.keep) {
                CHECK(verdict.reason != PruneReason::none);
                auto realized = oracle::realize(candidate);
                bool realizes = target.size() <= 6 ? oracle::isomorphic(realized, target) : is_isomorphic(realized, target);
                bool scaled = verdict.reason == PruneReason::scaled_duplicate;
                CHECK((! realizes || scaled));
            }
        }
    }
}

TEST_CASE("target descriptors")
{
    CHECK(describe_target(m6_graph()).zero_free);
    CHECK(describe_target(gn_graph(12)).zero_free);
    CHECK_FALSE(describe_target(path_graph(6)).zero_free);
    auto d = describe_target(m6_graph());
    CHECK(d.edges == 11);
    CHECK(d.min_degree == 3);
}

TEST_CASE("small absence certificates")
{
    for (bool pruning : {true, false}) {
        auto m6 = certify_absence(m6_graph(), config_with(10, pruning));
        CHECK(m6.match_count == 0);
        CHECK(m6.exhaustive);
        auto g8 = certify_absence(gn_graph(8), config_with(8, pruning));
        CHECK(g8.match_count == 0);
        CHECK(g8.exhaustive);
    }
}

TEST_CASE("configuration validation")
{
    CHECK_THROWS_AS(validate(config_with(0)), std::invalid_argument);
    auto c = config_with(5);
    c.workers = 0;
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c = config_with(25);
    c.candidate_ceiling = 1000;
    CHECK_THROWS_AS(certify_absence(m6_graph(), c), InfeasibleSearch);
    CHECK(describe(config_with(5, true, 1)) == describe(config_with(5, true, 8)));
    CHECK(describe(config_with(5, true)) != describe(config_with(5, false)));
}

TEST_CASE("report JSON fields")
{
    auto j = to_json(certify_absence(m6_graph(), config_with(6)));
    for (const char *key : {"targetGraph6", "targetKey", "vertices", "config", "spaceSize", "candidatesEnumerated", "candidatesRealized",
             "pruned", "matchCount", "matches", "exhaustive", "wallClockSeconds"})
        CHECK(j.contains(key));
    CHECK(j["vertices"] == 6);
    CHECK(j["targetGraph6"] == canonical_graph6(m6_graph()));
}

#include <autograph/analysis.hpp>
#include <autograph/families.hpp>
#include <autograph/lemmas.hpp>
#include <autograph/realize.hpp>
#include <autograph/sampling.hpp>
#include <autograph/verify.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

using std::string;

using std::vector;

namespace autograph
{
    using std::to_string;
    namespace
    {
        constexpr std::size_t kept_counterexamples = 10;

        auto named(string name) -> CheckSummary
        {
            CheckSummary check;
            check.name = std::move(name);
            return check;
        }

        // Degrees of every surviving position of {s, ..., ns} minus deletions.
        auto deletion_degrees(int n, Value s, const vector<int> &deletions) -> std::map<int, int>
        {
            auto signature = expand_ap(APSignature{1, s, n, deletions});
            auto r = realize(signature);
            std::map<int, int> by_position;
            for (std::size_t v = 0; v < signature.size(); ++v)
                by_position[static_cast<int>(signature[v] / s)] = r.graph.degree(static_cast<int>(v));
            return by_position;
        }

        auto describe_ap(int n, Value s, const vector<int> &deletions) -> string
        {
            string out = "ap:1," + to_string(s) + "," + to_string(n) + ",del=";
            for (std::size_t k = 0; k < deletions.size(); ++k)
                out += (k ? "," : "") + to_string(deletions[k]);
            return out;
        }

        auto subsets_with_zero(int size, int bound, const std::function<void(const Signature &)> &visit) -> void
        {
            vector<Value> others;
            for (Value v = -bound; v <= bound; ++v)
                if (v != 0)
                    others.push_back(v);
            vector<int> pick(static_cast<std::size_t>(size - 1));
            std::function<void(int, int)> rec = [&](int depth, int from) {
                if (depth == size - 1) {
                    vector<Value> values{0};
                    for (int k : pick)
                        values.push_back(others[static_cast<std::size_t>(k)]);
                    visit(Signature{values});
                    return;
                }
                for (int c = from; c < static_cast<int>(others.size()); ++c) {
                    pick[static_cast<std::size_t>(depth)] = c;
                    rec(depth + 1, c + 1);
                }
            };
            rec(0, 0);
        }
    }

    auto CheckSummary::record(string signature, string detail) -> void
    {
        ++violations;
        if (counterexamples.size() < kept_counterexamples)
            counterexamples.push_back({std::move(signature), std::move(detail)});
    }

    auto VerificationReport::gating_violations() const -> std::uint64_t
    {
        std::uint64_t total = 0;
        for (const auto &c : checks)
            if (! c.informational)
                total += c.violations;
        return total;
    }

    auto VerificationReport::find(std::string_view name) const -> const CheckSummary *
    {
        for (const auto &c : checks)
            if (c.name == name)
                return &c;
        return nullptr;
    }

    auto verify_one_deletion_formula(int min_n, int max_n) -> CheckSummary
    {
        CheckSummary check = named("one-deletion-degree-formula");
        for (Value s : {1, 2})
            for (int n = min_n; n <= max_n; ++n)
                for (int i = 1; i <= n; ++i) {
                    auto degrees = deletion_degrees(n, s, {i});
                    for (auto [p, degree] : degrees) {
                        ++check.cases;
                        ++check.applicable;
                        auto predicted = predict_degree_one_deletion(n, i, p).predicted;
                        if (predicted != degree)
                            check.record(describe_ap(n, s, {i}), "p=" + to_string(p) + " predicted=" + to_string(predicted) + " realized=" + to_string(degree));
                    }
                }
        return check;
    }

    auto verify_two_deletion_formula(int min_n, int max_n) -> CheckSummary
    {
        CheckSummary check = named("two-deletion-degree-formula");
        for (Value s : {1, 2})
            for (int n = min_n; n <= max_n; ++n)
                for (int i = 1; i <= n; ++i)
                    for (int j = i + 1; j <= n; ++j) {
                        auto degrees = deletion_degrees(n, s, {i, j});
                        for (auto [p, degree] : degrees) {
                            ++check.cases;
                            ++check.applicable;
                            auto predicted = predict_degree_two_deletions(n, i, j, p).predicted;
                            if (predicted != degree)
                                check.record(describe_ap(n, s, {i, j}), "p=" + to_string(p) + " predicted=" + to_string(predicted) + " realized=" + to_string(degree));
                        }
                    }
        return check;
    }

    auto verify_one_deletion_lemma(int min_n, int max_n) -> CheckSummary
    {
        CheckSummary check = named("one-deletion-not-gn");
        for (Value s : {1, 2})
            for (int n = min_n; n <= max_n; ++n) {
                if (n % 2 == 0)
                    continue;
                for (int i = 1; i <= n; ++i) {
                    ++check.cases;
                    ++check.applicable;
                    int deletion[] = {i};
                    if (! check_kn_deletion_lemmas(n, s, deletion).holds)
                        check.record(describe_ap(n, s, {i}), "realization is isomorphic to G_" + to_string(n - 1));
                }
            }
        return check;
    }

    auto verify_two_deletion_lemma(int min_n, int max_n) -> CheckSummary
    {
        CheckSummary check = named("two-deletion-not-gn");
        for (Value s : {1, 2})
            for (int n = min_n; n <= max_n; ++n) {
                if (n % 2 != 0)
                    continue;
                for (int i = 1; i <= n; ++i)
                    for (int j = i + 1; j <= n; ++j) {
                        ++check.cases;
                        ++check.applicable;
                        int deletions[] = {i, j};
                        if (! check_kn_deletion_lemmas(n, s, deletions).holds)
                            check.record(describe_ap(n, s, {i, j}), "realization is isomorphic to G_" + to_string(n - 2));
                    }
            }
        return check;
    }

    auto verify_random_monographs(std::uint64_t seed, std::uint64_t samples) -> vector<CheckSummary>
    {
        CheckSummary kth = named("kth-largest");
        CheckSummary negatives = named("negative-count-bound");
        CheckSummary max_element = named("max-element");
        std::map<string, CheckSummary> structure;
        vector<string> structure_order;

        SignatureSampler sampler(seed, SamplerConfig{});
        for (std::uint64_t k = 0; k < samples; ++k) {
            auto signature = sampler.next();
            auto r = realize(signature);
            auto text = to_string(signature);

            ++kth.cases;
            ++kth.applicable;
            for (const auto &v : check_kth_largest(r))
                kth.record(text, "rank=" + to_string(v.rank) + " negative neighbours=" + to_string(v.negative_neighbours));

            ++negatives.cases;
            auto bound = check_negative_count_bound(r);
            if (bound != CheckOutcome::not_applicable)
                ++negatives.applicable;
            if (bound == CheckOutcome::fail)
                negatives.record(text, "m exceeds n - 1 - deg(s_n)");

            ++max_element.cases;
            auto outcome = check_max_element_lemma(r);
            if (outcome != CheckOutcome::not_applicable)
                ++max_element.applicable;
            if (outcome == CheckOutcome::fail)
                max_element.record(text, "pairing broken");

            for (const auto &result : check_structure_observations(r).results) {
                auto [it, inserted] = structure.try_emplace(result.name, named(result.name));
                if (inserted)
                    structure_order.push_back(result.name);
                auto &c = it->second;
                c.informational = result.informational;
                ++c.cases;
                if (result.outcome != CheckOutcome::not_applicable)
                    ++c.applicable;
                if (result.outcome == CheckOutcome::fail)
                    c.record(text, result.detail);
            }
        }

        vector<CheckSummary> out{kth, negatives, max_element};
        for (const auto &name : structure_order)
            out.push_back(structure.at(name));
        return out;
    }

    auto verify_m6_structure() -> CheckSummary
    {
        CheckSummary check = named("m6-structure");
        auto g = m6_graph();
        auto st = stats(g);
        auto expect = [&](bool ok, const string &what) {
            ++check.cases;
            ++check.applicable;
            if (! ok)
                check.record("m6", what);
        };
        expect(g.size() == 6 && g.edge_count() == 11, "6 vertices and 11 edges");
        expect(st.degree_sequence == vector<int>{3, 3, 4, 4, 4, 4}, "degrees 3,3,4,4,4,4");
        bool same_degree_adjacent = true;
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v)
                if (g.degree(u) == g.degree(v) && ! g.has_edge(u, v))
                    same_degree_adjacent = false;
        expect(same_degree_adjacent, "same-degree vertices adjacent");
        expect(st.clique_number == 4, "clique number 4");
        expect(! has_shared_neighbourhood(g), "no two vertices share a neighbourhood");
        expect(st.codegree == 2, "codegree 2");
        return check;
    }

    auto verify_m6_ap5_sweep(int value_limit) -> CheckSummary
    {
        CheckSummary check = named("m6-progression-shape");
        for (Value p = -value_limit; p <= -1; ++p)
            for (Value t = 0; t <= value_limit; ++t)
                for (Value s = 1; t + 4 * s <= value_limit; ++s) {
                    Signature candidate{{p, t, t + s, t + 2 * s, t + 3 * s, t + 4 * s}};
                    ++check.cases;
                    auto outcome = check_m6_ap5_lemma(candidate);
                    if (outcome != CheckOutcome::not_applicable)
                        ++check.applicable;
                    if (outcome == CheckOutcome::fail)
                        check.record(to_string(candidate), "realizes M6");
                }
        return check;
    }

    auto verify_m6_zero_sweep(int bound) -> CheckSummary
    {
        CheckSummary check = named("m6-zero-exclusion");
        auto target = m6_graph();
        subsets_with_zero(6, bound, [&](const Signature &candidate) {
            ++check.cases;
            ++check.applicable;
            if (! check_zero_exclusion(target, candidate))
                check.record(to_string(candidate), "realizes M6");
        });
        return check;
    }

    auto verify_gn_structure(int min_n, int max_n) -> CheckSummary
    {
        CheckSummary check = named("gn-structure");
        for (int n = min_n; n <= max_n; n += 2) {
            auto g = gn_graph(n);
            auto st = stats(g);
            auto expect = [&](bool ok, const string &what) {
                ++check.cases;
                ++check.applicable;
                if (! ok)
                    check.record("gn:" + to_string(n), what);
            };
            expect(st.min_degree == n - 3 && st.max_degree == n - 3, "regular of degree n-3");
            expect(st.codegree == 2, "codegree 2");
            expect(st.clique_number <= n / 2, "clique number at most n/2");
            expect(st.independence_number == 2, "independence number 2");
            expect(st.longest_path_in_complement == n / 2 - 1, "longest complement path n/2-1 edges");
            expect(! has_shared_neighbourhood(g), "no two vertices share a neighbourhood");
        }
        return check;
    }

    auto verify_gn_zero_sweep(int n, int bound) -> CheckSummary
    {
        CheckSummary check = named("gn-zero-exclusion");
        auto target = gn_graph(n);
        subsets_with_zero(n, bound, [&](const Signature &candidate) {
            ++check.cases;
            ++check.applicable;
            if (! check_zero_exclusion(target, candidate))
                check.record(to_string(candidate), "realizes G_" + to_string(n));
        });
        return check;
    }

    auto run_verification(std::string_view suite, std::uint64_t seed, std::uint64_t samples) -> VerificationReport
    {
        static const vector<string> suites{"all", "deletion", "structure", "maxelem", "m6", "gn"};
        if (std::find(suites.begin(), suites.end(), suite) == suites.end())
            throw std::invalid_argument("unknown verification suite '" + string(suite) + "'");

        VerificationReport report;
        report.suite = string(suite);
        report.seed = seed;
        report.samples = samples;
        auto wants = [&](std::string_view name) { return suite == "all" || suite == name; };

        if (wants("deletion")) {
            report.checks.push_back(verify_one_deletion_formula(5, 14));
            report.checks.push_back(verify_two_deletion_formula(6, 14));
            report.checks.push_back(verify_one_deletion_lemma(9, 15));
            report.checks.push_back(verify_two_deletion_lemma(10, 14));
        }
        if (wants("structure") || wants("maxelem")) {
            for (auto &c : verify_random_monographs(seed, samples)) {
                bool is_max = c.name == "max-element";
                if (suite == "all" || (suite == "maxelem" && is_max) || (suite == "structure" && ! is_max))
                    report.checks.push_back(std::move(c));
            }
        }
        if (wants("m6")) {
            report.checks.push_back(verify_m6_structure());
            report.checks.push_back(verify_m6_ap5_sweep(40));
            report.checks.push_back(verify_m6_zero_sweep(10));
        }
        if (wants("gn")) {
            report.checks.push_back(verify_gn_structure(8, 14));
            report.checks.push_back(verify_gn_zero_sweep(8, 12));
        }
        return report;
    }

    auto to_json(const VerificationReport &report) -> nlohmann::ordered_json
    {
        nlohmann::ordered_json j;
        j["suite"] = report.suite;
        j["seed"] = report.seed;
        j["samples"] = report.samples;
        auto checks = nlohmann::ordered_json::array();
        for (const auto &c : report.checks) {
            nlohmann::ordered_json cj;
            cj["name"] = c.name;
            cj["cases"] = c.cases;
            cj["applicable"] = c.applicable;
            cj["violations"] = c.violations;
            cj["informational"] = c.informational;
            auto examples = nlohmann::ordered_json::array();
            for (const auto &e : c.counterexamples)
                examples.push_back({{"signature", e.signature}, {"detail", e.detail}});
            cj["counterexamples"] = examples;
            checks.push_back(cj);
        }
        j["checks"] = checks;
        j["violations"] = report.gating_violations();
        return j;
    }

    auto to_text(const VerificationReport &report) -> string
    {
        string out;
        for (const auto &c : report.checks) {
            out += c.name + ": " + to_string(c.violations) + " violations / " + to_string(c.cases) + " cases (" +
                to_string(c.applicable) + " applicable)" + (c.informational ? " [informational]" : "") + "\n";
            for (const auto &e : c.counterexamples)
                out += "    " + e.signature + "  " + e.detail + "\n";
        }
        out += "total: " + to_string(report.gating_violations()) + " violations\n";
        return out;
    }
}

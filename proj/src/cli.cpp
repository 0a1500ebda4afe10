#include <autograph/atlas.hpp>
#include <autograph/cli.hpp>
#include <autograph/families.hpp>
#include <autograph/graph_io.hpp>
#include <autograph/realize.hpp>
#include <autograph/search.hpp>
#include <autograph/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::ordered_json;
using std::string;

namespace autograph::cli
{
    namespace
    {
        struct SearchFlags
        {
            string target;
            Value bound = 0;
            bool multiset = false;
            bool no_pruning = false;
            bool no_zero = false;
            int max_negatives = -1;
            int workers = 1;
            std::uint64_t ceiling = SearchConfig{}.candidate_ceiling;
        };

        auto add_search_flags(CLI::App *cmd, SearchFlags &f) -> void
        {
            cmd->add_option("--bound", f.bound, "values are drawn from [-B, B]")->required()->check(CLI::Range(1, 10'000'000));
            cmd->add_flag("--multiset", f.multiset, "allow repeated values");
            cmd->add_flag("--no-paper-pruning", f.no_pruning, "disable structural pruning");
            cmd->add_flag("--no-zero", f.no_zero, "exclude 0 from the value pool");
            cmd->add_option("--max-negatives", f.max_negatives, "limit negative values per candidate")->check(CLI::NonNegativeNumber);
            cmd->add_option("--workers", f.workers, "worker threads")->check(CLI::Range(1, 256));
            cmd->add_option("--ceiling", f.ceiling, "refuse spaces larger than this");
        }

        auto to_config(const SearchFlags &f) -> SearchConfig
        {
            SearchConfig c;
            c.bound = f.bound;
            c.allow_multiset = f.multiset;
            c.paper_pruning = ! f.no_pruning;
            c.allow_zero = ! f.no_zero;
            if (f.max_negatives >= 0)
                c.max_negatives = f.max_negatives;
            c.workers = f.workers;
            c.candidate_ceiling = f.ceiling;
            return c;
        }

        auto quote(const string &s) -> string
        {
            if (! s.empty() && s.find_first_of(" \t'\"\\$`!*?[]{}()<>|&;#~") == string::npos)
                return s;
            string out = "'";
            for (char ch : s)
                out += ch == '\'' ? string("'\\''") : string(1, ch);
            return out + "'";
        }

        auto search_echo(const SearchConfig &c) -> string
        {
            string out = " --bound " + std::to_string(c.bound);
            if (c.allow_multiset)
                out += " --multiset";
            if (! c.paper_pruning)
                out += " --no-paper-pruning";
            if (! c.allow_zero)
                out += " --no-zero";
            if (c.max_negatives)
                out += " --max-negatives " + std::to_string(*c.max_negatives);
            out += " --workers " + std::to_string(c.workers);
            out += " --ceiling " + std::to_string(c.candidate_ceiling);
            return out;
        }

        auto read_file(const std::filesystem::path &path) -> string
        {
            std::ifstream in(path, std::ios::binary);
            if (! in)
                throw std::runtime_error("cannot read " + path.string());
            std::ostringstream buffer;
            buffer << in.rdbuf();
            return buffer.str();
        }

        auto write_file(const std::filesystem::path &path, const string &text) -> void
        {
            std::ofstream out(path, std::ios::binary);
            if (! out || ! (out << text))
                throw std::runtime_error("cannot write " + path.string());
        }

        auto edge_text(const Graph &g) -> string
        {
            string out;
            for (auto [u, v] : g.edges())
                out += (out.empty() ? "" : ", ") + std::to_string(u) + "-" + std::to_string(v);
            return out.empty() ? "(none)" : out;
        }

        auto edges_json(const Graph &g) -> ordered_json
        {
            auto edges = ordered_json::array();
            for (auto [u, v] : g.edges())
                edges.push_back({u, v});
            return edges;
        }

        auto values_json(const Signature &s) -> ordered_json
        {
            auto values = ordered_json::array();
            for (auto v : s.values())
                values.push_back(v);
            return values;
        }

        auto graph_json(const Graph &g) -> ordered_json
        {
            ordered_json j;
            j["vertices"] = g.size();
            j["edgeCount"] = g.edge_count();
            j["graph6"] = to_graph6(g);
            j["edges"] = edges_json(g);
            return j;
        }

        auto print_graph(std::ostream &out, const Graph &g) -> void
        {
            out << "vertices: " << g.size() << "\n";
            out << "edge count: " << g.edge_count() << "\n";
            out << "edges: " << edge_text(g) << "\n";
        }

        auto cmd_realize(const string &signature_text, const string &dot, bool graph6, bool json, std::ostream &out) -> int
        {
            auto signature = parse_signature(signature_text);
            auto r = realize(signature);
            if (! dot.empty())
                write_file(dot, to_dot(r.graph, r.signature));
            string echo = "autograph realize --signature " + quote(to_string(signature)) + (graph6 ? " --graph6" : "") +
                (dot.empty() ? "" : " --dot " + quote(dot));
            if (json) {
                ordered_json j;
                j["command"] = echo;
                j["signature"] = values_json(signature);
                j["graph"] = graph_json(r.graph);
                out << j.dump(2) << "\n";
                return exit_ok;
            }
            out << "# " << echo << "\n";
            out << "values: " << to_string(signature) << "\n";
            print_graph(out, r.graph);
            if (graph6)
                out << "graph6: " << to_graph6(r.graph) << "\n";
            return exit_ok;
        }

        auto cmd_family(const string &name, const string &dot, bool json, std::ostream &out) -> int
        {
            auto member = make_family(name);
            if (! dot.empty())
                write_file(dot, to_dot(member.graph, member.signature));
            string echo = "autograph family --name " + quote(name) + (dot.empty() ? "" : " --dot " + quote(dot));
            if (json) {
                ordered_json j;
                j["command"] = echo;
                j["name"] = member.name;
                j["signature"] = member.signature ? values_json(*member.signature) : ordered_json(nullptr);
                j["graph"] = graph_json(member.graph);
                out << j.dump(2) << "\n";
                return exit_ok;
            }
            out << "# " << echo << "\n";
            out << "family: " << member.name << "\n";
            if (member.signature)
                out << "values: " << to_string(*member.signature) << "\n";
            print_graph(out, member.graph);
            out << "graph6: " << to_graph6(member.graph) << "\n";
            return exit_ok;
        }

        auto counters_json(const SearchCounters &c) -> ordered_json
        {
            ordered_json j;
            j["enumerated"] = c.enumerated;
            j["prunedNegativeCount"] = c.pruned_negative_count;
            j["prunedZero"] = c.pruned_zero;
            j["prunedScaled"] = c.pruned_scaled;
            j["realized"] = c.realized;
            j["degreeRejected"] = c.degree_rejected;
            j["isomorphismTests"] = c.isomorphism_tests;
            return j;
        }

        auto cmd_search(const SearchFlags &flags, bool json, std::ostream &out) -> int
        {
            auto config = to_config(flags);
            auto target = resolve_target(flags.target);
            string echo = "autograph search --target " + quote(flags.target) + search_echo(config);
            auto result = search_signature(target, config);
            if (json) {
                ordered_json j;
                j["command"] = echo;
                j["config"] = to_json(config);
                j["target"] = graph_json(target);
                j["signature"] = result.signature ? values_json(*result.signature) : ordered_json(nullptr);
                j["counters"] = counters_json(result.counters);
                j["wallClockSeconds"] = result.wall_clock_seconds;
                out << j.dump(2) << "\n";
            } else {
                out << "# " << echo << "\n";
                out << "target: " << to_graph6(target) << " (" << target.size() << " vertices, " << target.edge_count() << " edges)\n";
                if (result.signature)
                    out << "signature: " << to_string(*result.signature) << "\n";
                else
                    out << "none within bound\n";
                out << "candidates: " << result.counters.enumerated << " enumerated, " << result.counters.pruned() << " pruned, "
                    << result.counters.realized << " realized\n";
            }
            return result.signature ? exit_ok : exit_not_found;
        }

        auto cmd_absence(const SearchFlags &flags, bool json, std::ostream &out) -> int
        {
            auto config = to_config(flags);
            auto target = resolve_target(flags.target);
            string echo = "autograph absence --target " + quote(flags.target) + search_echo(config);
            auto report = certify_absence(target, config);
            auto j = to_json(report);
            if (json) {
                ordered_json wrapped;
                wrapped["command"] = echo;
                wrapped["report"] = j;
                out << wrapped.dump(2) << "\n";
            } else {
                out << "# " << echo << "\n";
                out << j.dump(2) << "\n";
                if (report.match_count == 0 && report.exhaustive)
                    out << "absence certified: no signature within [-" << config.bound << ", " << config.bound << "]\n";
                else if (report.match_count > 0)
                    out << "MATCH FOUND: " << to_string(report.matches.front()) << "\n";
            }
            if (report.match_count > 0)
                return exit_violation;
            return report.exhaustive ? exit_ok : exit_violation;
        }

        auto cmd_verify(const string &suite, std::uint64_t seed, std::uint64_t samples, bool json, std::ostream &out) -> int
        {
            string echo = "autograph verify-lemmas --suite " + suite + " --seed " + std::to_string(seed) + " --samples " + std::to_string(samples);
            auto report = run_verification(suite, seed, samples);
            if (json) {
                ordered_json j;
                j["command"] = echo;
                j["report"] = to_json(report);
                out << j.dump(2) << "\n";
            } else {
                out << "# " << echo << "\n";
                out << to_text(report);
            }
            return report.gating_violations() == 0 ? exit_ok : exit_violation;
        }

        auto cmd_enumerate(int max_n, const SearchFlags &flags, const string &catalog, bool resume, bool allow_seven, bool json, std::ostream &out,
            std::ostream &err) -> int
        {
            CatalogOptions options;
            options.max_n = max_n;
            options.config = to_config(flags);
            options.output = catalog;
            options.resume = resume;
            options.allow_seven = allow_seven;
            if (! json)
                options.on_entry = [&err](const CatalogEntry &e) {
                    err << e.graph6 << " " << (e.found ? to_string(*e.signature) : string("not found")) << "\n";
                };
            string echo = "autograph enumerate --max-n " + std::to_string(max_n) + search_echo(options.config) + " --catalog " + quote(catalog) +
                (resume ? " --resume" : "") + (allow_seven ? " --allow-seven" : "");
            auto summary = build_catalog(options);
            if (json) {
                ordered_json j;
                j["command"] = echo;
                j["config"] = to_json(options.config);
                j["configDigest"] = config_digest(options.config);
                auto rows = ordered_json::array();
                for (const auto &row : summary.rows)
                    rows.push_back({{"n", row.vertices}, {"classes", row.classes}, {"found", row.found}, {"notFound", row.not_found}});
                j["rows"] = rows;
                j["notFound"] = summary.not_found;
                j["m6Found"] = summary.m6_found ? ordered_json(*summary.m6_found) : ordered_json(nullptr);
                j["reused"] = summary.reused;
                j["searched"] = summary.searched;
                out << j.dump(2) << "\n";
            } else {
                out << "# " << echo << "\n";
                out << "# config digest " << config_digest(options.config) << "\n";
                out << summary_table(summary);
                for (const auto &g6 : summary.not_found)
                    out << "not found within bound: " << g6 << "\n";
                out << "reused " << summary.reused << ", searched " << summary.searched << "\n";
            }
            return exit_ok;
        }
    }

    auto resolve_target(std::string_view text) -> Graph
    {
        if (looks_like_family_spec(text))
            return make_family(text).graph;
        std::filesystem::path path{string(text)};
        std::error_code ec;
        if (std::filesystem::is_regular_file(path, ec)) {
            auto content = read_file(path);
            if (content.find('{') != string::npos)
                return parse_dot(content).graph;
            auto first = content.substr(0, content.find('\n'));
            while (! first.empty() && (first.back() == '\r' || first.back() == ' '))
                first.pop_back();
            if (first.find(' ') == string::npos && ! first.empty() && first.front() != '#') {
                try {
                    return from_graph6(first);
                } catch (const std::invalid_argument &) {
                    // a lone vertex count line; fall through to the edge list reader
                }
            }
            return parse_edge_list(content);
        }
        return from_graph6(text);
    }

    auto run(const std::vector<string> &args, std::ostream &out, std::ostream &err) -> int
    {
        CLI::App app{"Autograph signature realization and search", "autograph"};
        app.require_subcommand(1);
        bool json = false;

        string signature_text, dot;
        bool graph6 = false;
        auto *realize_cmd = app.add_subcommand("realize", "build the graph of a signature");
        realize_cmd->add_option("--signature", signature_text, "comma-separated values")->required();
        realize_cmd->add_option("--dot", dot, "write Graphviz DOT to FILE");
        realize_cmd->add_flag("--graph6", graph6, "also print graph6");
        realize_cmd->add_flag("--json", json, "JSON output");

        SearchFlags search_flags;
        auto *search_cmd = app.add_subcommand("search", "find the first signature of a graph");
        search_cmd->add_option("--target", search_flags.target, "graph6, file or family spec")->required();
        add_search_flags(search_cmd, search_flags);
        search_cmd->add_flag("--json", json, "JSON output");

        string family_name, family_dot;
        auto *family_cmd = app.add_subcommand("family", "construct a named graph");
        family_cmd->add_option("--name", family_name, "m6, gn:N, kn:N, path:N, cycle:N, empty:N, ap:t,s,n[,del=i,j], complement:SPEC")->required();
        family_cmd->add_option("--dot", family_dot, "write Graphviz DOT to FILE");
        family_cmd->add_flag("--json", json, "JSON output");

        string suite = "all";
        std::uint64_t seed = 1, samples = 10'000;
        auto *verify_cmd = app.add_subcommand("verify-lemmas", "check the lemma suite against brute force");
        verify_cmd->add_option("--suite", suite, "suite name")->check(CLI::IsMember({"all", "deletion", "structure", "maxelem", "m6", "gn"}));
        verify_cmd->add_option("--seed", seed, "sampler seed");
        verify_cmd->add_option("--samples", samples, "random monographs");
        verify_cmd->add_flag("--json", json, "JSON output");

        int max_n = 6;
        string catalog;
        bool resume = false, allow_seven = false;
        SearchFlags enumerate_flags;
        auto *enumerate_cmd = app.add_subcommand("enumerate", "search every small graph class");
        enumerate_cmd->add_option("--max-n", max_n, "largest order")->check(CLI::Range(1, 7));
        enumerate_cmd->add_option("--catalog", catalog, "JSON-lines output")->required();
        enumerate_cmd->add_flag("--resume", resume, "reuse matching entries");
        enumerate_cmd->add_flag("--allow-seven", allow_seven, "permit --max-n 7");
        add_search_flags(enumerate_cmd, enumerate_flags);
        enumerate_cmd->add_flag("--json", json, "JSON output");

        SearchFlags absence_flags;
        auto *absence_cmd = app.add_subcommand("absence", "certify no signature within a bound");
        absence_cmd->add_option("--target", absence_flags.target, "graph6, file or family spec")->required();
        add_search_flags(absence_cmd, absence_flags);
        absence_cmd->add_flag("--json", json, "JSON output");

        try {
            std::vector<string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        } catch (const CLI::ParseError &e) {
            int code = app.exit(e, out, err);
            return code == 0 ? exit_ok : exit_usage;
        }

        try {
            if (*realize_cmd)
                return cmd_realize(signature_text, dot, graph6, json, out);
            if (*family_cmd)
                return cmd_family(family_name, family_dot, json, out);
            if (*search_cmd)
                return cmd_search(search_flags, json, out);
            if (*absence_cmd)
                return cmd_absence(absence_flags, json, out);
            if (*verify_cmd)
                return cmd_verify(suite, seed, samples, json, out);
            if (*enumerate_cmd)
                return cmd_enumerate(max_n, enumerate_flags, catalog, resume, allow_seven, json, out, err);
        } catch (const InfeasibleSearch &e) {
            err << "error: " << e.what() << "\n";
            return exit_infeasible;
        } catch (const std::exception &e) {
            err << "error: " << e.what() << "\n";
            return exit_usage;
        }
        return exit_usage;
    }
}

#include <autograph/analysis.hpp>
#include <autograph/atlas.hpp>
#include <autograph/families.hpp>
#include <autograph/graph_io.hpp>
#include <autograph/realize.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

using std::string;
using std::vector;

namespace autograph
{
    namespace
    {
        auto check_atlas_size(int n) -> void
        {
            if (n < 1 || n > max_atlas_vertices)
                throw std::invalid_argument("atlas supports 1..7 vertices, got " + std::to_string(n));
        }

        auto utc_timestamp() -> string
        {
            auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
            std::tm tm{};
            gmtime_r(&now, &tm);
            char buffer[32];
            std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
            return buffer;
        }

        auto entry_order(const CatalogEntry &a, const CatalogEntry &b) -> bool
        {
            return std::tie(a.vertices, a.graph6) < std::tie(b.vertices, b.graph6);
        }
    }

    auto enumerate_graphs(int n) -> vector<Graph>
    {
        check_atlas_size(n);
        if (n == 1)
            return {Graph(1)};

        std::map<AdjacencyKey, Graph> classes;
        for (const auto &smaller : enumerate_graphs(n - 1)) {
            for (VertexMask attach = 0; attach < (VertexMask{1} << (n - 1)); ++attach) {
                Graph g(n);
                for (auto [u, v] : smaller.edges())
                    g.add_edge(u, v);
                for (int u = 0; u < n - 1; ++u)
                    if ((attach >> u) & 1U)
                        g.add_edge(u, n - 1);
                auto form = canonical_form(g);
                if (! classes.contains(form.key))
                    classes.emplace(form.key, g.relabel(form.order));
            }
        }

        vector<Graph> out;
        out.reserve(classes.size());
        for (auto &[key, g] : classes)
            out.push_back(std::move(g));
        return out;
    }

    auto census_count(int n) -> std::uint64_t
    {
        check_atlas_size(n);
        vector<std::pair<int, int>> slots;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                slots.emplace_back(i, j);

        std::set<AdjacencyKey> keys;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
            Graph g(n);
            for (std::size_t b = 0; b < slots.size(); ++b)
                if ((bits >> b) & 1U)
                    g.add_edge(slots[b].first, slots[b].second);
            keys.insert(canonical_form(g).key);
        }
        return keys.size();
    }

    auto config_digest(const SearchConfig &config) -> string
    {
        std::uint64_t h = 14695981039346656037ULL;
        for (unsigned char c : describe(config)) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        static constexpr char hex[] = "0123456789abcdef";
        string out(16, '0');
        for (int k = 15; k >= 0; --k, h >>= 4)
            out[static_cast<std::size_t>(k)] = hex[h & 15U];
        return out;
    }

    auto to_json(const CatalogEntry &e) -> nlohmann::ordered_json
    {
        nlohmann::ordered_json j;
        j["graph6"] = e.graph6;
        j["n"] = e.vertices;
        j["edges"] = e.edges;
        j["status"] = e.found ? "found" : "not-found-within-bound";
        if (e.signature)
            j["signature"] = vector<Value>(e.signature->values().begin(), e.signature->values().end());
        else
            j["signature"] = nullptr;
        j["bound"] = e.bound;
        j["configDigest"] = e.config_digest;
        j["timestamp"] = e.timestamp;
        return j;
    }

    auto catalog_entry_from_json(const nlohmann::json &j) -> CatalogEntry
    {
        try {
            CatalogEntry e;
            e.graph6 = j.at("graph6").get<string>();
            e.vertices = j.at("n").get<int>();
            e.edges = j.at("edges").get<int>();
            auto status = j.at("status").get<string>();
            if (status != "found" && status != "not-found-within-bound")
                throw std::invalid_argument("unknown catalog status '" + status + "'");
            e.found = status == "found";
            if (! j.at("signature").is_null())
                e.signature = Signature{j.at("signature").get<vector<Value>>()};
            e.bound = j.at("bound").get<Value>();
            e.config_digest = j.at("configDigest").get<string>();
            e.timestamp = j.at("timestamp").get<string>();
            if (e.found != e.signature.has_value())
                throw std::invalid_argument("catalog status and signature disagree");
            return e;
        }
        catch (const nlohmann::json::exception &ex) {
            throw std::invalid_argument(string("malformed catalog entry: ") + ex.what());
        }
    }

    auto verify_entry(const CatalogEntry &e) -> bool
    {
        try {
            auto g = from_graph6(e.graph6);
            if (g.size() != e.vertices || g.edge_count() != e.edges)
                return false;
            if (canonical_graph6(g) != e.graph6)
                return false;
            if (e.signature) {
                auto r = realize(*e.signature);
                if (! is_isomorphic(r.graph, g))
                    return false;
            }
            return true;
        }
        catch (const std::exception &) {
            return false;
        }
    }

    auto load_catalog(const std::filesystem::path &path) -> vector<CatalogEntry>
    {
        vector<CatalogEntry> entries;
        std::ifstream in(path);
        string line;
        while (std::getline(in, line)) {
            if (line.empty())
                continue;
            try {
                entries.push_back(catalog_entry_from_json(nlohmann::json::parse(line)));
            }
            catch (const std::exception &) {
                continue;
            }
        }
        return entries;
    }

    auto build_catalog(const CatalogOptions &options) -> CatalogSummary
    {
        check_atlas_size(options.max_n);
        if (options.max_n == max_atlas_vertices && ! options.allow_seven)
            throw std::invalid_argument("7-vertex catalogs must be enabled explicitly");
        validate(options.config);

        auto digest = config_digest(options.config);
        std::map<string, CatalogEntry> kept;
        CatalogSummary summary;
        if (options.resume && std::filesystem::exists(options.output))
            for (auto &e : load_catalog(options.output))
                if (e.config_digest == digest && e.vertices <= options.max_n && verify_entry(e))
                    kept.emplace(e.graph6, std::move(e));

        // Rewrite the reusable entries first so the file is valid at every point.
        {
            std::ofstream out(options.output, std::ios::trunc);
            if (! out)
                throw std::runtime_error("cannot write catalog " + options.output.string());
            vector<CatalogEntry> sorted;
            for (const auto &[g6, e] : kept)
                sorted.push_back(e);
            std::sort(sorted.begin(), sorted.end(), entry_order);
            for (const auto &e : sorted)
                out << to_json(e).dump() << '\n';
        }

        std::ofstream append(options.output, std::ios::app);
        if (! append)
            throw std::runtime_error("cannot append to catalog " + options.output.string());

        vector<CatalogEntry> all;
        auto m6_key = canonical_graph6(m6_graph());
        for (int n = 1; n <= options.max_n; ++n) {
            CatalogRow row;
            row.vertices = n;
            for (const auto &g : enumerate_graphs(n)) {
                auto g6 = to_graph6(g);
                CatalogEntry entry;
                if (auto it = kept.find(g6); it != kept.end()) {
                    entry = it->second;
                    ++summary.reused;
                }
                else {
                    entry.graph6 = g6;
                    entry.vertices = n;
                    entry.edges = g.edge_count();
                    entry.signature = find_signature(g, options.config);
                    entry.found = entry.signature.has_value();
                    entry.bound = options.config.bound;
                    entry.config_digest = digest;
                    entry.timestamp = utc_timestamp();
                    append << to_json(entry).dump() << '\n';
                    append.flush();
                    ++summary.searched;
                }
                if (options.on_entry)
                    options.on_entry(entry);

                ++row.classes;
                if (entry.found)
                    ++row.found;
                else {
                    ++row.not_found;
                    summary.not_found.push_back(g6);
                }
                if (g6 == m6_key)
                    summary.m6_found = entry.found;
                all.push_back(std::move(entry));
            }
            summary.rows.push_back(row);
        }
        append.close();

        std::sort(all.begin(), all.end(), entry_order);
        auto staging = options.output;
        staging += ".tmp";
        {
            std::ofstream out(staging, std::ios::trunc);
            for (const auto &e : all)
                out << to_json(e).dump() << '\n';
            if (! out)
                throw std::runtime_error("cannot write catalog " + staging.string());
        }
        std::filesystem::rename(staging, options.output);
        return summary;
    }

    auto summary_table(const CatalogSummary &summary) -> string
    {
        string out = "   n  classes    found  not-found\n";
        char line[64];
        for (const auto &row : summary.rows) {
            std::snprintf(line, sizeof(line), "%4d %8d %8d %10d\n", row.vertices, row.classes, row.found, row.not_found);
            out += line;
        }
        return out;
    }
}

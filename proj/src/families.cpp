#include <autograph/analysis.hpp>
#include <autograph/families.hpp>
#include <autograph/realize.hpp>

#include <algorithm>
#include <charconv>
#include <stdexcept>

using std::string;
using std::string_view;
using std::vector;

namespace autograph
{
    auto complete_graph(int n) -> Graph
    {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                g.add_edge(u, v);
        return g;
    }

    auto empty_graph(int n) -> Graph
    {
        return Graph(n);
    }

    auto path_graph(int n) -> Graph
    {
        if (n < 1)
            throw std::invalid_argument("path needs at least one vertex");
        Graph g(n);
        for (int v = 0; v + 1 < n; ++v)
            g.add_edge(v, v + 1);
        return g;
    }

    auto cycle_graph(int n) -> Graph
    {
        if (n < 3)
            throw std::invalid_argument("cycle needs at least three vertices");
        auto g = path_graph(n);
        g.add_edge(n - 1, 0);
        return g;
    }

    auto m6_graph() -> Graph
    {
        Graph two_paths(6);
        two_paths.add_edge(0, 1);
        two_paths.add_edge(1, 2);
        two_paths.add_edge(3, 4);
        two_paths.add_edge(4, 5);
        return complement(two_paths);
    }

    auto gn_graph(int n) -> Graph
    {
        if (n < 8 || n % 2 != 0)
            throw std::invalid_argument("G_n needs even n >= 8, got " + std::to_string(n));
        int half = n / 2;
        Graph cycles(n);
        for (int k = 0; k < half; ++k) {
            cycles.add_edge(k, (k + 1) % half);
            cycles.add_edge(half + k, half + (k + 1) % half);
        }
        return complement(cycles);
    }

    auto expand_ap(const APSignature &ap) -> Signature
    {
        if (ap.step < 1)
            throw std::invalid_argument("progression step must be positive");
        if (ap.length < 1 || ap.length > max_graph_vertices + 64)
            throw std::invalid_argument("progression length out of range");

        vector<bool> deleted(static_cast<std::size_t>(ap.length) + 1, false);
        for (int i : ap.deletions) {
            if (i < 1 || i > ap.length)
                throw std::invalid_argument("deleted position " + std::to_string(i) + " outside 1.." + std::to_string(ap.length));
            if (deleted[i])
                throw std::invalid_argument("position " + std::to_string(i) + " deleted twice");
            deleted[i] = true;
        }

        vector<Value> values;
        for (int i = 1; i <= ap.length; ++i)
            if (! deleted[i]) {
                Value term{}, value{};
                if (__builtin_add_overflow(ap.start, Value{i - 1}, &term) || __builtin_mul_overflow(term, ap.step, &value))
                    throw std::overflow_error("progression value overflows");
                values.push_back(value);
            }
        if (values.empty())
            throw std::invalid_argument("every position of the progression was deleted");
        return Signature{std::move(values)};
    }

    namespace
    {
        auto to_int(string_view s) -> long long
        {
            long long v{};
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
                throw std::invalid_argument("bad integer '" + string(s) + "' in family spec");
            return v;
        }

        auto split(string_view s, char sep) -> vector<string_view>
        {
            vector<string_view> parts;
            std::size_t start = 0;
            while (true) {
                auto at = s.find(sep, start);
                parts.push_back(s.substr(start, at == string_view::npos ? string_view::npos : at - start));
                if (at == string_view::npos)
                    break;
                start = at + 1;
            }
            return parts;
        }

        auto size_param(string_view arg) -> int
        {
            auto v = to_int(arg);
            if (v < 0 || v > max_graph_vertices)
                throw std::invalid_argument("family size " + string(arg) + " out of range");
            return static_cast<int>(v);
        }

        auto parse_ap(string_view arg) -> APSignature
        {
            APSignature ap;
            auto del_at = arg.find("del=");
            auto head = arg.substr(0, del_at);
            if (head.ends_with(','))
                head.remove_suffix(1);
            auto fields = split(head, ',');
            if (fields.size() != 3)
                throw std::invalid_argument("ap spec needs t,s,n");
            ap.start = to_int(fields[0]);
            ap.step = to_int(fields[1]);
            auto len = to_int(fields[2]);
            if (len < 1 || len > 128)
                throw std::invalid_argument("ap length out of range");
            ap.length = static_cast<int>(len);
            if (del_at != string_view::npos)
                for (auto d : split(arg.substr(del_at + 4), ','))
                    ap.deletions.push_back(static_cast<int>(to_int(d)));
            std::sort(ap.deletions.begin(), ap.deletions.end());
            return ap;
        }
    }

    auto looks_like_family_spec(string_view spec) -> bool
    {
        if (spec == "m6")
            return true;
        for (string_view prefix : {"kn:", "empty:", "path:", "cycle:", "gn:", "ap:", "complement:"})
            if (spec.starts_with(prefix))
                return true;
        return false;
    }

    auto make_family(string_view spec) -> FamilyMember
    {
        auto colon = spec.find(':');
        auto name = spec.substr(0, colon);
        auto arg = colon == string_view::npos ? string_view{} : spec.substr(colon + 1);
        auto need_arg = [&]() {
            if (colon == string_view::npos)
                throw std::invalid_argument("family '" + string(name) + "' needs a parameter");
        };

        if (name == "m6" && colon == string_view::npos)
            return {"m6", m6_graph(), std::nullopt};
        if (name == "kn") {
            need_arg();
            return {string(spec), complete_graph(size_param(arg)), std::nullopt};
        }
        if (name == "empty") {
            need_arg();
            return {string(spec), empty_graph(size_param(arg)), std::nullopt};
        }
        if (name == "path") {
            need_arg();
            return {string(spec), path_graph(size_param(arg)), std::nullopt};
        }
        if (name == "cycle") {
            need_arg();
            return {string(spec), cycle_graph(size_param(arg)), std::nullopt};
        }
        if (name == "gn") {
            need_arg();
            return {string(spec), gn_graph(size_param(arg)), std::nullopt};
        }
        if (name == "ap") {
            need_arg();
            auto signature = expand_ap(parse_ap(arg));
            auto r = realize(signature);
            return {string(spec), std::move(r.graph), std::move(r.signature)};
        }
        if (name == "complement") {
            need_arg();
            auto inner = make_family(arg);
            return {string(spec), complement(inner.graph), std::nullopt};
        }
        throw std::invalid_argument("unknown family spec '" + string(spec) + "'");
    }
}

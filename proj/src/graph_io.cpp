#include <autograph/analysis.hpp>
#include <autograph/graph_io.hpp>

#include <algorithm>
#include <charconv>
#include <map>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <vector>

using std::string;
using std::string_view;

namespace autograph
{
    auto to_graph6(const Graph &g) -> string
    {
        int n = g.size();
        string out;
        if (n <= 62) {
            out += static_cast<char>(n + 63);
        }
        else {
            out += static_cast<char>(126);
            for (int shift = 12; shift >= 0; shift -= 6)
                out += static_cast<char>(((n >> shift) & 63) + 63);
        }

        int group = 0, filled = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
                if (++filled == 6) {
                    out += static_cast<char>(group + 63);
                    group = filled = 0;
                }
            }
        if (filled != 0)
            out += static_cast<char>((group << (6 - filled)) + 63);
        return out;
    }

    auto from_graph6(string_view text) -> Graph
    {
        if (text.starts_with(">>graph6<<"))
            text.remove_prefix(10);
        while (! text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
            text.remove_suffix(1);
        if (text.empty())
            throw std::invalid_argument("empty graph6 string");
        for (char c : text)
            if (c < 63 || c > 126)
                throw std::invalid_argument("graph6 byte out of range 63..126");

        int n = 0;
        std::size_t pos = 0;
        if (text[0] != 126) {
            n = text[0] - 63;
            pos = 1;
        }
        else {
            if (text.size() < 4 || text[1] == 126)
                throw std::invalid_argument("graph6 size header unsupported");
            for (std::size_t k = 1; k <= 3; ++k)
                n = (n << 6) | (text[k] - 63);
            pos = 4;
        }
        if (n > max_graph_vertices)
            throw std::invalid_argument("graph6 graph has more than 64 vertices");

        std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
        std::size_t expected = (bits + 5) / 6;
        if (text.size() - pos != expected)
            throw std::invalid_argument("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " + std::to_string(expected));

        Graph g(n);
        std::size_t b = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++b) {
                int byte = text[pos + b / 6] - 63;
                if ((byte >> (5 - b % 6)) & 1)
                    g.add_edge(i, j);
            }
        if (bits % 6 != 0) {
            int last = text.back() - 63;
            if ((last & ((1 << (6 - bits % 6)) - 1)) != 0)
                throw std::invalid_argument("graph6 padding bits are not zero");
        }
        return g;
    }

    auto canonical_graph6(const Graph &g) -> string
    {
        return to_graph6(canonical_graph(g));
    }

    auto parse_edge_list(string_view text) -> Graph
    {
        std::vector<std::pair<int, int>> edges;
        int declared = -1, largest = -1;
        std::istringstream in{string(text)};
        string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (auto hash = line.find('#'); hash != string::npos)
                line.erase(hash);
            std::istringstream fields(line);
            std::vector<long> numbers;
            string token;
            while (fields >> token) {
                long v{};
                auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
                if (ec != std::errc{} || ptr != token.data() + token.size() || v < 0 || v >= max_graph_vertices + 1)
                    throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": bad token '" + token + "'");
                numbers.push_back(v);
            }
            if (numbers.empty())
                continue;
            if (numbers.size() == 1) {
                declared = static_cast<int>(numbers[0]);
            }
            else if (numbers.size() == 2) {
                edges.emplace_back(static_cast<int>(numbers[0]), static_cast<int>(numbers[1]));
                largest = std::max({largest, edges.back().first, edges.back().second});
            }
            else
                throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": expected 'u v'");
        }

        int n = declared >= 0 ? declared : largest + 1;
        if (largest >= n)
            throw std::invalid_argument("edge list uses vertex " + std::to_string(largest) + " but declares " + std::to_string(n) + " vertices");
        Graph g(n);
        for (auto [u, v] : edges)
            g.add_edge(u, v);
        return g;
    }

    auto to_edge_list(const Graph &g) -> string
    {
        string out = std::to_string(g.size()) + "\n";
        for (auto [u, v] : g.edges())
            out += std::to_string(u) + " " + std::to_string(v) + "\n";
        return out;
    }

    auto to_dot(const Graph &g, const std::optional<Signature> &labels) -> string
    {
        if (labels && static_cast<int>(labels->size()) != g.size())
            throw std::invalid_argument("label count does not match graph size");
        string out = "graph G {\n";
        for (int v = 0; v < g.size(); ++v) {
            auto label = labels ? std::to_string((*labels)[static_cast<std::size_t>(v)]) : std::to_string(v);
            out += "  " + std::to_string(v) + " [label=\"" + label + "\"];\n";
        }
        for (auto [u, v] : g.edges())
            out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
        out += "}\n";
        return out;
    }

    auto parse_dot(std::string_view text) -> DotGraph
    {
        static const std::regex node_re(R"re(^\s*(\d+)\s*(\[\s*label\s*=\s*"([^"]*)"\s*\])?\s*;?\s*$)re");
        static const std::regex edge_re(R"(^\s*(\d+)\s*--\s*(\d+)\s*;?\s*$)");
        std::map<int, string> labels;
        std::vector<std::pair<int, int>> edges;
        int n = 0;
        bool opened = false;
        std::istringstream in{string(text)};
        for (string line; std::getline(in, line);) {
            std::smatch m;
            if (line.find('{') != string::npos) {
                opened = true;
                continue;
            }
            if (line.find_first_not_of(" \t\r}") == string::npos)
                continue;
            if (std::regex_match(line, m, edge_re)) {
                int u = std::stoi(m[1]), v = std::stoi(m[2]);
                edges.emplace_back(u, v);
                n = std::max({n, u + 1, v + 1});
            } else if (std::regex_match(line, m, node_re)) {
                int v = std::stoi(m[1]);
                labels[v] = m[3].matched ? m[3].str() : string();
                n = std::max(n, v + 1);
            } else {
                throw std::invalid_argument("unsupported DOT line: " + line);
            }
        }
        if (! opened)
            throw std::invalid_argument("DOT input has no graph body");
        if (n > max_graph_vertices)
            throw std::invalid_argument("DOT graph has too many vertices");
        DotGraph out{Graph(n), std::vector<string>(static_cast<std::size_t>(n))};
        for (auto [u, v] : edges)
            out.graph.add_edge(u, v);
        for (auto &[v, label] : labels)
            out.labels[static_cast<std::size_t>(v)] = label;
        return out;
    }
}

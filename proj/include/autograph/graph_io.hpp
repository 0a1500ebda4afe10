#pragma once

#include <autograph/graph.hpp>
#include <autograph/signature.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace autograph
{
    /// Standard graph6 encoding. Sizes up to 62 use a one-byte header (n + 63);
    /// 63 and 64 use the four-byte 126-prefixed form.
    auto to_graph6(const Graph &g) -> std::string;

    /// Accepts an optional ">>graph6<<" header and trailing newline.
    /// Throws std::invalid_argument on malformed input.
    auto from_graph6(std::string_view text) -> Graph;

    /// graph6 of the canonically relabelled graph.
    auto canonical_graph6(const Graph &g) -> std::string;

    /// "u v" per line. '#' starts a comment; a line holding a single integer
    /// declares the vertex count. Otherwise n is one more than the largest index.
    auto parse_edge_list(std::string_view text) -> Graph;

    auto to_edge_list(const Graph &g) -> std::string;

    /// Graphviz DOT. When a signature is given, vertices are labelled with their
    /// values; otherwise with their indices.
    auto to_dot(const Graph &g, const std::optional<Signature> &labels = std::nullopt) -> std::string;

    struct DotGraph
    {
        Graph graph;
        std::vector<std::string> labels;   // empty string when a node has none
    };

    /// Reads the subset of DOT written by to_dot: numeric node ids, optional
    /// label attributes and "u -- v" edges.
    auto parse_dot(std::string_view text) -> DotGraph;
}

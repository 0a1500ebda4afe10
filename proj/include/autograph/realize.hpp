#pragma once

#include <autograph/graph.hpp>
#include <autograph/signature.hpp>

#include <cstddef>
#include <vector>

namespace autograph
{
    /// A signature together with the graph it induces. Vertex i carries
    /// signature[i]; vertices i != j are adjacent iff |s_i - s_j| occurs in
    /// the signature.
    struct Realization
    {
        Signature signature;
        Graph graph;
    };

    auto realize(const Signature &signature) -> Realization;

    /// Recomputes every pair of r from the edge rule; true when all agree.
    auto realization_consistent(const Realization &r) -> bool;

    /// D(s) for the value at a given position: |s - t| over every other position.
    struct DifferenceMultiset
    {
        Value center;
        std::vector<Value> diffs;       // n - 1 entries, position order
        std::vector<Value> distinct;    // sorted, deduplicated
        int in_signature = 0;           // entries (with multiplicity) occurring in S; equals the degree
    };

    /// Throws std::out_of_range for a bad index.
    auto difference_multiset(const Signature &signature, std::size_t index) -> DifferenceMultiset;
}

#pragma once

#include <autograph/graph.hpp>
#include <autograph/signature.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace autograph
{
    auto complete_graph(int n) -> Graph;
    auto empty_graph(int n) -> Graph;
    auto path_graph(int n) -> Graph;

    /// Throws for n < 3.
    auto cycle_graph(int n) -> Graph;

    /// Complement of two disjoint 3-vertex paths 0-1-2 and 3-4-5:
    /// 6 vertices, 11 edges.
    auto m6_graph() -> Graph;

    /// Complement of two disjoint n/2-cycles on 0..n/2-1 and n/2..n-1.
    /// Throws for odd n or n < 8.
    auto gn_graph(int n) -> Graph;

    /// The progression {t*s, (t+1)*s, ..., (t+n-1)*s} minus the listed
    /// 1-based positions; position i carries (t+i-1)*s.
    struct APSignature
    {
        Value start = 1;
        Value step = 1;
        int length = 1;
        std::vector<int> deletions;
    };

    /// Throws std::invalid_argument on a non-positive step, a bad length,
    /// repeated or out-of-range deletions, or when nothing is left.
    auto expand_ap(const APSignature &ap) -> Signature;

    /// A constructed family member. Graphs built from signatures carry them.
    struct FamilyMember
    {
        std::string name;
        Graph graph;
        std::optional<Signature> signature;
    };

    /// Family spec strings: "kn:5", "empty:4", "path:4", "cycle:6", "m6",
    /// "gn:10", "ap:t,s,n[,del=i,j,...]", "complement:<spec>".
    auto make_family(std::string_view spec) -> FamilyMember;

    /// True when spec parses as a family spec name (without validating parameters).
    auto looks_like_family_spec(std::string_view spec) -> bool;
}

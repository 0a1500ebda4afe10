#pragma once

#include <autograph/graph.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace autograph::cli
{
    enum ExitCode : int
    {
        exit_ok = 0,
        exit_violation = 1,   // lemma violation, or a match in an absence run
        exit_usage = 2,
        exit_infeasible = 3,  // candidate space above the configured ceiling
        exit_not_found = 4    // search finished without a signature
    };

    /// Family spec, graph6 string, or a file holding graph6, DOT or an edge list.
    auto resolve_target(std::string_view text) -> Graph;

    /// args excludes the program name.
    auto run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) -> int;
}

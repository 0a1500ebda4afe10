#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace autograph
{
    struct Counterexample
    {
        std::string signature;
        std::string detail;
    };

    struct CheckSummary
    {
        std::string name;
        std::uint64_t cases = 0;
        std::uint64_t applicable = 0;
        std::uint64_t violations = 0;
        std::vector<Counterexample> counterexamples;   // first few only
        bool informational = false;                    // never fails a run

        auto record(std::string signature, std::string detail) -> void;
    };

    struct VerificationReport
    {
        std::string suite;
        std::uint64_t seed = 0;
        std::uint64_t samples = 0;
        std::vector<CheckSummary> checks;

        auto gating_violations() const -> std::uint64_t;
        auto find(std::string_view name) const -> const CheckSummary *;
    };

    /// Suites: all, deletion, structure, maxelem, m6, gn.
    /// Throws std::invalid_argument for an unknown suite.
    auto run_verification(std::string_view suite, std::uint64_t seed, std::uint64_t samples) -> VerificationReport;

    // Individual sweeps, also used directly by the acceptance suite.
    auto verify_one_deletion_formula(int min_n, int max_n) -> CheckSummary;
    auto verify_two_deletion_formula(int min_n, int max_n) -> CheckSummary;
    auto verify_one_deletion_lemma(int min_n, int max_n) -> CheckSummary;
    auto verify_two_deletion_lemma(int min_n, int max_n) -> CheckSummary;
    auto verify_random_monographs(std::uint64_t seed, std::uint64_t samples) -> std::vector<CheckSummary>;
    auto verify_m6_structure() -> CheckSummary;
    auto verify_m6_ap5_sweep(int value_limit) -> CheckSummary;
    auto verify_m6_zero_sweep(int bound) -> CheckSummary;
    auto verify_gn_structure(int min_n, int max_n) -> CheckSummary;
    auto verify_gn_zero_sweep(int n, int bound) -> CheckSummary;

    auto to_json(const VerificationReport &report) -> nlohmann::ordered_json;
    auto to_text(const VerificationReport &report) -> std::string;
}

#include <autograph/analysis.hpp>
#include <autograph/families.hpp>
#include <autograph/lemmas.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>

using std::string;
using std::vector;

namespace autograph
{
    auto to_string(CheckOutcome o) -> string
    {
        switch (o) {
            case CheckOutcome::pass: return "pass";
            case CheckOutcome::fail: return "fail";
            case CheckOutcome::not_applicable: return "not-applicable";
        }
        return "unknown";
    }

    namespace
    {
        auto epsilon(int n, int deleted, int p) -> int
        {
            return (p == 2 * deleted && deleted <= n / 2) ? 1 : 0;
        }

        auto require_monograph(const Realization &r) -> void
        {
            if (! r.signature.is_monograph())
                throw std::invalid_argument("check requires a monograph signature");
        }

        auto negative_mask(const Signature &s) -> VertexMask
        {
            auto m = s.negative_count();
            return m >= 64 ? ~VertexMask{0} : ((VertexMask{1} << m) - 1);
        }
    }

    auto predict_degree_one_deletion(int n, int i, int p) -> DegreePrediction
    {
        if (n < 3 || i < 1 || i > n || p < 1 || p > n || p == i)
            throw std::invalid_argument("one-deletion prediction needs n >= 3 and distinct positions in 1..n");

        DegreePrediction d;
        d.n = n;
        d.i = i;
        d.p = p;

        int fired = 0;
        if (i < p && p <= n - i) {
            d.base = n - 4;
            ++fired;
        }
        if (n - i < p && p < i) {
            d.base = n - 2;
            ++fired;
        }
        if (fired == 0)
            d.base = n - 3;
        if (fired > 1)
            throw std::logic_error("overlapping one-deletion cases");
        if (p == 2 * i && i > n / 2)
            throw std::logic_error("p = 2i beyond n");

        d.eps_i = epsilon(n, i, p);
        d.predicted = d.base + d.eps_i;
        return d;
    }

    auto predict_degree_two_deletions(int n, int i, int j, int p) -> DegreePrediction
    {
        if (n < 4 || i < 1 || j <= i || j > n || p < 1 || p > n || p == i || p == j)
            throw std::invalid_argument("two-deletion prediction needs n >= 4, 1 <= i < j <= n and p outside {i, j}");

        DegreePrediction d;
        d.n = n;
        d.i = i;
        d.j = j;
        d.p = p;

        int fired = 0;
        auto fire = [&](bool cond, int base) {
            if (cond) {
                d.base = base;
                ++fired;
            }
        };
        fire(j < p && p <= n - j, n - 7);
        fire((std::max(j, n - j) < p && p <= n - i) || (i < p && p <= std::min(n - j, j)), n - 6);
        fire((std::max(i, n - i) < p && p < j) || (n - j < p && p <= std::min(n - i, i)), n - 4);
        fire(n - i < p && p < i, n - 3);
        if (fired == 0)
            d.base = n - 5;
        if (fired > 1)
            throw std::logic_error("overlapping two-deletion cases");

        d.eps_i = epsilon(n, i, p);
        d.eps_j = epsilon(n, j, p);
        d.gamma_ij = p == i + j ? 2 : 0;
        d.beta_ij = p == j - i ? 1 : 0;
        d.predicted = d.base + d.eps_i + d.eps_j + d.gamma_ij + d.beta_ij;
        return d;
    }

    auto realized_deletion_degree(int n, Value s, std::span<const int> deletions, int p) -> int
    {
        auto signature = expand_ap(APSignature{1, s, n, vector<int>(deletions.begin(), deletions.end())});
        auto target = Value{p} * s;
        auto r = realize(signature);
        for (std::size_t v = 0; v < signature.size(); ++v)
            if (signature[v] == target)
                return r.graph.degree(static_cast<int>(v));
        throw std::invalid_argument("position p was deleted");
    }

    auto check_kth_largest(const Realization &r) -> vector<KthLargestViolation>
    {
        require_monograph(r);
        const auto &s = r.signature;
        auto n = static_cast<int>(s.size());
        auto m = static_cast<int>(s.negative_count());
        auto negatives = negative_mask(s);

        vector<KthLargestViolation> violations;
        for (int rank = 1; rank <= n - m; ++rank) {
            int v = n - rank;
            int count = std::popcount(r.graph.neighbours(v) & negatives);
            if (count > rank - 1)
                violations.push_back({rank, count});
        }
        return violations;
    }

    auto check_negative_count_bound(const Realization &r) -> CheckOutcome
    {
        require_monograph(r);
        if (r.signature.back() < 0)
            return CheckOutcome::not_applicable;
        auto n = static_cast<int>(r.signature.size());
        auto m = static_cast<int>(r.signature.negative_count());
        return m <= n - 1 - r.graph.degree(n - 1) ? CheckOutcome::pass : CheckOutcome::fail;
    }

    auto check_max_element_lemma(const Realization &r) -> CheckOutcome
    {
        const auto &s = r.signature;
        if (! s.is_monograph() || s.has_zero() || s.back() <= 0)
            return CheckOutcome::not_applicable;

        auto n = static_cast<int>(s.size());
        auto m = static_cast<int>(s.negative_count());
        for (int v = m; v < n - 1; ++v)
            if (! r.graph.has_edge(n - 1, v))
                return CheckOutcome::not_applicable;

        // 1-based s_{m+k} + s_{n-k} for k = 1..n-m-1.
        for (int k = 1; k <= n - m - 1; ++k)
            if (s[static_cast<std::size_t>(m + k - 1)] + s[static_cast<std::size_t>(n - k - 1)] != s.back())
                return CheckOutcome::fail;
        return CheckOutcome::pass;
    }

    auto APDecomposition::longest() const -> int
    {
        int best = 0;
        for (const auto &b : blocks)
            best = std::max(best, b.length);
        return best;
    }

    auto ap_partition(std::span<const Value> values, Value difference) -> APDecomposition
    {
        if (difference < 1)
            throw std::invalid_argument("progression difference must be positive");
        for (std::size_t k = 1; k < values.size(); ++k)
            if (values[k] <= values[k - 1])
                throw std::invalid_argument("progression partition needs strictly increasing values");

        auto present = [&](Value v) { return std::binary_search(values.begin(), values.end(), v); };

        APDecomposition out;
        out.difference = difference;
        for (auto v : values) {
            if (present(v - difference))
                continue;
            int length = 1;
            while (present(v + Value{length} * difference))
                ++length;
            out.blocks.push_back({v, length});
        }
        return out;
    }

    auto StructureReport::failures() const -> int
    {
        return static_cast<int>(std::count_if(results.begin(), results.end(), [](const ObservationResult &o) {
            return ! o.informational && o.outcome == CheckOutcome::fail;
        }));
    }

    namespace
    {
        auto missing_multiples(const Signature &s, Value base, int longest) -> int
        {
            int missing = 0;
            for (int t = 1; t < longest; ++t)
                if (! s.contains(Value{t} * base))
                    ++missing;
            return missing;
        }
    }

    auto check_structure_observations(const Realization &r) -> StructureReport
    {
        require_monograph(r);
        const auto &s = r.signature;
        auto n = static_cast<int>(s.size());
        auto m = static_cast<std::size_t>(s.negative_count());
        auto positives = s.values().subspan(m);

        StructureReport report;
        report.codegree = n - 1 - degree_sequence(r.graph).front();
        int k = report.codegree;

        ObservationResult proper_blocks{proper_block_count, CheckOutcome::not_applicable, "", false};
        ObservationResult proper_missing{proper_missing_multiples, CheckOutcome::not_applicable, "", false};
        if (s.front() > 0) {
            auto d = ap_partition(s.values(), s.front());
            int blocks = static_cast<int>(d.blocks.size());
            int longest = d.longest();
            bool ok = blocks <= k + 1 && longest * (k + 1) >= n;
            proper_blocks.outcome = ok ? CheckOutcome::pass : CheckOutcome::fail;
            proper_blocks.detail = "blocks=" + std::to_string(blocks) + " longest=" + std::to_string(longest) + " k=" + std::to_string(k);

            int missing = missing_multiples(s, s.front(), longest);
            proper_missing.outcome = missing <= k ? CheckOutcome::pass : CheckOutcome::fail;
            proper_missing.detail = "missing=" + std::to_string(missing) + " k=" + std::to_string(k);
        }
        else {
            proper_blocks.detail = proper_missing.detail = "signature is not strictly positive";
        }

        ObservationResult negative_blocks{negative_block_count, CheckOutcome::not_applicable, "", false};
        ObservationResult literal{negative_longest_over_n, CheckOutcome::not_applicable, "", true};
        if (k == 0)
            negative_blocks.detail = literal.detail = "codegree 0";
        else {
            for (std::size_t v = 0; v < m; ++v) {
                if (r.graph.degree(static_cast<int>(v)) == 0)
                    continue;
                auto d = ap_partition(positives, -s[v]);
                int blocks = static_cast<int>(d.blocks.size());
                int longest = d.longest();
                bool ok = blocks <= k && longest * k >= static_cast<int>(positives.size());
                if (negative_blocks.outcome != CheckOutcome::fail)
                    negative_blocks.outcome = ok ? CheckOutcome::pass : CheckOutcome::fail;
                if (! ok || negative_blocks.detail.empty())
                    negative_blocks.detail = "s_i=" + std::to_string(s[v]) + " blocks=" + std::to_string(blocks) +
                        " longest=" + std::to_string(longest) + " k=" + std::to_string(k);

                bool strong = longest * k >= n;
                if (literal.outcome != CheckOutcome::fail)
                    literal.outcome = strong ? CheckOutcome::pass : CheckOutcome::fail;
                if (! strong && literal.detail.empty())
                    literal.detail = "s_i=" + std::to_string(s[v]) + " longest=" + std::to_string(longest) + " n/k=" + std::to_string(n) + "/" + std::to_string(k);
            }
            if (negative_blocks.outcome == CheckOutcome::not_applicable)
                negative_blocks.detail = literal.detail = "no negative value of nonzero degree";
        }

        ObservationResult single_negative{single_negative_missing_multiples, CheckOutcome::not_applicable, "", false};
        if (m == 1 && ! s.has_zero()) {
            auto base = -s.front();
            int longest = ap_partition(positives, base).longest();
            int missing = missing_multiples(s, base, longest);
            single_negative.outcome = missing <= k - 1 ? CheckOutcome::pass : CheckOutcome::fail;
            single_negative.detail = "missing=" + std::to_string(missing) + " k=" + std::to_string(k);
        }
        else
            single_negative.detail = "needs exactly one negative value and no zero";

        report.results = {proper_blocks, proper_missing, negative_blocks, single_negative, literal};
        return report;
    }

    auto matches_m6_ap5_shape(const Signature &candidate) -> bool
    {
        if (candidate.size() != 6)
            throw std::invalid_argument("M6 progression shape needs exactly six values");
        if (candidate.negative_count() != 1)
            return false;
        auto step = candidate[2] - candidate[1];
        if (step <= 0)
            return false;
        for (std::size_t k = 2; k < 6; ++k)
            if (candidate[k] - candidate[k - 1] != step)
                return false;
        return true;
    }

    auto check_m6_ap5_lemma(const Signature &candidate) -> CheckOutcome
    {
        if (! matches_m6_ap5_shape(candidate))
            return CheckOutcome::not_applicable;
        return is_isomorphic(realize(candidate).graph, m6_graph()) ? CheckOutcome::fail : CheckOutcome::pass;
    }

    auto check_zero_exclusion(const Graph &target, const Signature &candidate) -> bool
    {
        if (! candidate.has_zero())
            throw std::invalid_argument("zero-exclusion check needs a candidate containing 0");
        return ! is_isomorphic(realize(candidate).graph, target);
    }

    auto check_kn_deletion_lemmas(int n, Value s, std::span<const int> deletions) -> DeletionLemmaResult
    {
        if (s < 1)
            throw std::invalid_argument("progression step must be positive");
        if (deletions.size() == 1) {
            if (n < 9 || n % 2 == 0)
                throw std::invalid_argument("one-deletion lemma needs odd n >= 9");
        }
        else if (deletions.size() == 2) {
            if (n < 10 || n % 2 != 0)
                throw std::invalid_argument("two-deletion lemma needs even n >= 10");
        }
        else
            throw std::invalid_argument("deletion lemmas take one or two deletions");

        auto r = realize(expand_ap(APSignature{1, s, n, vector<int>(deletions.begin(), deletions.end())}));
        int remaining = n - static_cast<int>(deletions.size());
        int regular_degree = remaining - 3;

        DeletionLemmaResult result;
        for (int v = 0; v < r.graph.size(); ++v)
            if (r.graph.degree(v) != regular_degree) {
                result.rejected_by_degree = true;
                result.holds = true;
                return result;
            }
        result.holds = ! is_isomorphic(r.graph, gn_graph(remaining));
        return result;
    }
}

#include <autograph/families.hpp>
#include <autograph/graph_io.hpp>
#include <autograph/realize.hpp>
#include <autograph/search.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <climits>
#include <limits>
#include <numeric>
#include <thread>

using std::string;
using std::uint64_t;
using std::vector;

namespace autograph
{
    namespace
    {
        constexpr Value max_search_bound = 10'000'000;
        constexpr uint64_t saturated = std::numeric_limits<uint64_t>::max();

        auto sat_mul(uint64_t a, uint64_t b) -> uint64_t
        {
            uint64_t r{};
            return __builtin_mul_overflow(a, b, &r) ? saturated : r;
        }

        auto sat_add(uint64_t a, uint64_t b) -> uint64_t
        {
            uint64_t r{};
            return __builtin_add_overflow(a, b, &r) ? saturated : r;
        }

        auto binomial(uint64_t n, uint64_t k) -> uint64_t
        {
            if (k > n)
                return 0;
            k = std::min(k, n - k);
            unsigned __int128 r = 1;
            for (uint64_t i = 1; i <= k; ++i) {
                r = r * (n - k + i) / i;
                if (r > saturated)
                    return saturated;
            }
            return static_cast<uint64_t>(r);
        }

        // Ways to pick `take` values from `available` distinct values, with or
        // without repetition.
        auto choose(uint64_t available, uint64_t take, bool multiset) -> uint64_t
        {
            if (take == 0)
                return 1;
            if (available == 0)
                return 0;
            return multiset ? binomial(available + take - 1, take) : binomial(available, take);
        }

        struct Pool
        {
            vector<Value> values;   // ascending
            int negatives = 0;

            auto size() const -> int { return static_cast<int>(values.size()); }
        };

        auto make_pool(const SearchConfig &config) -> Pool
        {
            Pool pool;
            for (Value v = -config.bound; v <= config.bound; ++v) {
                if (v == 0 && ! config.allow_zero)
                    continue;
                pool.values.push_back(v);
                if (v < 0)
                    ++pool.negatives;
            }
            return pool;
        }

        auto space_negative_cap(const SearchConfig &config) -> int
        {
            return config.max_negatives ? *config.max_negatives : INT_MAX;
        }

        // Completions choosing `remaining` values from pool indices >= start with
        // `negatives` already used.
        auto completions(const Pool &pool, bool multiset, int negative_cap, int start, int remaining, int negatives) -> uint64_t
        {
            uint64_t neg_available = static_cast<uint64_t>(std::max(0, pool.negatives - start));
            uint64_t pos_available = static_cast<uint64_t>(pool.size() - std::max(start, pool.negatives));
            int cap = negative_cap == INT_MAX ? remaining : std::min(remaining, negative_cap - negatives);
            uint64_t total = 0;
            for (int q = 0; q <= cap; ++q)
                total = sat_add(total, sat_mul(choose(neg_available, static_cast<uint64_t>(q), multiset),
                                               choose(pos_available, static_cast<uint64_t>(remaining - q), multiset)));
            return total;
        }

        auto pruning_negative_cap(const TargetDescriptor &target, const SearchConfig &config) -> int
        {
            // all-negative candidates realize the edgeless graph and escape the bound
            if (! config.paper_pruning || config.allow_multiset || target.edges == 0)
                return INT_MAX;
            return target.graph.size() - 1 - target.min_degree;
        }

        enum class Mode
        {
            first_match,
            all_matches
        };

        struct ShardResult
        {
            SearchCounters counters;
            vector<Signature> matches;
            uint64_t match_count = 0;
            bool processed = false;
        };

        class ShardWorker
        {
        public:
            ShardWorker(const Pool &pool, const TargetDescriptor &target, const SearchConfig &config, Mode mode) :
                _pool(pool), _target(target), _config(config), _mode(mode),
                _n(target.graph.size()),
                _space_cap(space_negative_cap(config)),
                _prune_cap(pruning_negative_cap(target, config)),
                _prune_zero(config.paper_pruning && ! config.allow_multiset && target.zero_free),
                _prune_gcd(config.paper_pruning),
                _values(static_cast<std::size_t>(_n)),
                _present(static_cast<std::size_t>(2 * config.bound + 1), 0)
            {
                for (int d : target.degrees)
                    ++_target_histogram[static_cast<std::size_t>(d)];
            }

            auto run(std::span<const int> prefix) -> ShardResult
            {
                _prefix = prefix;
                _result = ShardResult{};
                _stop = false;
                descend(0, 0, 0, false);
                _result.processed = true;
                return std::move(_result);
            }

        private:
            const Pool &_pool;
            const TargetDescriptor &_target;
            const SearchConfig &_config;
            Mode _mode;
            int _n;
            int _space_cap;
            int _prune_cap;
            bool _prune_zero;
            bool _prune_gcd;
            vector<Value> _values;
            vector<std::uint8_t> _present;
            std::array<int, max_canonical_vertices + 1> _target_histogram{};
            std::span<const int> _prefix;
            ShardResult _result;
            bool _stop = false;

            // Cuts are taken once the shard prefix is fully placed, so a pruned
            // subtree is counted by exactly one shard.
            auto descend(int depth, int start, int negatives, bool zero_seen) -> void
            {
                if (depth == _n) {
                    leaf();
                    return;
                }

                bool multiset = _config.allow_multiset;
                int remaining_after = _n - depth - 1;
                int lo = start;
                int hi = multiset ? _pool.size() - 1 : _pool.size() - 1 - remaining_after;
                if (depth < static_cast<int>(_prefix.size())) {
                    if (_prefix[depth] < lo || _prefix[depth] > hi)
                        return;
                    lo = hi = _prefix[depth];
                }

                for (int c = lo; c <= hi && ! _stop; ++c) {
                    Value v = _pool.values[static_cast<std::size_t>(c)];
                    int now_negative = negatives + (v < 0 ? 1 : 0);
                    if (now_negative > _space_cap)
                        continue;
                    int next_start = multiset ? c : c + 1;
                    bool now_zero = zero_seen || v == 0;

                    bool cut_allowed = depth + 1 >= static_cast<int>(_prefix.size());
                    bool cut_negatives = cut_allowed && now_negative > _prune_cap;
                    bool cut_zero = cut_allowed && now_zero && _prune_zero;
                    if (cut_negatives || cut_zero) {
                        auto skipped = completions(_pool, multiset, _space_cap, next_start, remaining_after, now_negative);
                        _result.counters.enumerated += skipped;
                        (cut_negatives ? _result.counters.pruned_negative_count : _result.counters.pruned_zero) += skipped;
                        continue;
                    }

                    _values[static_cast<std::size_t>(depth)] = v;
                    ++_present[static_cast<std::size_t>(v + _config.bound)];
                    descend(depth + 1, next_start, now_negative, now_zero);
                    --_present[static_cast<std::size_t>(v + _config.bound)];
                }
            }

            auto leaf() -> void
            {
                auto &counters = _result.counters;
                ++counters.enumerated;

                Value g = value_gcd(_values);
                if (_prune_gcd && g > 1) {
                    ++counters.pruned_scaled;
                    return;
                }
                ++counters.realized;

                std::array<VertexMask, max_canonical_vertices> rows{};
                const Value bound = _config.bound;
                for (int i = 0; i < _n; ++i)
                    for (int j = i + 1; j < _n; ++j) {
                        Value d = _values[static_cast<std::size_t>(j)] - _values[static_cast<std::size_t>(i)];
                        if (d <= bound && _present[static_cast<std::size_t>(d + bound)]) {
                            rows[static_cast<std::size_t>(i)] |= VertexMask{1} << j;
                            rows[static_cast<std::size_t>(j)] |= VertexMask{1} << i;
                        }
                    }

                std::array<int, max_canonical_vertices + 1> histogram{};
                int twice_edges = 0;
                for (int i = 0; i < _n; ++i) {
                    int d = std::popcount(rows[static_cast<std::size_t>(i)]);
                    twice_edges += d;
                    ++histogram[static_cast<std::size_t>(d)];
                }
                if (twice_edges != 2 * _target.edges || histogram != _target_histogram) {
                    ++counters.degree_rejected;
                    return;
                }

                ++counters.isomorphism_tests;
                auto candidate = graph_from_rows(std::span<const VertexMask>(rows.data(), static_cast<std::size_t>(_n)));
                if (canonical_form(candidate).key != _target.key)
                    return;

                if (g != 1) {
                    ++counters.unnormalized_matches;
                    return;
                }
                ++_result.match_count;
                if (_result.matches.size() < _config.match_limit)
                    _result.matches.emplace_back(_values);
                if (_mode == Mode::first_match)
                    _stop = true;
            }
        };

        struct SearchRun
        {
            vector<ShardResult> shards;
            uint64_t space_size = 0;
            double seconds = 0;
        };

        auto prefix_shards(const Pool &pool, int n, bool multiset) -> vector<std::array<int, 2>>
        {
            vector<std::array<int, 2>> shards;
            if (n == 1) {
                for (int a = 0; a < pool.size(); ++a)
                    shards.push_back({a, -1});
                return shards;
            }
            for (int a = 0; a < pool.size(); ++a)
                for (int b = multiset ? a : a + 1; b < pool.size(); ++b)
                    shards.push_back({a, b});
            return shards;
        }

        auto run_search(const TargetDescriptor &target, const SearchConfig &config, Mode mode) -> SearchRun
        {
            validate(config);
            int n = target.graph.size();
            if (n < 1 || n > max_canonical_vertices)
                throw std::invalid_argument("search targets need 1..16 vertices");

            SearchRun run;
            run.space_size = estimate_candidates(n, config);
            if (run.space_size > config.candidate_ceiling)
                throw InfeasibleSearch(run.space_size, config.candidate_ceiling);

            auto started = std::chrono::steady_clock::now();
            auto pool = make_pool(config);
            auto shards = prefix_shards(pool, n, config.allow_multiset);
            run.shards.resize(shards.size());

            std::atomic<std::size_t> next{0};
            std::atomic<std::size_t> first_hit{std::numeric_limits<std::size_t>::max()};
            auto work = [&]() {
                ShardWorker worker(pool, target, config, mode);
                while (true) {
                    auto k = next.fetch_add(1);
                    if (k >= shards.size())
                        return;
                    if (mode == Mode::first_match && k > first_hit.load())
                        continue;
                    auto length = n == 1 ? 1U : 2U;
                    run.shards[k] = worker.run(std::span<const int>(shards[k].data(), length));
                    if (mode == Mode::first_match && run.shards[k].match_count > 0) {
                        auto seen = first_hit.load();
                        while (k < seen && ! first_hit.compare_exchange_weak(seen, k)) {
                        }
                    }
                }
            };

            int workers = std::max(1, config.workers);
            if (workers == 1)
                work();
            else {
                vector<std::jthread> threads;
                for (int t = 0; t < workers; ++t)
                    threads.emplace_back(work);
            }

            run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
            return run;
        }

        auto verify_match(const Signature &s, const Graph &target) -> void
        {
            auto r = realize(s);
            if (! realization_consistent(r) || ! is_isomorphic(r.graph, target))
                throw std::logic_error("search returned " + to_string(s) + " which does not realize the target");
        }
    }

    InfeasibleSearch::InfeasibleSearch(uint64_t estimate, uint64_t ceiling) :
        std::runtime_error("candidate space of " + std::to_string(estimate) + " exceeds the ceiling of " + std::to_string(ceiling)),
        estimate(estimate),
        ceiling(ceiling)
    {
    }

    auto validate(const SearchConfig &config) -> void
    {
        if (config.bound < 1 || config.bound > max_search_bound)
            throw std::invalid_argument("search bound must lie in [1, 10000000]");
        if (config.workers < 1)
            throw std::invalid_argument("worker count must be positive");
        if (config.max_negatives && *config.max_negatives < 0)
            throw std::invalid_argument("max negatives must be non-negative");
    }

    auto describe(const SearchConfig &config) -> string
    {
        return "bound=" + std::to_string(config.bound) + ";allow_zero=" + (config.allow_zero ? "1" : "0") +
            ";multiset=" + (config.allow_multiset ? "1" : "0") + ";paper_pruning=" + (config.paper_pruning ? "1" : "0") +
            ";max_negatives=" + (config.max_negatives ? std::to_string(*config.max_negatives) : "none") +
            ";ceiling=" + std::to_string(config.candidate_ceiling) + ";match_limit=" + std::to_string(config.match_limit);
    }

    auto to_json(const SearchConfig &config) -> nlohmann::ordered_json
    {
        nlohmann::ordered_json j;
        j["bound"] = config.bound;
        j["allowZero"] = config.allow_zero;
        j["allowMultiset"] = config.allow_multiset;
        j["paperPruning"] = config.paper_pruning;
        j["maxNegatives"] = config.max_negatives ? nlohmann::ordered_json(*config.max_negatives) : nlohmann::ordered_json(nullptr);
        j["workers"] = config.workers;
        j["candidateCeiling"] = config.candidate_ceiling;
        j["matchLimit"] = config.match_limit;
        return j;
    }

    auto estimate_candidates(int n, const SearchConfig &config) -> uint64_t
    {
        validate(config);
        auto pool = make_pool(config);
        return completions(pool, config.allow_multiset, space_negative_cap(config), 0, n, 0);
    }

    auto describe_target(const Graph &target) -> TargetDescriptor
    {
        TargetDescriptor t;
        t.graph = target;
        t.edges = target.edge_count();
        t.degrees = degree_sequence(target);
        t.min_degree = t.degrees.empty() ? 0 : t.degrees.front();
        t.key = canonical_form(target).key;
        int n = target.size();
        t.zero_free = is_isomorphic(target, m6_graph()) || (n >= 8 && n % 2 == 0 && is_isomorphic(target, gn_graph(n)));
        return t;
    }

    auto to_string(PruneReason r) -> string
    {
        switch (r) {
            case PruneReason::none: return "none";
            case PruneReason::negative_count: return "negative-count";
            case PruneReason::zero_in_signature: return "zero-in-signature";
            case PruneReason::scaled_duplicate: return "scaled-duplicate";
            case PruneReason::degree_sequence: return "degree-sequence";
        }
        return "unknown";
    }

    auto prune_candidate(std::span<const Value> candidate, bool complete, const TargetDescriptor &target, const SearchConfig &config)
        -> PruneVerdict
    {
        if (! config.paper_pruning)
            return {};

        auto negatives = static_cast<int>(std::count_if(candidate.begin(), candidate.end(), [](Value v) { return v < 0; }));
        if (negatives > pruning_negative_cap(target, config))
            return {false, PruneReason::negative_count};
        if (! config.allow_multiset && target.zero_free && std::find(candidate.begin(), candidate.end(), Value{0}) != candidate.end())
            return {false, PruneReason::zero_in_signature};
        if (! complete)
            return {};

        if (value_gcd(candidate) > 1)
            return {false, PruneReason::scaled_duplicate};
        if (static_cast<int>(candidate.size()) != target.graph.size())
            return {false, PruneReason::degree_sequence};
        auto r = realize(Signature{vector<Value>(candidate.begin(), candidate.end())});
        if (degree_sequence(r.graph) != target.degrees)
            return {false, PruneReason::degree_sequence};
        return {};
    }

    auto SearchCounters::operator+=(const SearchCounters &o) -> SearchCounters &
    {
        enumerated += o.enumerated;
        pruned_negative_count += o.pruned_negative_count;
        pruned_zero += o.pruned_zero;
        pruned_scaled += o.pruned_scaled;
        realized += o.realized;
        degree_rejected += o.degree_rejected;
        isomorphism_tests += o.isomorphism_tests;
        unnormalized_matches += o.unnormalized_matches;
        return *this;
    }

    auto search_signature(const Graph &target, const SearchConfig &config) -> SignatureSearchResult
    {
        auto descriptor = describe_target(target);
        auto run = run_search(descriptor, config, Mode::first_match);

        SignatureSearchResult result;
        result.wall_clock_seconds = run.seconds;
        for (auto &shard : run.shards) {
            result.counters += shard.counters;
            if (shard.match_count > 0) {
                result.signature = shard.matches.front();
                break;
            }
        }
        if (result.signature)
            verify_match(*result.signature, target);
        return result;
    }

    auto find_signature(const Graph &target, const SearchConfig &config) -> std::optional<Signature>
    {
        return search_signature(target, config).signature;
    }

    auto certify_absence(const Graph &target, const SearchConfig &config) -> AbsenceReport
    {
        auto descriptor = describe_target(target);
        auto run = run_search(descriptor, config, Mode::all_matches);

        AbsenceReport report;
        auto canonical = canonical_form(target);
        report.target_graph6 = to_graph6(target.relabel(canonical.order));
        report.target_key = canonical.key.to_bitstring();
        report.vertices = target.size();
        report.config = config;
        report.space_size = run.space_size;
        report.wall_clock_seconds = run.seconds;
        bool all_processed = true;
        for (auto &shard : run.shards) {
            all_processed = all_processed && shard.processed;
            report.counters += shard.counters;
            report.match_count += shard.match_count;
            for (auto &m : shard.matches)
                if (report.matches.size() < config.match_limit)
                    report.matches.push_back(std::move(m));
        }
        for (const auto &m : report.matches)
            verify_match(m, target);

        const auto &c = report.counters;
        report.exhaustive = all_processed && c.enumerated == run.space_size && c.enumerated == c.pruned() + c.realized;
        return report;
    }

    auto to_json(const AbsenceReport &report) -> nlohmann::ordered_json
    {
        nlohmann::ordered_json j;
        j["targetGraph6"] = report.target_graph6;
        j["targetKey"] = report.target_key;
        j["vertices"] = report.vertices;
        j["config"] = to_json(report.config);
        j["spaceSize"] = report.space_size;
        j["candidatesEnumerated"] = report.counters.enumerated;
        j["candidatesRealized"] = report.counters.realized;
        j["pruned"] = {
            {"negativeCount", report.counters.pruned_negative_count},
            {"zeroInSignature", report.counters.pruned_zero},
            {"scaledDuplicate", report.counters.pruned_scaled},
        };
        j["degreeRejected"] = report.counters.degree_rejected;
        j["isomorphismTests"] = report.counters.isomorphism_tests;
        j["unnormalizedMatches"] = report.counters.unnormalized_matches;
        j["matchCount"] = report.match_count;
        auto matches = nlohmann::ordered_json::array();
        for (const auto &m : report.matches)
            matches.push_back(vector<Value>(m.values().begin(), m.values().end()));
        j["matches"] = matches;
        j["exhaustive"] = report.exhaustive;
        j["wallClockSeconds"] = report.wall_clock_seconds;
        return j;
    }
}

#include <autograph/sampling.hpp>

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

namespace autograph
{
    SignatureSampler::SignatureSampler(std::uint64_t seed, SamplerConfig config) :
        _engine(seed),
        _config(config)
    {
        if (config.min_size < 1 || config.max_size < config.min_size || config.bound < 1)
            throw std::invalid_argument("bad sampler configuration");
        if (config.max_size > 2 * config.bound + 1)
            throw std::invalid_argument("sampler range too small for distinct values");
    }

    auto SignatureSampler::uniform(std::int64_t lo, std::int64_t hi) -> std::int64_t
    {
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        auto limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
        std::uint64_t draw;
        do
            draw = _engine();
        while (draw >= limit);
        return lo + static_cast<std::int64_t>(draw % span);
    }

    auto SignatureSampler::next() -> Signature
    {
        auto n = static_cast<int>(uniform(_config.min_size, _config.max_size));
        auto threshold = static_cast<std::uint64_t>(_config.negative_weight * 1'000'000.0);
        std::vector<Value> values;
        int negatives_left = static_cast<int>(_config.bound);
        int others_left = static_cast<int>(_config.bound) + 1;
        while (static_cast<int>(values.size()) < n) {
            bool negative = static_cast<std::uint64_t>(uniform(0, 999'999)) < threshold;
            if (negative && negatives_left == 0)
                negative = false;
            if (! negative && others_left == 0)
                negative = true;
            Value v = negative ? uniform(-_config.bound, -1) : uniform(0, _config.bound);
            if (std::find(values.begin(), values.end(), v) != values.end())
                continue;
            values.push_back(v);
            --(negative ? negatives_left : others_left);
        }
        return Signature{std::move(values)};
    }
}

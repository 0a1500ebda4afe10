#pragma once

#include <autograph/signature.hpp>

#include <cstdint>
#include <random>

namespace autograph
{
    struct SamplerConfig
    {
        int min_size = 3;
        int max_size = 10;
        Value bound = 30;              // values drawn from [-bound, bound]
        double negative_weight = 0.3;  // chance that a slot is filled from the negative half
    };

    /// Reproducible random monographs. Uses mt19937_64 with its own bounded
    /// draws, so a seed gives the same stream on every platform.
    class SignatureSampler
    {
    public:
        SignatureSampler(std::uint64_t seed, SamplerConfig config);

        auto next() -> Signature;
        auto uniform(std::int64_t lo, std::int64_t hi) -> std::int64_t;

    private:
        std::mt19937_64 _engine;
        SamplerConfig _config;
    };
}

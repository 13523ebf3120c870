#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace uavsim {

/// Random stream keyed by (master seed, trial, sector). The key is mixed
/// into a SplitMix64 state, so streams can be created in any order and on
/// any thread and always replay the same sequence.
class RngStream {
public:
    using result_type = std::uint64_t;

    RngStream(std::uint64_t master_seed, std::uint64_t trial_index, std::uint64_t sector_index);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()();

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();

    /// Standard normal deviate.
    double standard_normal();

private:
    std::uint64_t state_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

std::uint64_t splitmix64_mix(std::uint64_t z);

} // namespace uavsim

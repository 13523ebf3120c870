#include "uavsim/rng.hpp"

namespace uavsim {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
} // namespace

std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t trial_index, std::uint64_t sector_index) {
    std::uint64_t s = splitmix64_mix(master_seed + kGolden);
    s = splitmix64_mix(s ^ (trial_index + 2 * kGolden));
    s = splitmix64_mix(s ^ (sector_index + 3 * kGolden));
    state_ = s;
}

RngStream::result_type RngStream::operator()() {
    state_ += kGolden;
    return splitmix64_mix(state_);
}

double RngStream::uniform() {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

double RngStream::standard_normal() {
    return normal_(*this);
}

} // namespace uavsim

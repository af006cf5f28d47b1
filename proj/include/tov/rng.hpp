#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace tov {

// Counter-based deterministic random stream. A stream is identified by
// (seed, stream_label); every draw is a pure function of (key, counter), so
// sequences are identical across runs and thread counts. Substreams derive
// fresh independent keys, which is how per-run / per-epoch randomness is
// split without any shared mutable state.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::string_view stream_label);

    std::uint64_t next_u64();
    // Uniform in [0, 1), 53-bit resolution.
    double next_double();
    // Uniform in [0, bound), bias-free (rejection sampling). bound > 0.
    std::uint64_t next_below(std::uint64_t bound);
    // Standard normal via Box-Muller; consumes exactly two counter steps.
    double next_gaussian();

    RngStream substream(std::string_view label) const;
    RngStream substream(std::uint64_t index) const;

    std::uint64_t seed() const { return seed_; }
    const std::string& label() const { return label_; }

private:
    RngStream(std::uint64_t seed, std::string label, std::uint64_t key);

    std::uint64_t seed_;
    std::string label_;
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

namespace detail {
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b);
std::uint64_t fnv1a64(std::string_view s);
} // namespace detail

} // namespace tov

#include "tov/rng.hpp"

#include <cmath>
#include <numbers>

namespace tov {

namespace detail {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b) {
    return splitmix64(splitmix64(a) ^ (b + 0x9E3779B97F4A7C15ULL));
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

} // namespace detail

RngStream::RngStream(std::uint64_t seed, std::string_view stream_label)
    : seed_(seed),
      label_(stream_label),
      key_(detail::hash_combine(seed, detail::fnv1a64(stream_label))) {}

RngStream::RngStream(std::uint64_t seed, std::string label, std::uint64_t key)
    : seed_(seed), label_(std::move(label)), key_(key) {}

std::uint64_t RngStream::next_u64() {
    return detail::splitmix64(key_ ^ detail::splitmix64(counter_++ + key_));
}

double RngStream::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RngStream::next_below(std::uint64_t bound) {
    // Rejection sampling over the largest multiple of bound below 2^64.
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
    std::uint64_t v;
    do {
        v = next_u64();
    } while (v >= limit);
    return v % bound;
}

double RngStream::next_gaussian() {
    // Box-Muller. u1 is shifted away from 0 so the log is always finite.
    const double u1 = (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

RngStream RngStream::substream(std::string_view label) const {
    std::string child = label_;
    child += '/';
    child += label;
    return RngStream(seed_, std::move(child),
                     detail::hash_combine(key_, detail::fnv1a64(label)));
}

RngStream RngStream::substream(std::uint64_t index) const {
    std::string child = label_;
    child += '/';
    child += std::to_string(index);
    return RngStream(seed_, std::move(child), detail::hash_combine(key_, index));
}

} // namespace tov

// rng.hpp - counter-based randomness: each draw is a pure hash of (seed, keys)
#ifndef HYPERSPARSE_RNG_HPP
#define HYPERSPARSE_RNG_HPP

#include <cmath>
#include <cstdint>

namespace hypersparse {

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b) {
    return mix64(a ^ (mix64(b) + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2)));
}

// Uniform in [0, 1), determined entirely by (seed, key): decisions are
// independent of evaluation order and of any parallel schedule.
inline double uniform01(std::uint64_t seed, std::uint64_t key) {
    return static_cast<double>(mix64(hash_combine(seed, key)) >> 11) * 0x1.0p-53;
}

inline double uniform01(std::uint64_t seed, std::uint64_t key1, std::uint64_t key2) {
    return uniform01(hash_combine(seed, key1), key2);
}

// Derive an independent child stream.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t key) {
    return mix64(hash_combine(seed, key));
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t key1, std::uint64_t key2) {
    return mix64(hash_combine(hash_combine(seed, key1), key2));
}

// Standard normal via Box-Muller on two counter draws.
inline double normal(std::uint64_t seed, std::uint64_t key) {
    double u1 = uniform01(seed, key, 0);
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double u2 = uniform01(seed, key, 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

// Stateful convenience wrapper over the counter stream, for test harnesses
// and generators where sequential draws are fine.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed) {}
    double next_uniform() { return uniform01(seed_, counter_++); }
    double next_normal() { return normal(seed_, counter_++); }
    std::uint64_t next_u64() { return mix64(hash_combine(seed_, counter_++)); }
    // Uniform integer in [0, bound).
    std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

}  // namespace hypersparse

#endif

#pragma once

#include <cstdint>

namespace mlab {

// xoshiro256++ with splitmix64 seeding. Self-contained so that seeded runs
// reproduce bit-for-bit on every platform (std::uniform_int_distribution is
// not portable across standard libraries).
class Rng {
public:
    explicit Rng(uint64_t seed) {
        uint64_t x = seed;
        for (auto& word : state_) word = splitmix64(x);
    }

    uint64_t next() {
        const uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, n) by rejection; exact, no modulo bias.
    uint64_t below(uint64_t n) {
        const uint64_t threshold = (0 - n) % n;
        for (;;) {
            uint64_t x = next();
            if (x >= threshold) return x % n;
        }
    }

    // Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

    static uint64_t splitmix64(uint64_t& x) {
        uint64_t z = (x += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t state_[4];
};

// Independent stream for (master seed, module tag, trial index). Trials drawn
// from derived streams are order-independent, so parallel runs aggregate to
// the same result as sequential ones.
inline Rng derive_rng(uint64_t master_seed, uint64_t tag, uint64_t index = 0) {
    uint64_t x = master_seed;
    uint64_t a = Rng::splitmix64(x);
    x ^= tag * 0x9e3779b97f4a7c15ull + 0x165667b19e3779f9ull;
    uint64_t b = Rng::splitmix64(x);
    x ^= index * 0xd1b54a32d192ed03ull + 0x2545f4914f6cdd1dull;
    uint64_t c = Rng::splitmix64(x);
    return Rng(a ^ (b * 0x9fb21c651e98df25ull) ^ (c + 0x9e3779b97f4a7c15ull));
}

// Module tags for stream derivation.
namespace seed_tag {
constexpr uint64_t labelling = 1;
constexpr uint64_t walk = 2;
constexpr uint64_t simple_path = 3;
constexpr uint64_t divergence = 4;
constexpr uint64_t detour = 5;
constexpr uint64_t word_mc = 6;
constexpr uint64_t quotient = 7;
}  // namespace seed_tag

}  // namespace mlab

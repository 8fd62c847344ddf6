#ifndef EFTVQA_RNG_HPP
#define EFTVQA_RNG_HPP

#include <cstdint>

namespace eftvqa {

// SplitMix64, used only to expand seeds.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// xoshiro256** (Blackman & Vigna). Fixed here as the project-wide generator
// so that seeded runs reproduce bit-exactly across platforms.
class Rng {
public:
    explicit Rng(uint64_t seed = 0) { reseed(seed); }

    void reseed(uint64_t seed) {
        uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
    }

    uint64_t next() {
        const uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform double in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    bool bit() { return (next() >> 63) != 0; }

    // Unbiased integer in [0, n).
    uint64_t below(uint64_t n) {
        uint64_t x, r;
        do {
            x = next();
            r = x % n;
        } while (x - r > uint64_t(0) - n);
        return r;
    }

    // Number of Bernoulli(p_success) trials up to and including the first
    // success; p_success must be in (0, 1].
    uint64_t geometric(double p_success) {
        uint64_t g = 1;
        while (!bernoulli(p_success)) ++g;
        return g;
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t s_[4];
};

// Independent stream for a worker/trial: mixes the master seed with a counter
// offset so trials can be evaluated in parallel and in any order.
inline Rng stream_rng(uint64_t master_seed, uint64_t stream_index) {
    uint64_t sm = master_seed ^ (0xA0761D6478BD642Full * (stream_index + 1));
    return Rng(splitmix64(sm));
}

}  // namespace eftvqa

#endif

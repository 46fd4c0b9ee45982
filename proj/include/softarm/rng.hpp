#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace softarm {

// splitmix64 step: advances state and returns a mixed value.
inline uint64_t splitmix64(uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Order-sensitive mix of a few keys into one seed. Used to derive independent
// streams: hash(seed, env_index, update_index), hash(base_seed, episode_id), ...
inline uint64_t mix_keys(uint64_t a) {
    uint64_t s = a;
    return splitmix64(s);
}
inline uint64_t mix_keys(uint64_t a, uint64_t b) {
    uint64_t s = mix_keys(a) ^ b;
    return splitmix64(s);
}
inline uint64_t mix_keys(uint64_t a, uint64_t b, uint64_t c) {
    uint64_t s = mix_keys(a, b) ^ c;
    return splitmix64(s);
}

// FNV-1a, for config fingerprints and name-keyed init streams.
inline uint64_t fnv1a(std::string_view text, uint64_t h = 0xcbf29ce484222325ull) {
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

// Deterministic stream generator: splitmix64 core, Box-Muller normals.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() { return splitmix64(state_); }

    // uniform in [0, 1)
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // standard normal; one draw per call (two uniforms consumed, sine half discarded
    // so the stream position is a pure function of the draw count)
    double normal() {
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        constexpr double two_pi = 6.283185307179586476925286766559;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
    }

  private:
    uint64_t state_;
};

}  // namespace softarm

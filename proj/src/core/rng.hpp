#ifndef DISCSIEVE_RNG_HPP
#define DISCSIEVE_RNG_HPP

#include <cstdint>

namespace discsieve {

// Counter-based generator: value i of a stream is a pure function of
// (seed, stream, i), so partitioned runs reproduce the single-threaded
// sequence regardless of thread count.
struct CounterRng {
    uint64_t seed = 0;
    uint64_t stream = 0;

    static uint64_t mix(uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    uint64_t at(uint64_t counter) const {
        uint64_t h = mix(seed ^ 0x6a09e667f3bcc909ULL);
        h = mix(h ^ stream * 0xd6e8feb86659fd93ULL);
        return mix(h ^ counter);
    }

    // uniform in [0,1)
    double uniform(uint64_t counter) const {
        return double(at(counter) >> 11) * 0x1.0p-53;
    }

    // uniform in [0, bound), bound > 0; modulo bias is < 2^-32 for desk-scale
    // bounds and irrelevant for the experiments here
    uint64_t below(uint64_t counter, uint64_t bound) const { return at(counter) % bound; }

    int64_t range(uint64_t counter, int64_t lo, int64_t hi) const {  // inclusive
        return lo + int64_t(below(counter, uint64_t(hi - lo + 1)));
    }
};

}  // namespace discsieve

#endif

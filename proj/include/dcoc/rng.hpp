#ifndef DCOC_RNG_HPP
#define DCOC_RNG_HPP

#include <cstdint>

namespace dcoc {

// SplitMix64 (Steele, Lea & Flood 2014). Chosen because it is trivial to
// reimplement identically in any language; the stream for seed s is
// mix(s+g), mix(s+2g), ... with the golden-gamma increment below.
// Reference vectors (first outputs): seed 0 -> 0xe220a8397b1dcdaf,
// seed 1 -> 0x910a2dec89025cc1, seed 42 -> 0xbdd732262feb6e95.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound) via rejection, exact for any bound >= 1
    uint64_t bounded(uint64_t bound) {
        uint64_t threshold = (0 - bound) % bound; // 2^64 mod bound
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // true with probability exactly num/den
    bool chance(uint64_t num, uint64_t den) { return bounded(den) < num; }

    // uniform double in [0, 1) with 53 bits of precision
    double real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Stream-splitting rule used by Monte-Carlo harnesses: trial i draws
    // from SplitMix64(master_seed + i). Seeds that differ by small offsets
    // yield unrelated streams because the increment is a large odd constant.
    static SplitMix64 for_trial(uint64_t master_seed, uint64_t index) {
        return SplitMix64(master_seed + index);
    }

private:
    uint64_t state_;
};

} // namespace dcoc

#endif

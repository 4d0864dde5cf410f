#ifndef SECBEAM_RNG_HPP
#define SECBEAM_RNG_HPP

#include <cstdint>
#include <random>

namespace secbeam {

// splitmix64 step; used both as a mixer and to derive independent sub-seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic sub-seed for a named stream. Streams are identified by small
// integer ids (see README "Reproducibility"): the id is mixed into the master
// seed before two splitmix rounds.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream_id) {
    std::uint64_t s = master ^ (0x6a09e667f3bcc909ULL + stream_id * 0x9e3779b97f4a7c15ULL);
    splitmix64(s);
    return splitmix64(s);
}

// mt19937_64 with portable helpers. std::uniform_*_distribution is
// implementation-defined, so the mappings below are done by hand to keep
// every run bit-reproducible across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform on [0, 1) with 53-bit resolution.
    double next_double() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    // Uniform on [lo, hi].
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    // Uniform on {0, ..., n-1} via rejection (no modulo bias).
    std::uint64_t uniform_int(std::uint64_t n) {
        const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % n;
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace secbeam

#endif

#ifndef PD_RNG_HPP
#define PD_RNG_HPP

#include "pd/bytes.hpp"

#include <cstdint>

namespace pd {

// Deterministic counter-based generator (splitmix64). Every source of
// randomness in the toolkit flows through one of these so that experiments
// replay bit-exactly from a 64-bit seed.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : seed_(seed), counter_(0) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() {
        std::uint64_t z = seed_ + (++counter_) * 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), bound > 0. Rejection sampling, no modulo bias.
    std::uint64_t next_below(std::uint64_t bound);

    // Uniform double in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool next_bit() { return (next_u64() & 1) != 0; }

    Bytes bytes(std::size_t n);
    void fill(std::uint8_t* out, std::size_t n);

    // Independent stream for a sub-task (per-trial, per-adversary, ...).
    SeededRng fork(std::uint64_t stream) const {
        SeededRng child(seed_ ^ (0xd1342543de82ef95ULL * (stream + 1)));
        return child;
    }

private:
    std::uint64_t seed_;
    std::uint64_t counter_;
};

} // namespace pd

#endif

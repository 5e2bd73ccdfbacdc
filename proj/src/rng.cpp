#include "pd/rng.hpp"

#include "pd/errors.hpp"

namespace pd {

std::uint64_t SeededRng::next_below(std::uint64_t bound) {
    if (bound == 0) raise(Errc::domain, "next_below(0)");
    // Reject the tail that would bias the modulo.
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
    std::uint64_t v;
    do {
        v = next_u64();
    } while (v > limit);
    return v % bound;
}

Bytes SeededRng::bytes(std::size_t n) {
    Bytes out(n);
    fill(out.data(), n);
    return out;
}

void SeededRng::fill(std::uint8_t* out, std::size_t n) {
    std::size_t i = 0;
    while (i + 8 <= n) {
        std::uint64_t v = next_u64();
        for (int k = 0; k < 8; ++k) out[i + static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(v >> (8 * k));
        i += 8;
    }
    if (i < n) {
        std::uint64_t v = next_u64();
        for (; i < n; ++i) {
            out[i] = static_cast<std::uint8_t>(v);
            v >>= 8;
        }
    }
}

} // namespace pd

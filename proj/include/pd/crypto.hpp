#ifndef PD_CRYPTO_HPP
#define PD_CRYPTO_HPP

#include "pd/bytes.hpp"
#include "pd/rng.hpp"

#include <array>
#include <cstdint>
#include <optional>

namespace pd {

inline constexpr std::size_t KEY_BYTES = 32;

// Per-ciphertext expansion: 16-byte random nonce field + 16-byte tag.
// Schemes size their slots as block_size - CIPHER_OVERHEAD usable plaintext.
inline constexpr std::size_t CIPHER_OVERHEAD = 32;

struct Key {
    std::array<std::uint8_t, KEY_BYTES> bytes{};

    bool operator==(const Key&) const = default;
};

// Definition-style key pair: k_pub protects the public volume and is handed
// to the game adversary, k_hid never leaves the process.
struct KeyPair {
    Key k_pub;
    Key k_hid;
};

Key make_key(SeededRng& rng);
KeyPair make_key_pair(SeededRng& rng);

// Randomized authenticated encryption with ciphertexts indistinguishable
// from uniform random bytes. |ciphertext| = |plaintext| + CIPHER_OVERHEAD.
Bytes encrypt(const Key& key, ByteView plaintext, SeededRng& rng);

// Returns the plaintext iff `ciphertext` was produced under `key`;
// std::nullopt (authentication failure) otherwise. Schemes use the failure
// case to probe whether a block belongs to them.
std::optional<Bytes> decrypt(const Key& key, ByteView ciphertext);

} // namespace pd

#endif

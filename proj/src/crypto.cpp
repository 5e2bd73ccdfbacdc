#include "pd/crypto.hpp"

#include "pd/errors.hpp"

#include <sodium.h>

#include <cstring>

namespace pd {

namespace {

constexpr std::size_t NONCE_FIELD = 16; // stored; first 12 bytes feed the AEAD
constexpr std::size_t TAG_BYTES = crypto_aead_chacha20poly1305_ietf_ABYTES;

void ensure_sodium() {
    static const int rc = sodium_init();
    if (rc < 0) raise(Errc::config, "libsodium failed to initialize");
}

} // namespace

Key make_key(SeededRng& rng) {
    Key k;
    rng.fill(k.bytes.data(), k.bytes.size());
    return k;
}

KeyPair make_key_pair(SeededRng& rng) {
    KeyPair kp;
    kp.k_pub = make_key(rng);
    do {
        kp.k_hid = make_key(rng);
    } while (kp.k_hid == kp.k_pub);
    return kp;
}

Bytes encrypt(const Key& key, ByteView plaintext, SeededRng& rng) {
    ensure_sodium();
    static_assert(TAG_BYTES == 16);
    Bytes out(NONCE_FIELD + plaintext.size() + TAG_BYTES);
    rng.fill(out.data(), NONCE_FIELD);

    unsigned long long clen = 0;
    crypto_aead_chacha20poly1305_ietf_encrypt(
        out.data() + NONCE_FIELD, &clen, plaintext.data(), plaintext.size(), nullptr, 0, nullptr,
        out.data(), // first 12 of the 16 stored nonce bytes
        key.bytes.data());
    if (clen != plaintext.size() + TAG_BYTES) raise(Errc::config, "unexpected AEAD output length");
    return out;
}

std::optional<Bytes> decrypt(const Key& key, ByteView ciphertext) {
    ensure_sodium();
    if (ciphertext.size() < CIPHER_OVERHEAD) return std::nullopt;

    // +1 keeps out.data() non-null for zero-length plaintexts.
    Bytes out(ciphertext.size() - CIPHER_OVERHEAD + 1);
    unsigned long long mlen = 0;
    int rc = crypto_aead_chacha20poly1305_ietf_decrypt(
        out.data(), &mlen, nullptr, ciphertext.data() + NONCE_FIELD,
        ciphertext.size() - NONCE_FIELD, nullptr, 0, ciphertext.data(), key.bytes.data());
    if (rc != 0) return std::nullopt;
    out.resize(static_cast<std::size_t>(mlen));
    return out;
}

} // namespace pd

#include "pd/bytes.hpp"

#include "pd/errors.hpp"

#include <array>

namespace pd {

std::uint64_t fnv1a64(ByteView data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint8_t b : data) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string to_hex(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

std::string to_hex(ByteView data) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(data.size() * 2);
    for (std::uint8_t b : data) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 0xf]);
    }
    return s;
}

void put_u32(Bytes& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_u64(Bytes& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint32_t get_u32(ByteView in, std::size_t offset) {
    if (offset + 4 > in.size()) raise(Errc::precondition, "get_u32 past end of buffer");
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | in[offset + static_cast<std::size_t>(i)];
    return v;
}

std::uint64_t get_u64(ByteView in, std::size_t offset) {
    if (offset + 8 > in.size()) raise(Errc::precondition, "get_u64 past end of buffer");
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | in[offset + static_cast<std::size_t>(i)];
    return v;
}

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::out_of_range: return "OutOfRange";
        case Errc::bad_length: return "BadLength";
        case Errc::write_once_violation: return "WriteOnceViolation";
        case Errc::config: return "ConfigError";
        case Errc::rule_violation: return "RuleViolation";
        case Errc::volume_full: return "VolumeFull";
        case Errc::not_found: return "NotFound";
        case Errc::stash_overflow: return "StashOverflow";
        case Errc::log_full: return "LogFull";
        case Errc::queue_overflow: return "QueueOverflow";
        case Errc::no_invalid_pages: return "NoInvalidPages";
        case Errc::domain: return "DomainError";
        case Errc::precondition: return "PreconditionError";
        case Errc::usage: return "UsageError";
    }
    return "UnknownError";
}

} // namespace pd

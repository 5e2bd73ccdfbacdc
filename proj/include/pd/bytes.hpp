#ifndef PD_BYTES_HPP
#define PD_BYTES_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pd {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

// FNV-1a, used for trace/snapshot digests. Not cryptographic.
std::uint64_t fnv1a64(ByteView data);

std::string to_hex(std::uint64_t v);
std::string to_hex(ByteView data);

// Little-endian scalar packing for on-disk records.
void put_u32(Bytes& out, std::uint32_t v);
void put_u64(Bytes& out, std::uint64_t v);
std::uint32_t get_u32(ByteView in, std::size_t offset);
std::uint64_t get_u64(ByteView in, std::size_t offset);

} // namespace pd

#endif

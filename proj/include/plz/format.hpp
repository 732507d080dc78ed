#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "plz/params.hpp"

namespace plz {

inline constexpr std::array<std::uint8_t, 4> kMagic = {'P', 'L', 'Z', '1'};
inline constexpr std::uint8_t kFormatVersion = 1;
inline constexpr std::size_t kHeaderSize = 26;

// Fixed 26-byte little-endian header of one container block.
struct ContainerHeader {
    std::uint8_t symbol_width = 2;
    std::uint8_t window = 128;
    std::uint8_t interval = 1;
    std::uint32_t chunk_size = 2048;   // symbols
    std::uint64_t original_len = 0;    // bytes covered by this block
    std::uint32_t num_chunks = 0;
    std::uint8_t tail_len = 0;         // raw bytes, < symbol_width
};

// One serialized block: header, the two persisted global-scan outputs,
// then the contiguous flag and payload streams and the raw tail.
struct Container {
    ContainerHeader header;
    std::vector<std::uint32_t> payload_offsets;  // num_chunks+1 entries
    std::vector<std::uint32_t> flag_offsets;     // num_chunks+1 entries
    std::vector<std::uint8_t> flag_stream;
    std::vector<std::uint8_t> payload_stream;
    std::vector<std::uint8_t> tail;
};

// Matching Params for a header (min_match rederived, defaults elsewhere).
Params params_from_header(const ContainerHeader& h);

// Serializes as header | payload_offsets | flag_offsets | flag_stream |
// payload_stream | tail. Throws on invariant violations.
std::vector<std::uint8_t> write_container(const Container& c);
void append_container(std::vector<std::uint8_t>& out, const Container& c);

// Parses and validates one container starting at bytes[0]; `consumed`
// receives its serialized size. Throws unsupported_format_error on bad
// magic/version, corruption_error (with byte offset) on anything
// structurally wrong.
Container read_container(std::span<const std::uint8_t> bytes, std::size_t& consumed);

// Exact serialized size of a container with the given stream totals.
std::size_t container_size(std::uint32_t num_chunks, std::size_t flag_total,
                           std::size_t payload_total, std::uint8_t tail_len);

}  // namespace plz

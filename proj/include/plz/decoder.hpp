#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "plz/format.hpp"
#include "plz/params.hpp"

namespace plz {

// Decoded token, mainly for verification against the sequential oracle.
struct PlacedToken {
    std::size_t pos = 0;  // symbol position in the chunk
    bool is_pointer = false;
    std::uint8_t length = 0;  // pointer fields, symbol units
    std::uint8_t offset = 0;
    std::array<std::uint8_t, 4> literal{};  // first symbol_width bytes valid
};

// Reconstructs one chunk (logical_len * symbol_width bytes) from its flag
// and payload slices. Malformed input throws corruption_error carrying
// chunk and token indices; never reads outside the given spans.
std::vector<std::uint8_t> decompress_chunk(std::span<const std::uint8_t> flags,
                                           std::span<const std::uint8_t> payload,
                                           std::size_t logical_len, const Params& params,
                                           std::size_t chunk_index = 0);

// Token-level walk of a chunk's flag/payload slices without
// reconstructing data beyond what pointers require. Used by tests and
// the stats tooling.
std::vector<PlacedToken> parse_token_stream(std::span<const std::uint8_t> flags,
                                            std::span<const std::uint8_t> payload,
                                            std::size_t logical_len, const Params& params,
                                            std::size_t chunk_index = 0);

// Chunk-parallel decode of one container block.
std::vector<std::uint8_t> decompress(const Container& container, int threads = 0);

// Decodes a whole .plz byte image (one or more concatenated containers).
std::vector<std::uint8_t> decompress_bytes(std::span<const std::uint8_t> bytes,
                                           int threads = 0);

}  // namespace plz

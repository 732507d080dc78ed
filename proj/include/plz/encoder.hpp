#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "plz/matcher.hpp"
#include "plz/params.hpp"

namespace plz {

// Result of the sequential token-resolution walk over a match table.
// sizes is padded with zeros to the chunk_size power-of-two length so it
// can feed the local scan directly; positions covered by a pointer stay 0.
struct TokenPlan {
    std::vector<std::uint64_t> sizes;  // chunk_size entries
    std::vector<std::uint8_t> flags;   // MSB-first, one bit per token
    std::size_t token_count = 0;
};

// Compressed form of one chunk before deflation.
struct ChunkArtifacts {
    std::vector<std::uint8_t> flags;
    std::vector<std::uint8_t> payload;
    std::size_t token_count = 0;
};

// Walks the match table from position 0: a record with offset 0 or
// length below min_match becomes an S-byte literal; anything else a
// 2-byte pointer that skips its covered symbols.
TokenPlan resolve_tokens(const MatchTable& table, const Params& params);

// resolve_tokens + local scan + token writes at the scanned offsets.
// chunk_bytes is the raw input slice for this chunk (logical_len * S
// bytes); the match table length defines the logical length.
ChunkArtifacts encode_chunk(std::span<const std::uint8_t> chunk_bytes,
                            const MatchTable& table, const Params& params);

}  // namespace plz

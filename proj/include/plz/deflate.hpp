#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "plz/encoder.hpp"

namespace plz {

// Gap-free concatenation of per-chunk artifacts at globally scanned
// offsets. Offsets carry num_chunks+1 entries, the last being the stream
// total.
struct BlockOutput {
    std::vector<std::uint64_t> payload_offsets;
    std::vector<std::uint64_t> flag_offsets;
    std::vector<std::uint8_t> payload_stream;
    std::vector<std::uint8_t> flag_stream;
};

// Copies each chunk's payload and flags to its offset range. Offsets must
// be exclusive scans of the artifact sizes; mismatches throw.
BlockOutput deflate_block(const std::vector<ChunkArtifacts>& artifacts,
                          std::span<const std::uint64_t> payload_offsets,
                          std::span<const std::uint64_t> flag_offsets);

// Convenience overload computing the two global scans itself.
BlockOutput deflate_block(const std::vector<ChunkArtifacts>& artifacts);

}  // namespace plz

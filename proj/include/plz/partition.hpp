#pragma once

#include <cstdint>
#include <vector>

#include "plz/params.hpp"

namespace plz {

// One container block. Chunks are chunk_size symbols each except the
// last, whose logical length may be shorter. tail_len bytes at the very
// end do not form a whole symbol and are stored verbatim (only ever
// non-zero in the final block).
struct BlockPlan {
    std::uint64_t byte_start = 0;
    std::uint64_t byte_len = 0;
    std::uint32_t num_chunks = 0;
    std::uint32_t last_chunk_len = 0;  // symbols, in [1, chunk_size] when num_chunks > 0
    std::uint8_t tail_len = 0;         // bytes, < symbol_width
};

struct PartitionPlan {
    std::vector<BlockPlan> blocks;
};

// Splits [0, total_bytes) into blocks of params.block_bytes and sizes the
// chunks within each. Deterministic; blocks cover the input exactly.
PartitionPlan plan(std::uint64_t total_bytes, const Params& params);

}  // namespace plz

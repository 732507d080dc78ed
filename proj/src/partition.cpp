#include "plz/partition.hpp"

namespace plz {

PartitionPlan plan(std::uint64_t total_bytes, const Params& params) {
    PartitionPlan out;
    const std::uint64_t s = std::uint64_t(params.symbol_width);
    const std::uint64_t c = std::uint64_t(params.chunk_size);

    std::uint64_t pos = 0;
    while (pos < total_bytes) {
        BlockPlan b;
        b.byte_start = pos;
        b.byte_len = std::min<std::uint64_t>(params.block_bytes, total_bytes - pos);
        const std::uint64_t symbols = b.byte_len / s;
        b.tail_len = std::uint8_t(b.byte_len % s);
        if (symbols > 0) {
            b.num_chunks = std::uint32_t((symbols + c - 1) / c);
            b.last_chunk_len = std::uint32_t(symbols - std::uint64_t(b.num_chunks - 1) * c);
        }
        out.blocks.push_back(b);
        pos += b.byte_len;
    }
    return out;
}

}  // namespace plz

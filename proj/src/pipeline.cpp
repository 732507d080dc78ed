#include "plz/pipeline.hpp"

#include <atomic>
#include <limits>

#include "plz/deflate.hpp"
#include "plz/encoder.hpp"
#include "plz/errors.hpp"
#include "plz/matcher.hpp"
#include "plz/parallel.hpp"
#include "plz/scan.hpp"

namespace plz {

namespace {

void atomic_max(std::atomic<std::uint64_t>& target, std::uint64_t v) {
    std::uint64_t cur = target.load(std::memory_order_relaxed);
    while (cur < v &&
           !target.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
    }
}

}  // namespace

Container compress_block(std::span<const std::uint8_t> block, const BlockPlan& plan,
                         const Params& params, int threads, PipelineStats* stats) {
    if (block.size() != plan.byte_len)
        throw contract_error("block span does not match plan");
    const std::size_t s = std::size_t(params.symbol_width);
    const std::size_t c = std::size_t(params.chunk_size);
    const std::size_t n = plan.num_chunks;

    std::vector<ChunkArtifacts> artifacts(n);
    std::atomic<std::uint64_t> max_cmp{0};
    std::atomic<std::uint64_t> pointers{0};
    std::atomic<std::uint64_t> literals{0};

    parallel_for(n, threads, [&](std::size_t k) {
        const std::size_t logical = k + 1 == n ? plan.last_chunk_len : c;
        const std::span<const std::uint8_t> chunk_bytes =
            block.subspan(k * c * s, logical * s);
        std::vector<std::uint32_t> symbols;
        load_symbols(chunk_bytes, params.symbol_width, symbols);

        std::uint64_t chunk_max_cmp = 0;
        const MatchTable table =
            match_chunk(symbols, params, stats ? &chunk_max_cmp : nullptr);
        artifacts[k] = encode_chunk(chunk_bytes, table, params);

        if (stats) {
            atomic_max(max_cmp, chunk_max_cmp);
            std::uint64_t p = 0;
            for (const std::uint8_t b : artifacts[k].flags)
                p += std::uint64_t(__builtin_popcount(b));
            pointers.fetch_add(p, std::memory_order_relaxed);
            literals.fetch_add(artifacts[k].token_count - p,
                               std::memory_order_relaxed);
        }
    });

    BlockOutput out = deflate_block(artifacts);

    Container container;
    container.header.symbol_width = std::uint8_t(params.symbol_width);
    container.header.window = std::uint8_t(params.window);
    container.header.interval = std::uint8_t(params.interval);
    container.header.chunk_size = std::uint32_t(params.chunk_size);
    container.header.original_len = plan.byte_len;
    container.header.num_chunks = plan.num_chunks;
    container.header.tail_len = plan.tail_len;
    container.payload_offsets.assign(out.payload_offsets.begin(),
                                     out.payload_offsets.end());
    container.flag_offsets.assign(out.flag_offsets.begin(), out.flag_offsets.end());
    container.flag_stream = std::move(out.flag_stream);
    container.payload_stream = std::move(out.payload_stream);
    container.tail.assign(block.end() - plan.tail_len, block.end());

    if (stats) {
        if (max_cmp.load() > stats->max_cmp_per_pos)
            stats->max_cmp_per_pos = max_cmp.load();
        stats->pointer_tokens += pointers.load();
        stats->literal_tokens += literals.load();
    }
    return container;
}

std::vector<std::uint8_t> compress(std::span<const std::uint8_t> data,
                                   const Params& params, int threads,
                                   PipelineStats* stats) {
    const PartitionPlan pp = plan(data.size(), params);
    std::vector<std::uint8_t> out;
    for (const BlockPlan& b : pp.blocks) {
        const Container container = compress_block(
            data.subspan(b.byte_start, b.byte_len), b, params, threads, stats);
        append_container(out, container);
    }
    return out;
}

}  // namespace plz

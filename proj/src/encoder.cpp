#include "plz/encoder.hpp"

#include <cstring>

#include "plz/errors.hpp"
#include "plz/scan.hpp"

namespace plz {

namespace {

inline bool is_pointer(const MatchRecord& r, const Params& params) {
    return r.offset != 0 && r.length >= params.min_match;
}

}  // namespace

TokenPlan resolve_tokens(const MatchTable& table, const Params& params) {
    const std::size_t len = table.records.size();
    if (len > std::size_t(params.chunk_size))
        throw contract_error("match table longer than chunk_size");
    TokenPlan plan;
    plan.sizes.assign(std::size_t(params.chunk_size), 0);

    std::size_t i = 0;
    while (i < len) {
        if (plan.token_count % 8 == 0) plan.flags.push_back(0);
        const MatchRecord& r = table.records[i];
        if (is_pointer(r, params)) {
            if (i + r.length > len)
                throw contract_error("match overruns chunk logical end");
            plan.sizes[i] = 2;
            plan.flags.back() |= std::uint8_t(0x80u >> (plan.token_count % 8));
            i += r.length;
        } else {
            plan.sizes[i] = std::uint64_t(params.symbol_width);
            i += 1;
        }
        ++plan.token_count;
    }
    return plan;
}

ChunkArtifacts encode_chunk(std::span<const std::uint8_t> chunk_bytes,
                            const MatchTable& table, const Params& params) {
    const std::size_t len = table.records.size();
    const std::size_t s = std::size_t(params.symbol_width);
    if (chunk_bytes.size() != len * s)
        throw contract_error("chunk byte length does not match table length");

    TokenPlan plan = resolve_tokens(table, params);
    const std::uint64_t payload_size = local_exclusive_scan_inplace(plan.sizes);

    ChunkArtifacts art;
    art.flags = std::move(plan.flags);
    art.token_count = plan.token_count;
    art.payload.resize(payload_size);

    std::size_t i = 0;
    while (i < len) {
        const MatchRecord& r = table.records[i];
        std::uint8_t* dst = art.payload.data() + plan.sizes[i];
        if (is_pointer(r, params)) {
            dst[0] = r.length;  // length byte first, then offset
            dst[1] = r.offset;
            i += r.length;
        } else {
            std::memcpy(dst, chunk_bytes.data() + i * s, s);
            i += 1;
        }
    }
    return art;
}

}  // namespace plz

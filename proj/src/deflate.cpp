#include "plz/deflate.hpp"

#include <cstring>

#include "plz/errors.hpp"
#include "plz/scan.hpp"

namespace plz {

BlockOutput deflate_block(const std::vector<ChunkArtifacts>& artifacts,
                          std::span<const std::uint64_t> payload_offsets,
                          std::span<const std::uint64_t> flag_offsets) {
    const std::size_t n = artifacts.size();
    if (payload_offsets.size() != n + 1 || flag_offsets.size() != n + 1)
        throw contract_error("deflate offsets must have num_chunks+1 entries");

    BlockOutput out;
    out.payload_offsets.assign(payload_offsets.begin(), payload_offsets.end());
    out.flag_offsets.assign(flag_offsets.begin(), flag_offsets.end());
    out.payload_stream.resize(payload_offsets[n]);
    out.flag_stream.resize(flag_offsets[n]);

    for (std::size_t k = 0; k < n; ++k) {
        const ChunkArtifacts& a = artifacts[k];
        if (payload_offsets[k + 1] - payload_offsets[k] != a.payload.size() ||
            flag_offsets[k + 1] - flag_offsets[k] != a.flags.size())
            throw contract_error("deflate offsets do not match artifact sizes");
        if (!a.payload.empty())
            std::memcpy(out.payload_stream.data() + payload_offsets[k],
                        a.payload.data(), a.payload.size());
        if (!a.flags.empty())
            std::memcpy(out.flag_stream.data() + flag_offsets[k], a.flags.data(),
                        a.flags.size());
    }
    return out;
}

BlockOutput deflate_block(const std::vector<ChunkArtifacts>& artifacts) {
    std::vector<std::uint64_t> payload_sizes(artifacts.size());
    std::vector<std::uint64_t> flag_sizes(artifacts.size());
    for (std::size_t k = 0; k < artifacts.size(); ++k) {
        payload_sizes[k] = artifacts[k].payload.size();
        flag_sizes[k] = artifacts[k].flags.size();
    }
    return deflate_block(artifacts, global_exclusive_scan(payload_sizes),
                         global_exclusive_scan(flag_sizes));
}

}  // namespace plz

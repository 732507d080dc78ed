#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "plz/format.hpp"
#include "plz/params.hpp"
#include "plz/partition.hpp"

namespace plz {

// Optional instrumentation collected while compressing.
struct PipelineStats {
    std::uint64_t max_cmp_per_pos = 0;  // worst matcher comparison count
    std::uint64_t pointer_tokens = 0;
    std::uint64_t literal_tokens = 0;
};

// Compresses one block (three-stage pipeline: fused match/local-scan/
// encode per chunk, global scans, deflate). block must match the plan.
Container compress_block(std::span<const std::uint8_t> block, const BlockPlan& plan,
                         const Params& params, int threads = 0,
                         PipelineStats* stats = nullptr);

// Whole-input compression to a (possibly multi-block) .plz byte image.
// Bit-identical output for any thread count.
std::vector<std::uint8_t> compress(std::span<const std::uint8_t> data,
                                   const Params& params, int threads = 0,
                                   PipelineStats* stats = nullptr);

}  // namespace plz

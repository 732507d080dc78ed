#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace plz {

// In-place Blelloch two-sweep exclusive scan. `values.size()` must be a
// power of two. Returns the total (the up-sweep root, saved before it is
// zeroed for the down-sweep).
std::uint64_t local_exclusive_scan_inplace(std::span<std::uint64_t> values);

// Copying convenience wrapper: returns (offsets, total).
std::pair<std::vector<std::uint64_t>, std::uint64_t>
local_exclusive_scan(std::span<const std::uint64_t> sizes);

// Exclusive scan over per-chunk sizes; result has sizes.size()+1 entries,
// the last being the stream total. Throws if any offset would overflow
// the 4-byte container table entries.
std::vector<std::uint64_t> global_exclusive_scan(std::span<const std::uint64_t> chunk_sizes);

}  // namespace plz

#include "plz/scan.hpp"

#include <limits>

#include "plz/errors.hpp"

namespace plz {

std::uint64_t local_exclusive_scan_inplace(std::span<std::uint64_t> values) {
    const std::size_t n = values.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw contract_error("local scan requires a power-of-two length");

    // up-sweep: pairwise sums at stride 2^(step-1)
    for (std::size_t stride = 1; stride < n; stride <<= 1)
        for (std::size_t i = 2 * stride - 1; i < n; i += 2 * stride)
            values[i] += values[i - stride];

    // save the root, zero it, then down-sweep
    const std::uint64_t total = values[n - 1];
    values[n - 1] = 0;
    for (std::size_t stride = n >> 1; stride >= 1; stride >>= 1)
        for (std::size_t i = 2 * stride - 1; i < n; i += 2 * stride) {
            const std::uint64_t left = values[i - stride];
            values[i - stride] = values[i];
            values[i] += left;
        }
    return total;
}

std::pair<std::vector<std::uint64_t>, std::uint64_t>
local_exclusive_scan(std::span<const std::uint64_t> sizes) {
    std::vector<std::uint64_t> offsets(sizes.begin(), sizes.end());
    const std::uint64_t total = local_exclusive_scan_inplace(offsets);
    return {std::move(offsets), total};
}

std::vector<std::uint64_t> global_exclusive_scan(std::span<const std::uint64_t> chunk_sizes) {
    std::vector<std::uint64_t> offsets(chunk_sizes.size() + 1);
    offsets[0] = 0;
    for (std::size_t i = 0; i < chunk_sizes.size(); ++i) {
        offsets[i + 1] = offsets[i] + chunk_sizes[i];
        if (offsets[i + 1] > std::numeric_limits<std::uint32_t>::max())
            throw validation_error("block too large: offsets exceed 4-byte table range");
    }
    return offsets;
}

}  // namespace plz

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "plz/params.hpp"

namespace plz {

struct TunerOptions {
    double threshold = 1.5;                    // ratio below which S falls back to 1
    std::size_t pilot_cap = std::size_t{4} << 20;  // bytes of each field piloted
    int threads = 0;
};

struct PilotReport {
    std::vector<double> field_ratios;
    double average = 0.0;
    Params chosen;
};

// Pilot-compresses each field at the declared symbol width and picks the
// final symbol width and window: below-threshold average falls back to
// single-byte matching with the base window; otherwise the declared width
// is kept and the window grows S-fold (capped at 255).
PilotReport select_params(const std::vector<std::span<const std::uint8_t>>& fields,
                          int declared_width, const Params& base,
                          const TunerOptions& options = {});

}  // namespace plz

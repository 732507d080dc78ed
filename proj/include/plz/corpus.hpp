#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "plz/params.hpp"

namespace plz {

// Synthetic corpus generators; pure functions of the spec for
// reproducible tests and benchmarks.
struct GeneratorSpec {
    enum class Kind { runlen, quantlike, uniform };
    Kind kind = Kind::runlen;
    std::size_t size = 1 << 20;  // bytes
    std::uint64_t seed = 0;
    // runlen
    double mean_run = 64;  // symbols
    int alphabet = 4;
    // quantlike
    double dominant_prob = 0.9;
    int width = 2;  // bytes per emitted code
};

GeneratorSpec::Kind corpus_kind_from_name(const std::string& name);

std::vector<std::uint8_t> generate(const GeneratorSpec& spec);

// Tally of pointer lengths over a full compression pass at interval 1.
struct MatchHistogram {
    std::array<std::uint64_t, 256> counts{};  // symbol lengths 1..255
    std::uint64_t total_pointers = 0;
    int symbol_width = 1;
    double fraction_gt_128 = 0.0;  // of pointer byte-lengths (= length * S)
    double fraction_gt_256 = 0.0;
};

// When raw_table is false (default) the histogram counts matches actually
// selected as pointer tokens; when true it counts every per-position
// match in the raw match tables.
MatchHistogram match_length_histogram(std::span<const std::uint8_t> data,
                                      const Params& params, bool raw_table = false);

// CSV rows `length,count,byte_length,fraction_gt_128,fraction_gt_256`
// plus a trailing summary line.
std::string histogram_csv(const MatchHistogram& h);

}  // namespace plz

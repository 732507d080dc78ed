#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "plz/params.hpp"

namespace plz {

// One match per symbol position, in symbol units. length == 0 iff
// offset == 0 (no match). A forced literal under interval skipping is
// {length 1, offset 0}; the zero offset is what marks it as a literal.
struct MatchRecord {
    std::uint8_t length = 0;
    std::uint8_t offset = 0;
};

struct MatchTable {
    std::vector<MatchRecord> records;  // one per symbol of the chunk
};

// Loads S-byte little-endian symbols from raw bytes. bytes.size() must be
// a multiple of symbol_width.
void load_symbols(std::span<const std::uint8_t> bytes, int symbol_width,
                  std::vector<std::uint32_t>& out);

// Longest match for position `pos` over window starts w in
// [max(0, pos-W), pos). Candidate length counts consecutive equal symbols
// capped at min(pos-w, 255, chunk.size()-pos); ties go to the smallest w
// (largest offset). `cmp_counter`, when given, accumulates the number of
// symbol comparisons performed.
//
// `runs`, when non-empty, must be run_lengths(chunk); equal-run arithmetic
// then resolves repeated stretches without per-symbol comparisons. The
// result is identical either way.
MatchRecord find_match(std::span<const std::uint32_t> chunk, std::size_t pos,
                       const Params& params, std::uint64_t* cmp_counter = nullptr,
                       std::span<const std::uint32_t> runs = {});

// out[i] = length of the maximal run of equal symbols starting at i.
// Costs one symbol comparison per position.
void run_lengths(std::span<const std::uint32_t> chunk,
                 std::vector<std::uint32_t>& out);

// find_match at every interval-aligned position; {1,0} forced literals
// elsewhere. `max_cmp_per_pos`, when given, is raised to the largest
// per-position comparison count seen.
MatchTable match_chunk(std::span<const std::uint32_t> chunk, const Params& params,
                       std::uint64_t* max_cmp_per_pos = nullptr);

}  // namespace plz

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "plz/params.hpp"

namespace plz {
namespace oracle {

// Verification-only reference implementations. They share the matcher's
// result contract but none of its code: the window scan here is a plain
// exhaustive candidate loop.

struct OracleToken {
    std::size_t pos = 0;  // symbol position
    bool is_pointer = false;
    std::uint8_t length = 0;
    std::uint8_t offset = 0;
    std::array<std::uint8_t, 4> literal{};
};

// Textbook greedy left-to-right LZSS over a single chunk's bytes
// (data.size() <= chunk_size * symbol_width, interval treated as 1).
std::vector<OracleToken> sequential_lzss(std::span<const std::uint8_t> data,
                                         const Params& params);

// Payload bytes of the given token stream (2 per pointer, S per literal).
std::size_t payload_bytes(const std::vector<OracleToken>& tokens, const Params& params);

// Minimal payload byte count over all valid parses; dynamic program,
// inputs up to 64 symbols.
std::size_t optimal_parse(std::span<const std::uint8_t> data, const Params& params);

}  // namespace oracle
}  // namespace plz

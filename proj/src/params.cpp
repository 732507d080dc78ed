#include "plz/params.hpp"

#include <string>

#include "plz/errors.hpp"

namespace plz {

namespace {

bool is_pow2(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

[[noreturn]] void bad(const std::string& field, const std::string& legal) {
    throw validation_error("invalid " + field + ": legal range is " + legal);
}

}  // namespace

Params validate(Params raw) {
    if (raw.symbol_width != 1 && raw.symbol_width != 2 && raw.symbol_width != 4)
        bad("symbol_width", "{1,2,4}");
    if (raw.window < 4 || raw.window > 255)
        bad("window", "[4,255] (0 is reserved for no-match)");
    switch (raw.chunk_size) {
        case 1024: case 2048: case 4096: case 8192: case 16384: break;
        default: bad("chunk_size", "{1024,2048,4096,8192,16384}");
    }
    if (raw.chunk_size <= raw.window)
        bad("chunk_size", "greater than window");
    switch (raw.interval) {
        case 1: case 2: case 4: case 8: case 16: break;
        default: bad("interval", "{1,2,4,8,16}");
    }
    if (raw.chunk_size % raw.interval != 0)
        bad("interval", "a divisor of chunk_size");
    const std::size_t chunk_bytes =
        std::size_t(raw.chunk_size) * std::size_t(raw.symbol_width);
    if (raw.block_bytes == 0 || raw.block_bytes % chunk_bytes != 0)
        bad("block_bytes", "a positive multiple of chunk_size*symbol_width");
    if (!is_pow2(std::size_t(raw.chunk_size)))
        bad("chunk_size", "a power of two");

    raw.min_match = 2 / raw.symbol_width + 1;
    return raw;
}

int level_to_window(int level) {
    switch (level) {
        case 1: return 32;
        case 2: return 64;
        case 3: return 128;
        case 4: return 255;
        default: bad("level", "[1,4]");
    }
}

}  // namespace plz

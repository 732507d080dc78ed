#pragma once

#include <cstddef>
#include <cstdint>

namespace plz {

// Compression parameters shared by every pipeline stage. Immutable after
// validate(); cheap to copy.
//
//   symbol_width  S, bytes per matching unit (1, 2 or 4)
//   window        W, sliding window in symbols (4..255; 0 is reserved on
//                 the wire for "no match")
//   chunk_size    C, symbols per independently compressed chunk
//   interval      I, stride between full match searches
//   min_match     shortest match worth a 2-byte pointer; derived
//   block_bytes   bytes per container block; must be a multiple of C*S
struct Params {
    int symbol_width = 2;
    int window = 128;
    int chunk_size = 2048;
    int interval = 1;
    std::size_t block_bytes = std::size_t{256} << 20;
    int min_match = 2;  // derived, do not set by hand
};

// Checks every field against its legal range, derives min_match and
// returns the canonical Params. Throws validation_error naming the bad
// field otherwise.
Params validate(Params raw);

// Maps compression level 1..4 to window size 32/64/128/255.
int level_to_window(int level);

inline Params default_params() { return Params{}; }

}  // namespace plz

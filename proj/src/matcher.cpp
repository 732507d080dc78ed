#include "plz/matcher.hpp"

#include <algorithm>

#include "plz/errors.hpp"

namespace plz {

void load_symbols(std::span<const std::uint8_t> bytes, int symbol_width,
                  std::vector<std::uint32_t>& out) {
    if (bytes.size() % std::size_t(symbol_width) != 0)
        throw contract_error("symbol buffer not a multiple of symbol_width");
    const std::size_t n = bytes.size() / std::size_t(symbol_width);
    out.resize(n);
    switch (symbol_width) {
        case 1:
            for (std::size_t i = 0; i < n; ++i) out[i] = bytes[i];
            break;
        case 2:
            for (std::size_t i = 0; i < n; ++i)
                out[i] = std::uint32_t(bytes[2 * i]) |
                         (std::uint32_t(bytes[2 * i + 1]) << 8);
            break;
        case 4:
            for (std::size_t i = 0; i < n; ++i)
                out[i] = std::uint32_t(bytes[4 * i]) |
                         (std::uint32_t(bytes[4 * i + 1]) << 8) |
                         (std::uint32_t(bytes[4 * i + 2]) << 16) |
                         (std::uint32_t(bytes[4 * i + 3]) << 24);
            break;
        default:
            throw contract_error("symbol_width must be 1, 2 or 4");
    }
}

namespace {

// longest common prefix of chunk[w..] and chunk[pos..], capped at ub. When
// run lengths are available, a single comparison settles a whole pair of
// equal-symbol runs: if the runs differ in length the mismatch position is
// known without looking, and if they agree the scan skips past both.
std::size_t lcp_capped(const std::uint32_t* c, std::span<const std::uint32_t> runs,
                       std::size_t w, std::size_t pos, std::size_t ub,
                       std::uint64_t& cmps) {
    std::size_t k = 0;
    while (k < ub) {
        ++cmps;
        if (c[w + k] != c[pos + k]) return k;
        if (!runs.empty()) {
            const std::size_t a = runs[w + k];
            const std::size_t b = runs[pos + k];
            if (a != b) return std::min(ub, k + std::min(a, b));
            k += a;
        } else {
            ++k;
        }
    }
    return ub;
}

}  // namespace

void run_lengths(std::span<const std::uint32_t> chunk,
                 std::vector<std::uint32_t>& out) {
    const std::size_t n = chunk.size();
    out.resize(n);
    for (std::size_t i = n; i-- > 0;)
        out[i] = (i + 1 < n && chunk[i + 1] == chunk[i]) ? out[i + 1] + 1 : 1;
}

MatchRecord find_match(std::span<const std::uint32_t> chunk, std::size_t pos,
                       const Params& params, std::uint64_t* cmp_counter,
                       std::span<const std::uint32_t> runs) {
    const std::size_t n = chunk.size();
    const std::size_t w_max = std::size_t(params.window);
    const std::size_t lo = pos > w_max ? pos - w_max : 0;
    // length <= offset <= pos, length <= 255, match stays inside the chunk
    const std::size_t cap_max = std::min({std::size_t{255}, n - pos, pos});

    std::uint64_t cmps = 0;
    std::size_t best_len = 0;
    std::size_t best_w = 0;
    const std::uint32_t* c = chunk.data();

    for (std::size_t w = lo; w < pos; ++w) {
        const std::size_t ub = std::min(pos - w, cap_max);
        if (ub <= best_len) break;  // pos - w only shrinks from here on
        if (best_len > 0) {
            if (!runs.empty()) {
                // free rejection: if the leading runs differ in length, the
                // match (if any) ends exactly at the shorter one
                const std::uint32_t a = runs[w];
                const std::uint32_t b = runs[pos];
                if (a != b && std::size_t(std::min(a, b)) <= best_len) continue;
            }
            // a candidate can only beat best_len if it also matches there
            ++cmps;
            if (c[w + best_len] != c[pos + best_len]) continue;
        }
        const std::size_t k = lcp_capped(c, runs, w, pos, ub, cmps);
        if (k > best_len) {
            best_len = k;
            best_w = w;
            if (best_len == cap_max) break;
        }
    }

    if (cmp_counter) *cmp_counter += cmps;
    if (best_len == 0) return MatchRecord{0, 0};
    return MatchRecord{std::uint8_t(best_len), std::uint8_t(pos - best_w)};
}

MatchTable match_chunk(std::span<const std::uint32_t> chunk, const Params& params,
                       std::uint64_t* max_cmp_per_pos) {
    MatchTable table;
    table.records.resize(chunk.size());
    std::vector<std::uint32_t> runs;
    run_lengths(chunk, runs);
    const std::size_t interval = std::size_t(params.interval);
    for (std::size_t p = 0; p < chunk.size(); ++p) {
        if (p % interval != 0) {
            table.records[p] = MatchRecord{1, 0};  // forced literal
            continue;
        }
        // the +1 charges this position its amortized share of run_lengths
        std::uint64_t cmps = 1;
        table.records[p] = find_match(chunk, p, params, &cmps, runs);
        if (max_cmp_per_pos && cmps > *max_cmp_per_pos) *max_cmp_per_pos = cmps;
    }
    return table;
}

}  // namespace plz

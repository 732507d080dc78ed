#include "plz/oracle.hpp"

#include <algorithm>
#include <cstring>

#include "plz/errors.hpp"

namespace plz {
namespace oracle {

namespace {

std::vector<std::uint32_t> to_symbols(std::span<const std::uint8_t> data, int s) {
    if (data.size() % std::size_t(s) != 0)
        throw validation_error("oracle input not a multiple of symbol_width");
    std::vector<std::uint32_t> out(data.size() / std::size_t(s));
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint32_t v = 0;
        for (int b = 0; b < s; ++b)
            v |= std::uint32_t(data[i * std::size_t(s) + std::size_t(b)]) << (8 * b);
        out[i] = v;
    }
    return out;
}

// Exhaustive longest capped match; ties to the smallest window start.
std::pair<std::size_t, std::size_t> exhaustive_match(
    const std::vector<std::uint32_t>& sym, std::size_t pos, const Params& params) {
    const std::size_t n = sym.size();
    const std::size_t lo = pos > std::size_t(params.window) ? pos - params.window : 0;
    std::size_t best_len = 0, best_off = 0;
    for (std::size_t w = lo; w < pos; ++w) {
        const std::size_t cap = std::min({pos - w, std::size_t{255}, n - pos});
        std::size_t k = 0;
        while (k < cap && sym[w + k] == sym[pos + k]) ++k;
        if (k > best_len) {
            best_len = k;
            best_off = pos - w;
        }
    }
    return {best_len, best_off};
}

}  // namespace

std::vector<OracleToken> sequential_lzss(std::span<const std::uint8_t> data,
                                         const Params& params) {
    const std::size_t s = std::size_t(params.symbol_width);
    const std::vector<std::uint32_t> sym = to_symbols(data, params.symbol_width);
    if (sym.size() > std::size_t(params.chunk_size))
        throw validation_error("oracle input exceeds one chunk");

    std::vector<OracleToken> tokens;
    std::size_t pos = 0;
    while (pos < sym.size()) {
        const auto [len, off] = exhaustive_match(sym, pos, params);
        OracleToken t;
        t.pos = pos;
        if (len >= std::size_t(params.min_match)) {
            t.is_pointer = true;
            t.length = std::uint8_t(len);
            t.offset = std::uint8_t(off);
            pos += len;
        } else {
            std::memcpy(t.literal.data(), data.data() + pos * s, s);
            pos += 1;
        }
        tokens.push_back(t);
    }
    return tokens;
}

std::size_t payload_bytes(const std::vector<OracleToken>& tokens, const Params& params) {
    std::size_t bytes = 0;
    for (const OracleToken& t : tokens)
        bytes += t.is_pointer ? 2 : std::size_t(params.symbol_width);
    return bytes;
}

std::size_t optimal_parse(std::span<const std::uint8_t> data, const Params& params) {
    const std::vector<std::uint32_t> sym = to_symbols(data, params.symbol_width);
    const std::size_t n = sym.size();
    if (n > 64) throw validation_error("optimal_parse is limited to 64 symbols");

    constexpr std::size_t kInf = std::size_t(-1) / 2;
    std::vector<std::size_t> cost(n + 1, kInf);
    cost[n] = 0;
    for (std::size_t i = n; i-- > 0;) {
        cost[i] = std::size_t(params.symbol_width) + cost[i + 1];
        const std::size_t lo = i > std::size_t(params.window) ? i - params.window : 0;
        for (std::size_t w = lo; w < i; ++w) {
            const std::size_t cap = std::min({i - w, std::size_t{255}, n - i});
            std::size_t k = 0;
            while (k < cap && sym[w + k] == sym[i + k]) ++k;
            for (std::size_t len = std::size_t(params.min_match); len <= k; ++len)
                cost[i] = std::min(cost[i], 2 + cost[i + len]);
        }
    }
    return cost[0];
}

}  // namespace oracle
}  // namespace plz

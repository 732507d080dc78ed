#include "plz/decoder.hpp"

#include <cstring>
#include <string>

#include "plz/errors.hpp"
#include "plz/parallel.hpp"

namespace plz {

namespace {

[[noreturn]] void bad_token(const std::string& what, std::size_t chunk,
                            std::size_t token) {
    throw corruption_error("corrupt chunk " + std::to_string(chunk) + ", token " +
                               std::to_string(token) + ": " + what,
                           chunk, token);
}

// Shared walk over the flag bits. Emit is called once per token with the
// current write position (symbols); it returns the symbols consumed.
template <typename Emit>
void walk_tokens(std::span<const std::uint8_t> flags,
                 std::span<const std::uint8_t> payload, std::size_t logical_len,
                 const Params& params, std::size_t chunk_index, Emit&& emit) {
    const std::size_t s = std::size_t(params.symbol_width);
    std::size_t written = 0;  // symbols
    std::size_t in = 0;       // payload bytes
    std::size_t token = 0;

    while (written < logical_len) {
        const std::size_t bit = token;
        if (bit / 8 >= flags.size()) bad_token("flag bits exhausted", chunk_index, token);
        const bool pointer = (flags[bit / 8] >> (7 - bit % 8)) & 1;

        if (pointer) {
            if (in + 2 > payload.size()) bad_token("payload exhausted", chunk_index, token);
            const std::uint8_t length = payload[in];
            const std::uint8_t offset = payload[in + 1];
            in += 2;
            if (length == 0 || offset == 0)
                bad_token("zero pointer field", chunk_index, token);
            if (offset > written) bad_token("offset before chunk start", chunk_index, token);
            if (written + length > logical_len)
                bad_token("pointer overruns chunk", chunk_index, token);
            emit(written, PlacedToken{written, true, length, offset, {}});
            written += length;
        } else {
            if (in + s > payload.size()) bad_token("payload exhausted", chunk_index, token);
            PlacedToken t{written, false, 0, 0, {}};
            std::memcpy(t.literal.data(), payload.data() + in, s);
            in += s;
            emit(written, t);
            written += 1;
        }
        ++token;
    }
    if (in != payload.size())
        bad_token("trailing payload bytes", chunk_index, token);
    // padding bits beyond the last token must be zero
    for (std::size_t b = token; b < flags.size() * 8; ++b)
        if ((flags[b / 8] >> (7 - b % 8)) & 1)
            bad_token("nonzero flag padding", chunk_index, b);
    if (flags.size() != (token + 7) / 8)
        bad_token("flag bytes inconsistent with token count", chunk_index, token);
}

}  // namespace

std::vector<std::uint8_t> decompress_chunk(std::span<const std::uint8_t> flags,
                                           std::span<const std::uint8_t> payload,
                                           std::size_t logical_len, const Params& params,
                                           std::size_t chunk_index) {
    const std::size_t s = std::size_t(params.symbol_width);
    std::vector<std::uint8_t> out(logical_len * s);
    walk_tokens(flags, payload, logical_len, params, chunk_index,
                [&](std::size_t written, const PlacedToken& t) {
                    std::uint8_t* dst = out.data() + written * s;
                    if (t.is_pointer) {
                        // forward symbol-by-symbol copy; deterministic even
                        // for malformed overlapping pointers
                        const std::uint8_t* src = dst - std::size_t(t.offset) * s;
                        for (std::size_t k = 0; k < std::size_t(t.length) * s; ++k)
                            dst[k] = src[k];
                    } else {
                        std::memcpy(dst, t.literal.data(), s);
                    }
                });
    return out;
}

std::vector<PlacedToken> parse_token_stream(std::span<const std::uint8_t> flags,
                                            std::span<const std::uint8_t> payload,
                                            std::size_t logical_len, const Params& params,
                                            std::size_t chunk_index) {
    std::vector<PlacedToken> tokens;
    walk_tokens(flags, payload, logical_len, params, chunk_index,
                [&](std::size_t, const PlacedToken& t) { tokens.push_back(t); });
    return tokens;
}

std::vector<std::uint8_t> decompress(const Container& container, int threads) {
    const ContainerHeader& h = container.header;
    const Params params = params_from_header(h);
    const std::size_t s = std::size_t(h.symbol_width);
    const std::size_t c = std::size_t(h.chunk_size);
    const std::uint64_t symbols = (h.original_len - h.tail_len) / s;

    std::vector<std::uint8_t> out(h.original_len);
    parallel_for(h.num_chunks, threads, [&](std::size_t k) {
        const std::size_t logical =
            k + 1 == h.num_chunks ? std::size_t(symbols - k * c) : c;
        const std::span<const std::uint8_t> flags{
            container.flag_stream.data() + container.flag_offsets[k],
            container.flag_offsets[k + 1] - container.flag_offsets[k]};
        const std::span<const std::uint8_t> payload{
            container.payload_stream.data() + container.payload_offsets[k],
            container.payload_offsets[k + 1] - container.payload_offsets[k]};
        const std::vector<std::uint8_t> chunk =
            decompress_chunk(flags, payload, logical, params, k);
        std::memcpy(out.data() + k * c * s, chunk.data(), chunk.size());
    });
    if (h.tail_len)
        std::memcpy(out.data() + (h.original_len - h.tail_len), container.tail.data(),
                    h.tail_len);
    return out;
}

std::vector<std::uint8_t> decompress_bytes(std::span<const std::uint8_t> bytes,
                                           int threads) {
    std::vector<std::uint8_t> out;
    std::size_t at = 0;
    while (at < bytes.size()) {
        std::size_t consumed = 0;
        const Container c = read_container(bytes.subspan(at), consumed);
        std::vector<std::uint8_t> block = decompress(c, threads);
        out.insert(out.end(), block.begin(), block.end());
        at += consumed;
    }
    return out;
}

}  // namespace plz

#include <doctest.h>

#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <vector>

#include "plz/decoder.hpp"
#include "plz/errors.hpp"
#include "plz/pipeline.hpp"

using plz::Params;

namespace {

Params params(int s = 1, int w = 255, int c = 2048, int i = 1) {
    Params p;
    p.symbol_width = s;
    p.window = w;
    p.chunk_size = c;
    p.interval = i;
    return plz::validate(p);
}

std::vector<std::uint8_t> roundtrip(const std::vector<std::uint8_t>& data,
                                    const Params& p, int threads = 1) {
    return plz::decompress_bytes(plz::compress(data, p, threads), threads);
}

}  // namespace

TEST_CASE("literal-only chunk decodes to its payload") {
    std::vector<std::uint8_t> payload(8);
    std::iota(payload.begin(), payload.end(), std::uint8_t(10));
    const std::vector<std::uint8_t> flags = {0x00};
    const auto out = plz::decompress_chunk(flags, payload, 8, params());
    CHECK(out == payload);
}

TEST_CASE("the 16-equal-bytes artifacts invert to the input") {
    const std::vector<std::uint8_t> flags = {0x1C};
    const std::vector<std::uint8_t> payload = {0xAB, 0xAB, 0xAB, 3, 3, 6, 6, 4, 12};
    const auto out = plz::decompress_chunk(flags, payload, 16, params());
    CHECK(out == std::vector<std::uint8_t>(16, 0xAB));
}

TEST_CASE("roundtrip identity over a parameter grid") {
    std::mt19937_64 rng(61);
    for (int iter = 0; iter < 250; ++iter) {
        const Params p = params(std::array{1, 2, 4}[rng() % 3],
                                std::array{32, 64, 128, 255}[rng() % 4],
                                std::array{1024, 2048, 4096}[rng() % 3],
                                std::array{1, 2, 4, 8, 16}[rng() % 5]);
        std::vector<std::uint8_t> data(rng() % 30000);
        const int mode = int(rng() % 3);
        std::uint8_t run_val = 0;
        std::size_t run_left = 0;
        for (auto& b : data) {
            if (mode == 0) b = std::uint8_t(rng());
            else if (mode == 1) b = std::uint8_t(rng() % 3);
            else {
                if (run_left == 0) {
                    run_val = std::uint8_t(rng() % 5);
                    run_left = 1 + rng() % 600;
                }
                b = run_val;
                --run_left;
            }
        }
        CHECK(roundtrip(data, p) == data);
    }
}

TEST_CASE("empty input roundtrips to an empty file") {
    const auto image = plz::compress({}, params());
    CHECK(image.empty());
    CHECK(plz::decompress_bytes(image).empty());
}

TEST_CASE("multi-block images roundtrip") {
    Params p = params(2, 64, 1024);
    p.block_bytes = 1024 * 2 * 2;  // two chunks per block
    p = plz::validate(p);
    std::mt19937_64 rng(62);
    std::vector<std::uint8_t> data(5 * p.block_bytes + 777);
    for (auto& b : data) b = std::uint8_t(rng() % 9);
    const auto image = plz::compress(data, p);
    CHECK(plz::decompress_bytes(image) == data);
}

TEST_CASE("output is identical for any worker count") {
    std::mt19937_64 rng(63);
    std::vector<std::uint8_t> data(40000);
    for (auto& b : data) b = std::uint8_t(rng() % 4);
    const Params p = params(1, 128, 1024);
    const auto image1 = plz::compress(data, p, 1);
    for (int threads : {2, 4, 8}) {
        CHECK(plz::compress(data, p, threads) == image1);
        CHECK(plz::decompress_bytes(image1, threads) == data);
    }
}

TEST_CASE("chunk decode needs only its own slices") {
    std::mt19937_64 rng(64);
    std::vector<std::uint8_t> data(6000);
    for (auto& b : data) b = std::uint8_t(rng() % 3);
    const Params p = params(1, 128, 2048);
    const auto image = plz::compress(data, p);
    std::size_t consumed = 0;
    const plz::Container c = plz::read_container(image, consumed);
    REQUIRE(c.header.num_chunks == 3);

    const std::size_t k = 1;  // middle chunk in isolation
    const std::span<const std::uint8_t> flags{
        c.flag_stream.data() + c.flag_offsets[k],
        std::size_t(c.flag_offsets[k + 1] - c.flag_offsets[k])};
    const std::span<const std::uint8_t> payload{
        c.payload_stream.data() + c.payload_offsets[k],
        std::size_t(c.payload_offsets[k + 1] - c.payload_offsets[k])};
    const auto chunk = plz::decompress_chunk(flags, payload, 2048, p, k);
    CHECK(std::equal(chunk.begin(), chunk.end(), data.begin() + 2048));
}

TEST_CASE("malformed chunk data throws typed corruption, never crashes") {
    std::mt19937_64 rng(65);
    const Params p = params(1, 255, 1024);
    for (int iter = 0; iter < 3000; ++iter) {
        std::vector<std::uint8_t> flags(1 + rng() % 8);
        std::vector<std::uint8_t> payload(rng() % 64);
        for (auto& b : flags) b = std::uint8_t(rng());
        for (auto& b : payload) b = std::uint8_t(rng());
        const std::size_t logical = 1 + rng() % 200;
        try {
            const auto out = plz::decompress_chunk(flags, payload, logical, p, 7);
            CHECK(out.size() == logical);
        } catch (const plz::corruption_error& e) {
            CHECK(e.chunk_index == 7);
        }
    }
}

TEST_CASE("corrupting compressed bytes yields corruption errors") {
    std::mt19937_64 rng(66);
    std::vector<std::uint8_t> data(8000);
    for (auto& b : data) b = std::uint8_t(rng() % 3);
    const Params p = params();
    const auto image = plz::compress(data, p);
    int detected = 0;
    for (int iter = 0; iter < 200; ++iter) {
        auto bad = image;
        const std::size_t at = rng() % bad.size();
        bad[at] ^= std::uint8_t(1 + rng() % 255);
        try {
            const auto out = plz::decompress_bytes(bad);
            if (out != data) ++detected;  // silent difference is fine, crash is not
        } catch (const plz::error&) {
            ++detected;
        }
    }
    CHECK(detected > 0);
}

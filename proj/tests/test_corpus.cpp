#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "plz/corpus.hpp"
#include "plz/decoder.hpp"
#include "plz/pipeline.hpp"

using plz::GeneratorSpec;
using plz::Params;

TEST_CASE("generators are deterministic in their spec") {
    for (auto kind : {GeneratorSpec::Kind::runlen, GeneratorSpec::Kind::quantlike,
                      GeneratorSpec::Kind::uniform}) {
        GeneratorSpec spec;
        spec.kind = kind;
        spec.size = 100000;
        spec.seed = 99;
        CHECK(plz::generate(spec) == plz::generate(spec));
        spec.seed = 100;
        CHECK(plz::generate(spec) != plz::generate({kind, 100000, 99}));
    }
}

TEST_CASE("uniform output has near-maximal byte entropy") {
    GeneratorSpec spec;
    spec.kind = GeneratorSpec::Kind::uniform;
    spec.size = 1 << 20;
    spec.seed = 5;
    const auto data = plz::generate(spec);

    std::array<std::uint64_t, 256> hist{};
    for (std::uint8_t b : data) hist[b]++;
    double entropy = 0;
    for (std::uint64_t c : hist) {
        if (c == 0) continue;
        const double p = double(c) / double(data.size());
        entropy -= p * std::log2(p);
    }
    CHECK(entropy >= 7.9);
}

TEST_CASE("long runs compress past ratio 10") {
    GeneratorSpec spec;
    spec.kind = GeneratorSpec::Kind::runlen;
    spec.size = 4 << 20;
    spec.seed = 6;
    spec.mean_run = 512;
    spec.alphabet = 4;
    const auto data = plz::generate(spec);

    Params p;
    p.symbol_width = 1;
    p.window = 255;
    p.chunk_size = 8192;
    p = plz::validate(p);
    const auto image = plz::compress(data, p);
    CHECK(double(data.size()) / double(image.size()) > 10.0);
    CHECK(plz::decompress_bytes(image) == data);
}

TEST_CASE("all-distinct data has an empty histogram") {
    std::vector<std::uint8_t> data(256);
    for (std::size_t i = 0; i < 256; ++i) data[i] = std::uint8_t(i);
    const auto h = plz::match_length_histogram(data, plz::validate(Params{.symbol_width = 1}));
    CHECK(h.total_pointers == 0);
}

TEST_CASE("sixteen equal bytes tally pointer lengths 3, 6 and 4") {
    const std::vector<std::uint8_t> data(16, 0x7F);
    Params p;
    p.symbol_width = 1;
    p.window = 255;
    const auto h = plz::match_length_histogram(data, plz::validate(p));
    CHECK(h.total_pointers == 3);
    CHECK(h.counts[3] == 1);
    CHECK(h.counts[6] == 1);
    CHECK(h.counts[4] == 1);
}

TEST_CASE("histogram total equals the pipeline's pointer count") {
    GeneratorSpec spec;
    spec.kind = GeneratorSpec::Kind::runlen;
    spec.size = 300000;
    spec.seed = 7;
    spec.mean_run = 40;
    const auto data = plz::generate(spec);

    Params p;
    p.symbol_width = 2;
    p.window = 128;
    p = plz::validate(p);

    const auto h = plz::match_length_histogram(data, p);
    plz::PipelineStats stats;
    plz::compress(data, p, 1, &stats);
    CHECK(h.total_pointers == stats.pointer_tokens);

    std::uint64_t sum = 0;
    for (auto c : h.counts) sum += c;
    CHECK(sum == h.total_pointers);
}

TEST_CASE("byte lengths beyond 256 need multi-byte symbols") {
    GeneratorSpec spec;
    spec.kind = GeneratorSpec::Kind::runlen;
    spec.size = 1 << 20;
    spec.seed = 8;
    spec.mean_run = 600;
    spec.alphabet = 3;
    const auto data = plz::generate(spec);

    Params p1;
    p1.symbol_width = 1;
    p1.window = 255;
    p1.chunk_size = 8192;
    const auto h1 = plz::match_length_histogram(data, plz::validate(p1));
    CHECK(h1.fraction_gt_256 == 0.0);  // single-byte lengths cap at 255

    Params p2 = p1;
    p2.symbol_width = 2;
    const auto h2 = plz::match_length_histogram(data, plz::validate(p2));
    CHECK(h2.fraction_gt_256 > 0.0);
}

TEST_CASE("raw-table mode counts every matched position") {
    const std::vector<std::uint8_t> data(16, 0x01);
    Params p;
    p.symbol_width = 1;
    p.window = 255;
    const auto raw = plz::match_length_histogram(data, plz::validate(p), true);
    // every position past 0 has a match in all-equal data
    CHECK(raw.total_pointers == 15);
}

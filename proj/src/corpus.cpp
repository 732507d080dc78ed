#include "plz/corpus.hpp"

#include <random>
#include <sstream>

#include "plz/encoder.hpp"
#include "plz/errors.hpp"
#include "plz/matcher.hpp"
#include "plz/partition.hpp"

namespace plz {

GeneratorSpec::Kind corpus_kind_from_name(const std::string& name) {
    if (name == "runlen") return GeneratorSpec::Kind::runlen;
    if (name == "quantlike") return GeneratorSpec::Kind::quantlike;
    if (name == "uniform") return GeneratorSpec::Kind::uniform;
    throw validation_error("unknown corpus kind: " + name);
}

std::vector<std::uint8_t> generate(const GeneratorSpec& spec) {
    if (spec.size == 0) throw validation_error("corpus size must be > 0");
    std::mt19937_64 rng(spec.seed);
    std::vector<std::uint8_t> out;
    out.reserve(spec.size);

    switch (spec.kind) {
        case GeneratorSpec::Kind::uniform: {
            std::uniform_int_distribution<int> byte(0, 255);
            for (std::size_t i = 0; i < spec.size; ++i)
                out.push_back(std::uint8_t(byte(rng)));
            break;
        }
        case GeneratorSpec::Kind::runlen: {
            if (spec.mean_run < 1) throw validation_error("mean_run must be >= 1");
            if (spec.alphabet < 1 || spec.alphabet > 256)
                throw validation_error("alphabet must be in [1,256]");
            std::uniform_int_distribution<int> symbol(0, spec.alphabet - 1);
            // run = 1 + Geometric(p) so the mean run length is mean_run
            std::geometric_distribution<std::uint64_t> extra(
                spec.mean_run > 1 ? 1.0 / spec.mean_run : 1.0);
            while (out.size() < spec.size) {
                const std::uint8_t v = std::uint8_t(symbol(rng));
                std::uint64_t run = 1 + extra(rng);
                while (run-- && out.size() < spec.size) out.push_back(v);
            }
            break;
        }
        case GeneratorSpec::Kind::quantlike: {
            if (spec.dominant_prob < 0.0 || spec.dominant_prob > 1.0)
                throw validation_error("dominant_prob must be in [0,1]");
            if (spec.width != 1 && spec.width != 2 && spec.width != 4)
                throw validation_error("quantlike width must be 1, 2 or 4");
            std::bernoulli_distribution dominant(spec.dominant_prob);
            std::uniform_int_distribution<int> delta(1, 8);
            std::bernoulli_distribution negate(0.5);
            const std::uint32_t center = spec.width == 1 ? 128u
                                         : spec.width == 2 ? 32768u
                                                           : 1u << 30;
            while (out.size() < spec.size) {
                std::uint32_t code = center;
                if (!dominant(rng)) {
                    const int d = delta(rng);
                    code = negate(rng) ? center - std::uint32_t(d)
                                       : center + std::uint32_t(d);
                }
                for (int b = 0; b < spec.width && out.size() < spec.size; ++b)
                    out.push_back(std::uint8_t(code >> (8 * b)));
            }
            break;
        }
    }
    return out;
}

MatchHistogram match_length_histogram(std::span<const std::uint8_t> data,
                                      const Params& base, bool raw_table) {
    Params params = base;
    params.interval = 1;
    params = validate(params);

    MatchHistogram h;
    h.symbol_width = params.symbol_width;

    const PartitionPlan pp = plan(data.size(), params);
    const std::size_t s = std::size_t(params.symbol_width);
    const std::size_t c = std::size_t(params.chunk_size);

    for (const BlockPlan& b : pp.blocks) {
        for (std::size_t k = 0; k < b.num_chunks; ++k) {
            const std::size_t logical = k + 1 == b.num_chunks ? b.last_chunk_len : c;
            const auto chunk_bytes = data.subspan(b.byte_start + k * c * s, logical * s);
            std::vector<std::uint32_t> symbols;
            load_symbols(chunk_bytes, params.symbol_width, symbols);
            const MatchTable table = match_chunk(symbols, params);

            if (raw_table) {
                for (const MatchRecord& r : table.records)
                    if (r.offset != 0 && r.length > 0) {
                        h.counts[r.length]++;
                        h.total_pointers++;
                    }
            } else {
                std::size_t i = 0;
                while (i < logical) {
                    const MatchRecord& r = table.records[i];
                    if (r.offset != 0 && r.length >= params.min_match) {
                        h.counts[r.length]++;
                        h.total_pointers++;
                        i += r.length;
                    } else {
                        i += 1;
                    }
                }
            }
        }
    }

    if (h.total_pointers > 0) {
        std::uint64_t gt128 = 0, gt256 = 0;
        for (std::size_t len = 1; len <= 255; ++len) {
            const std::uint64_t byte_len = len * s;
            if (byte_len > 128) gt128 += h.counts[len];
            if (byte_len > 256) gt256 += h.counts[len];
        }
        h.fraction_gt_128 = double(gt128) / double(h.total_pointers);
        h.fraction_gt_256 = double(gt256) / double(h.total_pointers);
    }
    return h;
}

std::string histogram_csv(const MatchHistogram& h) {
    std::ostringstream out;
    out << "length,count,byte_length,fraction_gt_128,fraction_gt_256\n";
    for (std::size_t len = 1; len <= 255; ++len) {
        if (h.counts[len] == 0) continue;
        out << len << ',' << h.counts[len] << ',' << len * std::size_t(h.symbol_width)
            << ',' << h.fraction_gt_128 << ',' << h.fraction_gt_256 << '\n';
    }
    out << "total," << h.total_pointers << ",," << h.fraction_gt_128 << ','
        << h.fraction_gt_256 << '\n';
    return out.str();
}

}  // namespace plz

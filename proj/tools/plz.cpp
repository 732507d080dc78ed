// Command-line front end: compress, decompress, tune, stats, bench.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plz/corpus.hpp"
#include "plz/decoder.hpp"
#include "plz/errors.hpp"
#include "plz/params.hpp"
#include "plz/pipeline.hpp"
#include "plz/tuner.hpp"

namespace {

constexpr const char* kCsvHeader =
    "corpus,S,W,C,I,threads,in_bytes,out_bytes,ratio,seconds,throughput_bps\n";

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw plz::error("cannot open for reading: " + path);
    std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
    if (in.bad()) throw plz::error("read failed: " + path);
    return data;
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw plz::error("cannot open for writing: " + path);
    out.write(reinterpret_cast<const char*>(data.data()), std::streamsize(data.size()));
    if (!out) throw plz::error("write failed: " + path);
}

struct ParamFlags {
    int symbol_width = 2;
    int window = 128;
    int chunk = 2048;
    int interval = 1;
    int level = 0;
    std::size_t block_bytes = std::size_t{256} << 20;

    void attach(CLI::App* cmd) {
        cmd->add_option("-S,--symbol-width", symbol_width, "symbol width in bytes (1/2/4)");
        auto* w = cmd->add_option("-W,--window", window, "sliding window in symbols (4..255)");
        cmd->add_option("-C,--chunk", chunk, "chunk size in symbols");
        cmd->add_option("-I,--interval", interval, "match search interval");
        auto* l = cmd->add_option("--level", level, "window preset 1..4 (32/64/128/255)");
        cmd->add_option("--block-bytes", block_bytes, "bytes per container block");
        w->excludes(l);
        l->excludes(w);
    }

    plz::Params to_params() const {
        plz::Params p;
        p.symbol_width = symbol_width;
        p.window = level != 0 ? plz::level_to_window(level) : window;
        p.chunk_size = chunk;
        p.interval = interval;
        p.block_bytes = block_bytes;
        return plz::validate(p);
    }
};

struct RunReport {
    std::string corpus;
    plz::Params params;
    int threads = 0;
    std::uint64_t in_bytes = 0;
    std::uint64_t out_bytes = 0;
    double seconds = 0.0;

    double ratio() const {
        return out_bytes ? double(in_bytes) / double(out_bytes) : 0.0;
    }
    double throughput() const { return seconds > 0 ? double(in_bytes) / seconds : 0.0; }

    void print_kv(std::ostream& os) const {
        os << "input_bytes: " << in_bytes << '\n'
           << "output_bytes: " << out_bytes << '\n'
           << "ratio: " << ratio() << '\n'
           << "seconds: " << seconds << '\n'
           << "throughput_bps: " << throughput() << '\n'
           << "threads: " << threads << '\n'
           << "S: " << params.symbol_width << '\n'
           << "W: " << params.window << '\n'
           << "C: " << params.chunk_size << '\n'
           << "I: " << params.interval << '\n';
    }

    std::string csv_row() const {
        std::ostringstream os;
        os << corpus << ',' << params.symbol_width << ',' << params.window << ','
           << params.chunk_size << ',' << params.interval << ',' << threads << ','
           << in_bytes << ',' << out_bytes << ',' << ratio() << ',' << seconds << ','
           << throughput() << '\n';
        return os.str();
    }
};

void append_csv(const std::string& path, const std::string& row) {
    const bool fresh = !std::ifstream(path).good();
    std::ofstream out(path, std::ios::app);
    if (!out) throw plz::error("cannot open for writing: " + path);
    if (fresh) out << kCsvHeader;
    out << row;
}

RunReport timed_compress(const std::string& corpus_name,
                         const std::vector<std::uint8_t>& data,
                         const plz::Params& params, int threads,
                         std::vector<std::uint8_t>* out = nullptr) {
    RunReport r;
    r.corpus = corpus_name;
    r.params = params;
    r.threads = threads;
    r.in_bytes = data.size();
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<std::uint8_t> compressed = plz::compress(data, params, threads);
    const auto t1 = std::chrono::steady_clock::now();
    r.seconds = std::chrono::duration<double>(t1 - t0).count();
    r.out_bytes = compressed.size();
    if (out) *out = std::move(compressed);
    return r;
}

template <typename T>
std::vector<T> parse_list(const std::string& csv, const char* what) {
    std::vector<T> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(T(std::stoll(item)));
        } catch (...) {
            throw CLI::ValidationError(std::string(what) + ": bad list item '" + item + "'");
        }
    }
    if (out.empty()) throw CLI::ValidationError(std::string(what) + ": empty list");
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"chunk-parallel multi-byte LZSS compressor"};
    app.require_subcommand(1);

    // compress
    auto* compress_cmd = app.add_subcommand("compress", "compress a file to .plz");
    ParamFlags cflags;
    cflags.attach(compress_cmd);
    int cthreads = 0;
    std::string cin_path, cout_path, ccsv;
    compress_cmd->add_option("--threads", cthreads, "worker count (0 = hardware)");
    compress_cmd->add_option("--csv", ccsv, "append a CSV result row to this file");
    compress_cmd->add_option("input", cin_path)->required();
    compress_cmd->add_option("output", cout_path)->required();

    // decompress
    auto* decompress_cmd = app.add_subcommand("decompress", "decompress a .plz file");
    int dthreads = 0;
    std::string din_path, dout_path;
    decompress_cmd->add_option("--threads", dthreads, "worker count (0 = hardware)");
    decompress_cmd->add_option("input", din_path)->required();
    decompress_cmd->add_option("output", dout_path)->required();

    // tune
    auto* tune_cmd = app.add_subcommand("tune", "pick symbol width and window from a pilot pass");
    ParamFlags tflags;
    tflags.attach(tune_cmd);
    int declared_width = 2;
    double threshold = 1.5;
    std::size_t pilot_cap = std::size_t{4} << 20;
    std::string tune_out;
    std::vector<std::string> field_paths;
    tune_cmd->add_option("--declared-width", declared_width, "declared element width (1/2/4)")
        ->required();
    tune_cmd->add_option("--threshold", threshold, "pilot ratio threshold (default 1.5)");
    tune_cmd->add_option("--pilot-cap", pilot_cap, "max bytes piloted per field");
    tune_cmd->add_option("--out", tune_out, "write the report here instead of stdout");
    tune_cmd->add_option("fields", field_paths, "field files")->required();

    // stats
    auto* stats_cmd = app.add_subcommand("stats", "match-length histogram CSV");
    ParamFlags sflags;
    sflags.attach(stats_cmd);
    bool raw_table = false;
    std::string stats_in, stats_out;
    stats_cmd->add_flag("--raw", raw_table, "count raw per-position matches, not encoded ones");
    stats_cmd->add_option("--out", stats_out, "write CSV here instead of stdout");
    stats_cmd->add_option("input", stats_in)->required();

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "grid benchmark over synthetic corpora");
    std::string kinds = "runlen", s_list = "2", w_list = "128", c_list = "2048",
                i_list = "1", t_list = "0", bcsv;
    std::size_t bsize = 16u << 20;
    std::uint64_t bseed = 42;
    double mean_run = 64, dominant_prob = 0.9;
    int alphabet = 4, qwidth = 2;
    bench_cmd->add_option("--kind", kinds, "corpus kinds, comma separated");
    bench_cmd->add_option("--size", bsize, "corpus bytes");
    bench_cmd->add_option("--seed", bseed, "corpus seed");
    bench_cmd->add_option("--mean-run", mean_run, "runlen mean run (symbols)");
    bench_cmd->add_option("--alphabet", alphabet, "runlen alphabet size");
    bench_cmd->add_option("--dominant-prob", dominant_prob, "quantlike dominant probability");
    bench_cmd->add_option("--width", qwidth, "quantlike code width (bytes)");
    bench_cmd->add_option("-S,--symbol-width", s_list, "symbol widths, comma separated");
    bench_cmd->add_option("-W,--window", w_list, "windows, comma separated");
    bench_cmd->add_option("-C,--chunk", c_list, "chunk sizes, comma separated");
    bench_cmd->add_option("-I,--interval", i_list, "intervals, comma separated");
    bench_cmd->add_option("--threads", t_list, "thread counts, comma separated");
    bench_cmd->add_option("--csv", bcsv, "append rows to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*compress_cmd) {
            const std::vector<std::uint8_t> data = read_file(cin_path);
            std::vector<std::uint8_t> out;
            const RunReport r =
                timed_compress(cin_path, data, cflags.to_params(), cthreads, &out);
            write_file(cout_path, out);
            r.print_kv(std::cout);
            if (!ccsv.empty()) append_csv(ccsv, r.csv_row());
            return 0;
        }

        if (*decompress_cmd) {
            const std::vector<std::uint8_t> data = read_file(din_path);
            try {
                write_file(dout_path, plz::decompress_bytes(data, dthreads));
            } catch (const plz::corruption_error& e) {
                std::cerr << "error: " << e.what() << '\n';
                return 3;
            } catch (const plz::unsupported_format_error& e) {
                std::cerr << "error: " << e.what() << '\n';
                return 3;
            }
            return 0;
        }

        if (*tune_cmd) {
            std::vector<std::vector<std::uint8_t>> field_data;
            std::vector<std::span<const std::uint8_t>> fields;
            for (const std::string& path : field_paths)
                field_data.push_back(read_file(path));
            for (const auto& f : field_data) fields.emplace_back(f);

            plz::TunerOptions opts;
            opts.threshold = threshold;
            opts.pilot_cap = pilot_cap;
            const plz::PilotReport report =
                plz::select_params(fields, declared_width, tflags.to_params(), opts);

            std::ostringstream os;
            for (std::size_t i = 0; i < report.field_ratios.size(); ++i)
                os << "field_" << i << "_ratio: " << report.field_ratios[i] << '\n';
            os << "average_ratio: " << report.average << '\n'
               << "threshold: " << threshold << '\n'
               << "chosen_S: " << report.chosen.symbol_width << '\n'
               << "chosen_W: " << report.chosen.window << '\n'
               << "chosen_C: " << report.chosen.chunk_size << '\n'
               << "chosen_I: " << report.chosen.interval << '\n'
               << "chosen_flags: -S " << report.chosen.symbol_width << " -W "
               << report.chosen.window << " -C " << report.chosen.chunk_size << " -I "
               << report.chosen.interval << '\n';
            if (tune_out.empty()) {
                std::cout << os.str();
            } else {
                std::ofstream out(tune_out);
                if (!out) throw plz::error("cannot open for writing: " + tune_out);
                out << os.str();
            }
            return 0;
        }

        if (*stats_cmd) {
            const std::vector<std::uint8_t> data = read_file(stats_in);
            const std::string csv = plz::histogram_csv(
                plz::match_length_histogram(data, sflags.to_params(), raw_table));
            if (stats_out.empty()) {
                std::cout << csv;
            } else {
                std::ofstream out(stats_out);
                if (!out) throw plz::error("cannot open for writing: " + stats_out);
                out << csv;
            }
            return 0;
        }

        if (*bench_cmd) {
            const auto s_vals = parse_list<int>(s_list, "-S");
            const auto w_vals = parse_list<int>(w_list, "-W");
            const auto c_vals = parse_list<int>(c_list, "-C");
            const auto i_vals = parse_list<int>(i_list, "-I");
            const auto t_vals = parse_list<int>(t_list, "--threads");

            std::ostringstream rows;
            std::stringstream kind_ss(kinds);
            std::string kind_name;
            while (std::getline(kind_ss, kind_name, ',')) {
                plz::GeneratorSpec spec;
                spec.kind = plz::corpus_kind_from_name(kind_name);
                spec.size = bsize;
                spec.seed = bseed;
                spec.mean_run = mean_run;
                spec.alphabet = alphabet;
                spec.dominant_prob = dominant_prob;
                spec.width = qwidth;
                const std::vector<std::uint8_t> data = plz::generate(spec);

                for (int s : s_vals)
                    for (int w : w_vals)
                        for (int c : c_vals)
                            for (int i : i_vals)
                                for (int t : t_vals) {
                                    plz::Params p;
                                    p.symbol_width = s;
                                    p.window = w;
                                    p.chunk_size = c;
                                    p.interval = i;
                                    rows << timed_compress(kind_name, data,
                                                           plz::validate(p), t)
                                                .csv_row();
                                }
            }
            if (bcsv.empty()) {
                std::cout << kCsvHeader << rows.str();
            } else {
                append_csv(bcsv, rows.str());
            }
            return 0;
        }
    } catch (const plz::validation_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const plz::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }

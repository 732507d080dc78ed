#include "plz/format.hpp"

#include <cstring>
#include <string>

#include "plz/errors.hpp"

namespace plz {

namespace {

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(std::uint8_t(v));
    out.push_back(std::uint8_t(v >> 8));
    out.push_back(std::uint8_t(v >> 16));
    out.push_back(std::uint8_t(v >> 24));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(std::uint8_t(v >> (8 * i)));
}

std::uint32_t get_u32(const std::uint8_t* p) {
    return std::uint32_t(p[0]) | (std::uint32_t(p[1]) << 8) |
           (std::uint32_t(p[2]) << 16) | (std::uint32_t(p[3]) << 24);
}

std::uint64_t get_u64(const std::uint8_t* p) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t(p[i]) << (8 * i);
    return v;
}

[[noreturn]] void corrupt(const std::string& what, std::size_t offset) {
    throw corruption_error("corrupt container: " + what + " (byte " +
                               std::to_string(offset) + ")",
                           offset);
}

void check_tables(const Container& c) {
    const std::size_t n = c.header.num_chunks;
    if (c.payload_offsets.size() != n + 1 || c.flag_offsets.size() != n + 1)
        throw contract_error("offset tables must have num_chunks+1 entries");
    for (std::size_t i = 0; i < n; ++i) {
        if (c.payload_offsets[i + 1] < c.payload_offsets[i] ||
            c.flag_offsets[i + 1] < c.flag_offsets[i])
            throw contract_error("offset tables must be non-decreasing");
    }
    if (c.payload_offsets[0] != 0 || c.flag_offsets[0] != 0)
        throw contract_error("offset tables must start at 0");
    if (c.payload_offsets[n] != c.payload_stream.size() ||
        c.flag_offsets[n] != c.flag_stream.size())
        throw contract_error("stream lengths must match final table entries");
    if (c.tail.size() != c.header.tail_len)
        throw contract_error("tail length mismatch");
}

}  // namespace

Params params_from_header(const ContainerHeader& h) {
    Params p;
    p.symbol_width = h.symbol_width;
    p.window = h.window;
    p.interval = h.interval;
    p.chunk_size = int(h.chunk_size);
    return validate(p);
}

std::size_t container_size(std::uint32_t num_chunks, std::size_t flag_total,
                           std::size_t payload_total, std::uint8_t tail_len) {
    return kHeaderSize + 8 * (std::size_t(num_chunks) + 1) + flag_total +
           payload_total + tail_len;
}

void append_container(std::vector<std::uint8_t>& out, const Container& c) {
    check_tables(c);
    params_from_header(c.header);  // field bounds
    if (c.header.original_len < c.header.tail_len)
        throw contract_error("original_len smaller than tail");
    const std::uint64_t symbol_bytes = c.header.original_len - c.header.tail_len;
    if (symbol_bytes % c.header.symbol_width != 0)
        throw contract_error("original_len not aligned to symbols");
    const std::uint64_t symbols = symbol_bytes / c.header.symbol_width;
    if ((symbols + c.header.chunk_size - 1) / c.header.chunk_size != c.header.num_chunks)
        throw contract_error("num_chunks inconsistent with original_len");

    out.reserve(out.size() + container_size(c.header.num_chunks, c.flag_stream.size(),
                                            c.payload_stream.size(), c.header.tail_len));
    out.insert(out.end(), kMagic.begin(), kMagic.end());
    out.push_back(kFormatVersion);
    out.push_back(c.header.symbol_width);
    out.push_back(c.header.window);
    out.push_back(c.header.interval);
    out.push_back(0);  // reserved
    put_u32(out, c.header.chunk_size);
    put_u64(out, c.header.original_len);
    put_u32(out, c.header.num_chunks);
    out.push_back(c.header.tail_len);
    for (std::uint32_t v : c.payload_offsets) put_u32(out, v);
    for (std::uint32_t v : c.flag_offsets) put_u32(out, v);
    out.insert(out.end(), c.flag_stream.begin(), c.flag_stream.end());
    out.insert(out.end(), c.payload_stream.begin(), c.payload_stream.end());
    out.insert(out.end(), c.tail.begin(), c.tail.end());
}

std::vector<std::uint8_t> write_container(const Container& c) {
    std::vector<std::uint8_t> out;
    append_container(out, c);
    return out;
}

Container read_container(std::span<const std::uint8_t> bytes, std::size_t& consumed) {
    if (bytes.size() < kHeaderSize) corrupt("truncated header", bytes.size());
    if (std::memcmp(bytes.data(), kMagic.data(), 4) != 0)
        throw unsupported_format_error("not a PLZ1 container (bad magic)");
    if (bytes[4] != kFormatVersion)
        throw unsupported_format_error("unsupported container version " +
                                       std::to_string(int(bytes[4])));

    Container c;
    c.header.symbol_width = bytes[5];
    c.header.window = bytes[6];
    c.header.interval = bytes[7];
    if (bytes[8] != 0) corrupt("nonzero reserved byte", 8);
    c.header.chunk_size = get_u32(bytes.data() + 9);
    c.header.original_len = get_u64(bytes.data() + 13);
    c.header.num_chunks = get_u32(bytes.data() + 21);
    c.header.tail_len = bytes[25];

    Params params;
    try {
        params = params_from_header(c.header);
    } catch (const validation_error& e) {
        corrupt(e.what(), 5);
    }
    if (c.header.tail_len >= c.header.symbol_width) corrupt("tail_len >= symbol_width", 25);

    // layout arithmetic, checked against the available bytes step by step
    const std::size_t n = c.header.num_chunks;
    std::size_t at = kHeaderSize;
    if (bytes.size() < at + 8 * (n + 1)) corrupt("truncated offset tables", bytes.size());
    c.payload_offsets.resize(n + 1);
    c.flag_offsets.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i, at += 4)
        c.payload_offsets[i] = get_u32(bytes.data() + at);
    for (std::size_t i = 0; i <= n; ++i, at += 4)
        c.flag_offsets[i] = get_u32(bytes.data() + at);
    for (std::size_t i = 0; i < n; ++i) {
        if (c.payload_offsets[i + 1] < c.payload_offsets[i])
            corrupt("payload offsets not monotone", kHeaderSize + 4 * (i + 1));
        if (c.flag_offsets[i + 1] < c.flag_offsets[i])
            corrupt("flag offsets not monotone", kHeaderSize + 4 * (n + 1) + 4 * (i + 1));
    }
    if (c.payload_offsets[0] != 0) corrupt("payload offsets must start at 0", kHeaderSize);
    if (c.flag_offsets[0] != 0)
        corrupt("flag offsets must start at 0", kHeaderSize + 4 * (n + 1));

    const std::size_t flag_total = c.flag_offsets[n];
    const std::size_t payload_total = c.payload_offsets[n];
    const std::size_t need =
        container_size(c.header.num_chunks, flag_total, payload_total, c.header.tail_len);
    if (bytes.size() < need) corrupt("truncated streams", bytes.size());

    // original_len must cover exactly the declared chunks plus the tail
    const std::uint64_t s = c.header.symbol_width;
    const std::uint64_t cs = c.header.chunk_size;
    if (c.header.original_len < c.header.tail_len) corrupt("original_len too small", 13);
    const std::uint64_t symbol_bytes = c.header.original_len - c.header.tail_len;
    if (symbol_bytes % s != 0) corrupt("original_len not aligned to symbols", 13);
    const std::uint64_t symbols = symbol_bytes / s;
    const std::uint64_t expect_chunks = (symbols + cs - 1) / cs;
    if (expect_chunks != n) corrupt("num_chunks inconsistent with original_len", 21);

    c.flag_stream.assign(bytes.begin() + long(at), bytes.begin() + long(at + flag_total));
    at += flag_total;
    c.payload_stream.assign(bytes.begin() + long(at),
                            bytes.begin() + long(at + payload_total));
    at += payload_total;
    c.tail.assign(bytes.begin() + long(at), bytes.begin() + long(at + c.header.tail_len));
    at += c.header.tail_len;

    (void)params;
    consumed = at;
    return c;
}

}  // namespace plz

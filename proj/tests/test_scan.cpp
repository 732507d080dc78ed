#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "plz/errors.hpp"
#include "plz/scan.hpp"

namespace {

// sequential reference
std::vector<std::uint64_t> seq_exclusive(const std::vector<std::uint64_t>& sizes) {
    std::vector<std::uint64_t> out(sizes.size());
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        out[i] = acc;
        acc += sizes[i];
    }
    return out;
}

}  // namespace

TEST_CASE("two-sweep scan matches the worked example") {
    const std::vector<std::uint64_t> sizes = {3, 1, 7, 0, 4, 1, 6, 3};
    const auto [offsets, total] = plz::local_exclusive_scan(sizes);
    CHECK(offsets == std::vector<std::uint64_t>{0, 3, 4, 11, 11, 15, 16, 22});
    CHECK(total == 25);
}

TEST_CASE("all zeros scan to zeros") {
    const std::vector<std::uint64_t> sizes(8, 0);
    const auto [offsets, total] = plz::local_exclusive_scan(sizes);
    CHECK(offsets == std::vector<std::uint64_t>(8, 0));
    CHECK(total == 0);
}

TEST_CASE("single nonzero propagates") {
    const std::vector<std::uint64_t> sizes = {5, 0, 0, 0, 0, 0, 0, 0};
    const auto [offsets, total] = plz::local_exclusive_scan(sizes);
    CHECK(offsets == std::vector<std::uint64_t>{0, 5, 5, 5, 5, 5, 5, 5});
    CHECK(total == 5);
}

TEST_CASE("two-sweep equals sequential scan for all power-of-two lengths") {
    std::mt19937_64 rng(21);
    for (std::size_t n = 1; n <= (1u << 14); n <<= 1) {
        for (int rep = 0; rep < 50; ++rep) {
            std::vector<std::uint64_t> sizes(n);
            for (auto& v : sizes) v = rng() % 10;
            const auto [offsets, total] = plz::local_exclusive_scan(sizes);
            const auto want = seq_exclusive(sizes);
            CHECK(offsets == want);
            CHECK(total == want.back() + sizes.back());
        }
    }
}

TEST_CASE("non-power-of-two length is a contract violation") {
    const std::vector<std::uint64_t> sizes(7, 1);
    CHECK_THROWS_AS(plz::local_exclusive_scan(sizes), plz::contract_error);
    CHECK_THROWS_AS(plz::local_exclusive_scan(std::vector<std::uint64_t>{}),
                    plz::contract_error);
}

TEST_CASE("global scan examples") {
    CHECK(plz::global_exclusive_scan(std::vector<std::uint64_t>{9, 4, 12}) ==
          std::vector<std::uint64_t>{0, 9, 13, 25});
    CHECK(plz::global_exclusive_scan(std::vector<std::uint64_t>{}) ==
          std::vector<std::uint64_t>{0});
    CHECK(plz::global_exclusive_scan(std::vector<std::uint64_t>{0, 0}) ==
          std::vector<std::uint64_t>{0, 0, 0});
}

TEST_CASE("global scan rejects 4-byte offset overflow") {
    const std::vector<std::uint64_t> sizes = {std::uint64_t(1) << 32};
    CHECK_THROWS_AS(plz::global_exclusive_scan(sizes), plz::validation_error);
}

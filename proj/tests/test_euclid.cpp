#include <doctest.h>

#include <numeric>
#include <stdexcept>
#include <vector>

#include "blockcycle/euclid.hpp"

using namespace blockcycle;

namespace {

// Straight Euclid without the library.
std::uint64_t naive_remainder_sum(std::uint64_t a, std::uint64_t b) {
    std::uint64_t sum = 0;
    while (b != 0) {
        sum += b;
        const std::uint64_t r = a % b;
        a = b;
        b = r;
    }
    return sum;
}

}  // namespace

TEST_CASE("euclid trace of (21, 8)") {
    const EuclidTrace t = euclid_trace(21, 8);
    CHECK(t.remainders == std::vector<std::uint64_t>{8, 5, 3, 2, 1});
    CHECK(t.quotients == std::vector<std::uint64_t>{2, 1, 1, 1, 2});
    CHECK(t.gcd() == 1);
    CHECK(t.remainder_sum() == 19);
}

TEST_CASE("euclid trace edge cases") {
    CHECK(euclid_trace(12, 0).remainders.empty());
    CHECK(euclid_trace(12, 0).gcd() == 12);
    CHECK(euclid_trace(12, 12).remainders == std::vector<std::uint64_t>{12});
    CHECK(euclid_trace(12, 8).gcd() == 4);
    CHECK_THROWS_AS((void)euclid_trace(0, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)euclid_trace(5, 6), std::out_of_range);
}

TEST_CASE("remainder sums") {
    CHECK(remainder_sum(21, 8) == 19);
    CHECK(remainder_sum(9, 0) == 0);
    CHECK(remainder_sum(9, 9) == 9);
    for (std::uint64_t n = 1; n <= 300; ++n) {
        for (std::uint64_t k = 0; k <= n; ++k) {
            REQUIRE(remainder_sum(n, k) == naive_remainder_sum(n, k));
            REQUIRE(euclid_trace(n, k).remainder_sum() == remainder_sum(n, k));
        }
    }
}

TEST_CASE("closed-form move count agrees with the recurrence") {
    CHECK(move_count(21, 8) == 58);
    CHECK(move_count(34, 13) == 97);
    CHECK(move_count(2, 1) == 3);
    CHECK(move_count(7, 0) == 0);
    CHECK(move_count(7, 7) == 0);
    for (std::uint64_t n = 1; n <= 400; ++n) {
        for (std::uint64_t k = 0; k <= n; ++k) {
            REQUIRE(block_cycle_cost(n, k, 1) == move_count(n, k));
        }
    }
}

TEST_CASE("buffered recurrence") {
    CHECK(block_cycle_cost(10, 3, 3) == 13);
    CHECK(block_cycle_cost(10, 3, 100) == 13);
    CHECK(block_cycle_cost(21, 8, 8) == 29);
    CHECK_THROWS_AS((void)block_cycle_cost(10, 3, 0), std::invalid_argument);
    for (std::uint64_t n = 2; n <= 120; ++n) {
        for (std::uint64_t k = 0; k <= n; ++k) {
            REQUIRE(block_cycle_cost(n, k, 4) <= block_cycle_cost(n, k, 1));
            REQUIRE(block_cycle_cost(n, k, 4) == block_cycle_cost(n, n - k, 4));
        }
    }
}

TEST_CASE("average cost") {
    CHECK(avg_cost(1).total_moves == 0);
    CHECK(avg_cost(1).per_element() == 0.0);
    CHECK(avg_cost(2).average() == doctest::Approx(1.5));
    CHECK(avg_cost(2).per_element() == doctest::Approx(0.75));
    std::uint64_t total = 0;
    for (std::uint64_t k = 0; k < 97; ++k) {
        total += move_count(97, k);
    }
    CHECK(avg_cost(97).total_moves == total);
    CHECK_THROWS_AS((void)avg_cost(0), std::invalid_argument);
}

TEST_CASE("full-range remainder average") {
    std::uint64_t total = 0;
    for (std::uint64_t k = 1; k <= 50; ++k) {
        total += remainder_sum(50, k);
    }
    CHECK(avg_remainder_full(50).total == total);
    CHECK(avg_remainder_full(1).average() == doctest::Approx(1.0));
}

TEST_CASE("small traces and remainder-sum examples") {
    CHECK(euclid_trace(13, 1).remainders == std::vector<std::uint64_t>{1});
    CHECK(euclid_trace(6, 3).remainders == std::vector<std::uint64_t>{3});
    CHECK(remainder_sum(13, 8) == 19);
    CHECK(remainder_sum(13, 8) == 8 + remainder_sum(13, 5));
    for (std::uint64_t n = 1; n <= 50; ++n) {
        CHECK(remainder_sum(n, 1) == 1);
    }
    CHECK(avg_remainder_full(2).average() == 1.5);
    CHECK(avg_remainder_full(1).total == 1);
}

TEST_CASE("reflection and scaling of remainder sums") {
    for (std::uint64_t n = 2; n <= 300; ++n) {
        for (std::uint64_t k = n / 2 + 1; k < n; ++k) {
            REQUIRE(remainder_sum(n, k) == k + remainder_sum(n, n - k));
        }
    }
    for (std::uint64_t n = 1; n <= 100; ++n) {
        for (std::uint64_t k = 1; k <= n; ++k) {
            if (std::gcd(n, k) != 1) {
                continue;
            }
            for (std::uint64_t g = 1; g <= 10; ++g) {
                REQUIRE(remainder_sum(g * n, g * k) == g * remainder_sum(n, k));
            }
        }
    }
}

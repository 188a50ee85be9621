#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "blockcycle/constants.hpp"
#include "blockcycle/cost_model.hpp"
#include "blockcycle/euclid.hpp"
#include "blockcycle/rotation.hpp"

using namespace blockcycle;

namespace {

const double kPeak = (3.0 - std::sqrt(5.0)) / 2.0;

}  // namespace

TEST_CASE("series depth policy") {
    CHECK(SeriesDepthPolicy{}.depth() == 53);
    CHECK(SeriesDepthPolicy{1e-30, 64}.depth() == 64);
    CHECK(SeriesDepthPolicy{2.0, 64}.depth() == 0);
    CHECK_THROWS_AS((void)SeriesDepthPolicy({0.0, 64}).depth(), std::domain_error);
    CHECK_THROWS_AS((void)SeriesDepthPolicy({1e-9, -1}).depth(), std::domain_error);
}

TEST_CASE("Gauss maps") {
    CHECK(gauss_fraction(2.75) == 0.75);
    CHECK(inside_map(0.0) == 0.0);
    CHECK(outside_map(0.0) == 0.0);
    CHECK(inside_map(0.4) == doctest::Approx(0.5 / 1.5));
    CHECK(outside_map(0.4) == doctest::Approx(0.6));
    CHECK(inside_map(0.5) == 0.0);
    CHECK_THROWS_AS((void)inside_map(0.6), std::domain_error);
    CHECK_THROWS_AS((void)outside_map(-0.1), std::domain_error);
    CHECK_THROWS_AS((void)gauss_fraction(-1.0), std::domain_error);
    for (double x : sample_grid(4096)) {
        REQUIRE(outside_map(x) <= 2.0 / 3.0 + 1e-15);
        REQUIRE(inside_map(x) <= 0.5);
    }
}

TEST_CASE("continuous recurrence reproduces the integer costs") {
    // The real-valued recurrence has no zero-shift case: a run that reaches
    // a zero remainder while the shift still exceeds the buffer pays a final
    // nu = gcd(n, k) on top of the integer cost.
    for (std::uint64_t n = 1; n <= 120; ++n) {
        for (std::uint64_t k = 0; k <= n; ++k) {
            for (std::uint64_t b : {1u, 3u}) {
                const double phi = simple_cost({double(n), double(k), double(b)});
                const std::uint64_t g = std::gcd(n, k);
                std::uint64_t expected = block_cycle_cost(n, k, b) + (g > b ? g : 0);
                if (k == 0 || k == n) {
                    expected = n;
                }
                INFO("n=" << n << " k=" << k << " b=" << b);
                REQUIRE(phi == double(expected));
            }
        }
    }
    CHECK(simple_cost({21.0, 8.0, 1.0}) == 58.0);
    CHECK(simple_cost({2.0, 1.0, 1.0}) == 3.0);
}

TEST_CASE("continuous recurrence parameter checks") {
    CHECK(simple_cost({1.0, 0.25, 0.5}) == 1.25);
    CHECK_THROWS_AS((void)simple_cost({1.0, 0.3, 0.0}), std::domain_error);
    CHECK_THROWS_AS((void)simple_cost({1.0, 1.5, 0.1}), std::domain_error);
    CHECK_THROWS_AS((void)simple_cost({0.0, 0.0, 0.1}), std::domain_error);
}

TEST_CASE("exact f at rationals") {
    CHECK(rel_cost(Fraction(8, 21)) == Fraction(59, 21));
    CHECK(rel_cost(Fraction(13, 21)) == Fraction(59, 21));
    CHECK(rel_cost(Fraction(0)) == Fraction(1));
    CHECK(rel_cost(Fraction(1, 2)) == Fraction(2));
    CHECK(psi(Fraction(8, 21)) == Fraction(38, 21));
    for (std::int64_t n = 2; n <= 80; ++n) {
        for (std::int64_t k = 1; k < n; ++k) {
            const Fraction f = rel_cost(Fraction(k, n));
            // n f(k/n) - gcd(n, k) is the block cycle move count.
            const Fraction moves = Fraction(n) * f - Fraction(std::gcd(n, k));
            REQUIRE(moves == Fraction(static_cast<std::int64_t>(move_count(n, k))));
        }
    }
    CHECK_THROWS_AS((void)rel_cost(Fraction(3, 2)), std::domain_error);
    CHECK_THROWS_AS((void)psi(Fraction(2, 3)), std::domain_error);
}

TEST_CASE("series psi at rational points follows the exact orbit") {
    const std::vector<std::pair<int, int>> points{{1, 3}, {2, 5}, {3, 8}, {8, 21}, {5, 12}, {1, 2}, {7, 19}, {3, 10}};
    for (auto [k, n] : points) {
        INFO("x=" << k << "/" << n);
        CHECK(psi(double(k) / double(n)) == doctest::Approx(psi(Fraction(k, n)).to_double()).epsilon(1e-9));
        CHECK(rel_cost(1.0 - double(k) / double(n)) == doctest::Approx(rel_cost(Fraction(k, n)).to_double()));
    }
    CHECK(psi(0.0) == 0.0);
    CHECK(psi(0.5) == 1.0);
    CHECK(psi(0.4) == doctest::Approx(1.2));
    CHECK(rel_cost(0.4) == doctest::Approx(11.0 / 5.0));
}

TEST_CASE("f is symmetric, bounded by 1 and 3, and peaks at the golden point") {
    CHECK(rel_cost(0.0) == 1.0);
    CHECK(rel_cost(1.0) == 1.0);
    CHECK(rel_cost(0.5) == 2.0);
    CHECK(std::abs(rel_cost(kPeak) - 3.0) < 1e-7);
    double top = 0.0;
    double arg = 0.0;
    for (double x : sample_grid(4096)) {
        const double f = rel_cost(x);
        REQUIRE(f >= 1.0);
        REQUIRE(f <= 3.0);
        REQUIRE(rel_cost(1.0 - x) == doctest::Approx(f).epsilon(1e-9));
        if (f > top) {
            top = f;
            arg = x;
        }
    }
    CHECK(top >= 2.99);
    CHECK(std::abs(arg - kPeak) < 1e-3);
}

TEST_CASE("buffered curves") {
    const std::vector<double> grid = sample_grid(4096);
    for (double x : grid) {
        REQUIRE(rel_cost_buffered(x, 0.5) == doctest::Approx(1.0 + x).epsilon(1e-15));
        double previous = rel_cost(x) + 1e-9;
        for (double beta : {0.01, 0.05, 0.1, 0.2, 0.3, 0.5, 1.0}) {
            const double f = rel_cost_buffered(x, beta);
            REQUIRE(f <= previous);
            previous = f;
        }
    }
}

TEST_CASE("expected costs") {
    CHECK(expected_cost(0.5, 16) == 1.25);
    CHECK(expected_cost(0.75, 16) == 1.25);
    CHECK(expected_cost(0.1, 1 << 16) == doctest::Approx(1.73).epsilon(0.02 / 1.73));
    CHECK(expected_cost(0.2, 1 << 16) == doctest::Approx(1.60).epsilon(0.02 / 1.60));
    CHECK(expected_cost(0.3, 1 << 16) == doctest::Approx(1.49).epsilon(0.02 / 1.49));
    CHECK(expected_cost(0.1, 1 << 14) > expected_cost(0.2, 1 << 14));
    CHECK(expected_cost(0.0, 1 << 14) > expected_cost(0.1, 1 << 14));
    CHECK_THROWS_AS((void)expected_cost(-0.1, 16), std::domain_error);
}

TEST_CASE("moments") {
    const Bracket d = constant_D(100000);
    CHECK(moment(0, 64) == 1.0);
    const CostDistribution dist = cost_distribution(1 << 16);
    CHECK(std::abs(dist.mean - d.midpoint()) < 0.02);
    CHECK(std::abs(dist.standard_deviation - 0.50) <= 0.02);
    CHECK(dist.mean == doctest::Approx(moment(1, 1 << 16)));
    CHECK(dist.second_moment == doctest::Approx(moment(2, 1 << 16)));
    CHECK_THROWS_AS((void)moment(-1, 16), std::domain_error);
}

TEST_CASE("self-similarity law") {
    for (int m : {2, 3, 4, 5, 6}) {
        for (int i = 1; i <= 100; ++i) {
            const double y = 0.5 * (i - 0.5) / 100.0 + 1e-9 * kPeak;
            REQUIRE(std::abs(self_similarity_residual(y, m)) < 1e-6);
        }
        for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 7}, {3, 10}, {5, 13}, {4, 9}}) {
            REQUIRE(self_similarity_residual(Fraction(k, n), m) == Fraction(0));
        }
    }
    CHECK_THROWS_AS((void)self_similarity_residual(0.7, 3), std::domain_error);
    CHECK_THROWS_AS((void)self_similarity_residual(0.2, 1), std::domain_error);
}

TEST_CASE("sample grid") {
    const std::vector<double> g = sample_grid(4096);
    CHECK(g.size() == 4096);
    CHECK(g.front() > 0.0);
    CHECK(g.back() < 0.5);
    CHECK(std::is_sorted(g.begin(), g.end()));
    CHECK(std::adjacent_find(g.begin(), g.end()) == g.end());
    const bool hits_peak = std::any_of(g.begin(), g.end(), [](double x) { return std::abs(x - kPeak) < 1e-12; });
    CHECK(hits_peak);
    CHECK(sample_grid(7) == sample_grid(7));
    CHECK_THROWS_AS((void)sample_grid(0), std::invalid_argument);
}

TEST_CASE("continuous recurrence: homogeneity, bound, buffer monotonicity") {
    for (double kappa : {0.05, 0.1, 0.2718, 0.3, 0.381966, 0.45, 0.7}) {
        for (double beta : {0.01, 0.03, 0.1, 0.25}) {
            const double phi = simple_cost({1.0, kappa, beta});
            CHECK(phi <= 3.0);
            for (double lambda : {0.5, 2.0, 7.3}) {
                CHECK(simple_cost({lambda, lambda * kappa, lambda * beta}) ==
                      doctest::Approx(lambda * phi).epsilon(1e-12));
            }
        }
        double previous = 4.0;
        for (double beta : {0.001, 0.01, 0.05, 0.1, 0.2, 0.4, 0.8}) {
            const double phi = simple_cost({1.0, kappa, beta});
            CHECK(phi <= previous);
            previous = phi;
        }
    }
}

TEST_CASE("buffered curve examples") {
    CHECK(rel_cost_buffered(0.3, 0.5) == doctest::Approx(1.3));
    for (double x : {0.1, 0.4, 0.6, 0.9}) {
        CHECK(rel_cost_buffered(x, 1.0) == doctest::Approx(1.0 + std::min(x, 1.0 - x)));
    }
    // Below the last remainder 1/21 the run ends on a zero remainder and pays
    // the final nu, giving f(8/21) = 59/21; at beta = 1/21 it stops one step
    // earlier with the integer count 58/21.
    CHECK(rel_cost_buffered(8.0 / 21.0, 0.01) == doctest::Approx(59.0 / 21.0).epsilon(1e-12));
    CHECK(rel_cost_buffered(8.0 / 21.0, 1.0 / 21.0) == doctest::Approx(58.0 / 21.0).epsilon(1e-12));
    CHECK(gauss_fraction(2.5) == 0.5);
    CHECK(gauss_fraction(3.0) == 0.0);
    CHECK(gauss_fraction(21.0 / 8.0) == 5.0 / 8.0);
    CHECK(outside_map(0.5) == 0.5);
    CHECK(self_similarity_residual(Fraction(1, 3), 3) == Fraction(0));
    CHECK(std::abs(self_similarity_residual(0.3, 3)) < 1e-6);
}

TEST_CASE("series tail bound by depth doubling") {
    for (int d : {4, 8, 12, 20, 26}) {
        const SeriesDepthPolicy shallow{1e-300, d};
        const SeriesDepthPolicy deep{1e-300, 2 * d};
        const double bound = 2.0 * std::pow(2.0 / 3.0, d);
        for (double x : sample_grid(512)) {
            REQUIRE(std::abs(psi(x, deep) - psi(x, shallow)) <= bound);
        }
    }
}

TEST_CASE("rational consistency with the instrumented rotation") {
    for (std::int64_t n = 1; n <= 512; ++n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        for (std::int64_t k = 0; k <= n; ++k) {
            MoveLedger l;
            rotate_block_cycle(std::span<int>(v), static_cast<std::size_t>(k), BlockCycleConfig{}, l);
            const Fraction total = Fraction(n) * rel_cost(Fraction(k, n)) - Fraction(std::gcd(n, k));
            if (total != Fraction(static_cast<std::int64_t>(l.total_moves()))) {
                FAIL("n=" << n << " k=" << k);
            }
        }
    }
}

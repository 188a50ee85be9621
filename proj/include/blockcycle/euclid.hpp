#pragma once

#include <cstdint>
#include <vector>

namespace blockcycle {

/// Quotients and remainders of the Euclidean algorithm started at (n, k).
///
/// With r0 = n and r1 = k the run is r_{j-1} = q_{j-1} * r_j + r_{j+1}.
/// `remainders` holds r1, r2, ... down to the last nonzero one, which is
/// gcd(n, k); `quotients` holds q0, q1, ... (one per remainder). For k = 0 the
/// trace is empty.
struct EuclidTrace {
    std::uint64_t n = 0;
    std::vector<std::uint64_t> remainders;
    std::vector<std::uint64_t> quotients;

    [[nodiscard]] std::uint64_t gcd() const noexcept {
        return remainders.empty() ? n : remainders.back();
    }
    [[nodiscard]] std::uint64_t remainder_sum() const;
};

/// Requires n >= 1 and 0 <= k <= n.
[[nodiscard]] EuclidTrace euclid_trace(std::uint64_t n, std::uint64_t k);

/// Sum of all nonzero remainders of the Euclidean run at (n, k), down to and
/// including gcd(n, k). remainder_sum(n, 0) = 0 and remainder_sum(n, n) = n.
[[nodiscard]] std::uint64_t remainder_sum(std::uint64_t n, std::uint64_t k);

/// Moves of the block cycle rotation with a one-element buffer:
/// n - gcd(n, k) + 2 * remainder_sum(n, min(k, n - k)), and 0 for k in {0, n}.
[[nodiscard]] std::uint64_t move_count(std::uint64_t n, std::uint64_t k);

/// Discrete cost recurrence Cost(n, k, b) of the block cycle scheme with an
/// early-exit buffer of b elements (b >= 1), evaluated by integer recursion.
[[nodiscard]] std::uint64_t block_cycle_cost(std::uint64_t n, std::uint64_t k, std::uint64_t buffer);

/// A(n) = (1/n) * sum_{0 <= k < n} move_count(n, k), kept as the exact sum.
struct AverageCost {
    std::uint64_t n = 0;
    std::uint64_t total_moves = 0;

    [[nodiscard]] double average() const noexcept {
        return static_cast<double>(total_moves) / static_cast<double>(n);
    }
    /// A(n) / n, the average number of moves per element.
    [[nodiscard]] double per_element() const noexcept {
        return average() / static_cast<double>(n);
    }
};

[[nodiscard]] AverageCost avg_cost(std::uint64_t n);

/// (1/n) * sum_{1 <= k <= n} remainder_sum(n, k), kept as the exact sum.
struct RemainderAverage {
    std::uint64_t n = 0;
    std::uint64_t total = 0;

    [[nodiscard]] double average() const noexcept {
        return static_cast<double>(total) / static_cast<double>(n);
    }
};

[[nodiscard]] RemainderAverage avg_remainder_full(std::uint64_t n);

}  // namespace blockcycle

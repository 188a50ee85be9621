#pragma once

#include <cstdint>

namespace blockcycle {

/// Closed interval [lower, upper].
struct Bracket {
    double lower = 0.0;
    double upper = 0.0;

    [[nodiscard]] double width() const noexcept { return upper - lower; }
    [[nodiscard]] double midpoint() const noexcept { return 0.5 * (lower + upper); }
    [[nodiscard]] bool contains(double x) const noexcept { return lower <= x && x <= upper; }
};

/// zeta(3) from the first `terms` reciprocal cubes plus the integral bounds
/// 1/(2(N+1)^2) < sum_{s>N} s^-3 < 1/(2N^2) on the tail.
[[nodiscard]] Bracket zeta3_bracket(std::uint64_t terms = 1'000'000);

/// Two-sided estimate of the constant C, where D = 1 + 4C is the asymptotic
/// number of moves per element of the block cycle rotation.
///
/// `truncated_lower` is the partial sum over x <= cutoff of
///     C = sum_{x > y >= 1, gcd(x, y) = 1} (2x + y) / (2 x^2 (x + y)^2)
/// (all terms positive, so it increases with the cutoff), and
/// `truncated_upper` is 1/2 - S(cutoff) / (2 zeta(3)) with S the partial sum
/// over x <= cutoff of
///     sum_{x > y >= 1} 1 / (y (x + y)^2)
/// (which decreases with the cutoff). `lower` and `upper` add rigorous
/// bounds on the omitted tails to the respective truncations.
struct SeriesEstimate {
    std::uint64_t cutoff = 0;
    double truncated_lower = 0.0;
    double truncated_upper = 0.0;
    double lower = 0.0;
    double upper = 0.0;

    [[nodiscard]] Bracket bracket() const noexcept { return {lower, upper}; }
    [[nodiscard]] Bracket truncated_bracket() const noexcept { return {truncated_lower, truncated_upper}; }
};

/// Requires cutoff >= 2; throws std::domain_error otherwise. Runs in
/// O(cutoff * log(cutoff)) time.
[[nodiscard]] SeriesEstimate constant_C(std::uint64_t cutoff);

/// 1 + 4 * constant_C(cutoff).bracket().
[[nodiscard]] Bracket constant_D(std::uint64_t cutoff);

}  // namespace blockcycle

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "blockcycle/fraction.hpp"

namespace blockcycle {

/// Raised when a recursion that should terminate exceeds its iteration cap.
class DepthLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Real-valued arguments (nu, kappa, beta) of the continuous cost recurrence:
/// array length scale, shift scale and buffer scale.
struct CostParams {
    double nu = 1.0;
    double kappa = 0.0;
    double beta = 1.0;

    /// Throws std::domain_error unless nu > 0, 0 <= kappa <= nu and beta > 0.
    void validate() const;
};

/// Truncation control for the series of psi. Depth d is enough once the tail
/// bound sum_{j>d} (2/3)^j = 2 (2/3)^d drops to `tolerance`.
struct SeriesDepthPolicy {
    double tolerance = 1e-9;
    int max_depth = 64;

    /// Smallest such depth, capped at max_depth.
    [[nodiscard]] int depth() const;
};

/// {x} = x - floor(x) for x >= 0.
[[nodiscard]] double gauss_fraction(double x);

/// I(x) = {1/x} / (1 + {1/x}) on [0, 1/2], with I(0) = 0. Here and in T, a
/// 1/x within relative 1e-10 of an integer is treated as that integer, so
/// rational arguments follow their exact terminating orbit.
[[nodiscard]] double inside_map(double x);

/// T(x) = x (1 + {1/x}) on [0, 1/2], with T(0) = 0. Never exceeds 2/3.
[[nodiscard]] double outside_map(double x);

/// phi(nu, kappa, beta): the continuous cost recurrence, extended to
/// kappa > nu/2 by phi(nu, kappa) = phi(nu, nu - kappa). Quotients nu/kappa
/// within relative 1e-10 of an integer are taken as exact.
[[nodiscard]] double simple_cost(const CostParams& params);

/// psi(x) for x in [0, 1/2] from the series
///   2x + 2 sum_j T(x) T(I x) ... T(I^{j-1} x) I^j x
/// truncated at policy.depth().
[[nodiscard]] double psi(double x, const SeriesDepthPolicy& policy = {});

/// Exact psi(k/n) = 2 remainder_sum(n, k) / n for 0 <= k/n <= 1/2.
[[nodiscard]] Fraction psi(const Fraction& x);

/// f(x) = psi(min(x, 1 - x)) + 1 on [0, 1].
[[nodiscard]] double rel_cost(double x, const SeriesDepthPolicy& policy = {});

/// Exact f(k/n) on [0, 1]; n f(k/n) - gcd(n, k) is the block cycle move count.
[[nodiscard]] Fraction rel_cost(const Fraction& x);

/// f_beta(x) = phi(1, x, beta), beta > 0.
[[nodiscard]] double rel_cost_buffered(double x, double beta);

/// Points x_i = (i + theta) / (2 * samples), i < samples, on (0, 1/2), where
/// theta = frac(x_peak * 2 * samples) and x_peak = (3 - sqrt 5) / 2. The shift
/// is irrational, so no sample is rational, and one sample sits on the
/// maximum of f.
[[nodiscard]] std::vector<double> sample_grid(std::size_t samples);

/// 2 * integral_0^{1/2} f_beta(x) dx by the midpoint rule on sample_grid.
/// beta = 0 integrates f itself; beta >= 1/2 gives 5/4 exactly.
[[nodiscard]] double expected_cost(double beta, std::size_t samples,
                                   const SeriesDepthPolicy& policy = {});

/// E[f(X)^order] for X uniform on [0, 1/2], by the same midpoint rule.
[[nodiscard]] double moment(int order, std::size_t samples, const SeriesDepthPolicy& policy = {});

/// Mean and standard deviation of f(X), X uniform on [0, 1/2].
struct CostDistribution {
    double mean = 0.0;
    double second_moment = 0.0;
    double standard_deviation = 0.0;
    std::size_t samples = 0;
};

[[nodiscard]] CostDistribution cost_distribution(std::size_t samples,
                                                 const SeriesDepthPolicy& policy = {});

/// f(y) - [(m+2) y - (m+2) + (m+1-my) f((1-y)/(m+1-my))] for y in (0, 1/2),
/// m >= 2. Throws std::domain_error outside that range.
[[nodiscard]] double self_similarity_residual(double y, int m, const SeriesDepthPolicy& policy = {});

/// The same residual evaluated exactly at rational y.
[[nodiscard]] Fraction self_similarity_residual(const Fraction& y, int m);

}  // namespace blockcycle

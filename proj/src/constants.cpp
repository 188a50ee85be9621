#include "blockcycle/constants.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "blockcycle/compensated_sum.hpp"

namespace blockcycle {

namespace {

// P[m] = sum_{s=1}^{m} 1/s^2 for 0 <= m <= limit.
std::vector<double> inverse_square_prefix(std::uint64_t limit) {
    std::vector<double> prefix(limit + 1, 0.0);
    CompensatedSum acc;
    for (std::uint64_t s = 1; s <= limit; ++s) {
        const double sd = static_cast<double>(s);
        acc.add(1.0 / (sd * sd));
        prefix[s] = acc.value();
    }
    return prefix;
}

std::vector<int> mobius_table(std::uint64_t limit) {
    std::vector<int> mu(limit + 1, 1);
    std::vector<bool> composite(limit + 1, false);
    mu[0] = 0;
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (composite[p]) {
            continue;
        }
        for (std::uint64_t m = p; m <= limit; m += p) {
            if (m != p) {
                composite[m] = true;
            }
            mu[m] = -mu[m];
        }
        if (p <= limit / p) {
            for (std::uint64_t m = p * p; m <= limit; m += p * p) {
                mu[m] = 0;
            }
        }
    }
    return mu;
}

// Both series are reorganised with y as the outer variable so that the inner
// sums over x collapse to differences of P:
//   sum_{x=a}^{b} 1/x^2 = P[b] - P[a-1].
// The coprime series uses (2x + y) / (2x^2 (x+y)^2) = (1/(2y)) (1/x^2 - 1/(x+y)^2)
// and Moebius inversion over the common divisor d of (x, y), which is exact
// because the summand is homogeneous of degree -3.
class SeriesTables {
public:
    explicit SeriesTables(std::uint64_t cutoff)
        : cutoff_(cutoff), prefix_(inverse_square_prefix(2 * cutoff + 1)), mu_(mobius_table(cutoff)) {}

    // F(N) = sum_{x <= N} sum_{y < x} (1/(2y)) (1/x^2 - 1/(x+y)^2).
    [[nodiscard]] double all_pairs_partial(std::uint64_t N) const {
        CompensatedSum acc;
        for (std::uint64_t y = 1; y < N; ++y) {
            const double first = prefix_[N] - prefix_[y];
            const double second = prefix_[N + y] - prefix_[2 * y];
            acc.add((first - second) / (2.0 * static_cast<double>(y)));
        }
        return acc.value();
    }

    // Bracket on F(inf) - F(N) for N >= 1:
    //   sum_{y < N} (P[N+y] - P[N]) / (2y)          (exact, finite)
    // + sum_{y >= N} H(y) / (2y),  H(y) = sum_{s=y+1}^{2y} 1/s^2,
    // with y/((y+1)(2y+1)) < H(y) < y/((y+1/2)(2y+1/2)) from telescoping, and
    // the outer sums bounded by integrals of the (decreasing, convex) summands.
    [[nodiscard]] Bracket all_pairs_tail(std::uint64_t N) const {
        CompensatedSum finite;
        for (std::uint64_t y = 1; y < N; ++y) {
            finite.add((prefix_[N + y] - prefix_[N]) / (2.0 * static_cast<double>(y)));
        }
        const double nd = static_cast<double>(N);
        // int_N^inf dy / (2 (y+1)(2y+1))
        const double lo = 0.5 * std::log1p(1.0 / (2.0 * nd + 1.0));
        // int_{N-1/2}^inf dy / (2 (y+1/2)(2y+1/2))
        const double hi = std::log1p(1.0 / (4.0 * nd - 1.0));
        return {finite.value() + lo, finite.value() + hi};
    }

    [[nodiscard]] int mu(std::uint64_t d) const { return mu_[d]; }

    // S(X) = sum_{x <= X} sum_{y < x} 1 / (y (x+y)^2).
    [[nodiscard]] double second_series_partial() const {
        CompensatedSum acc;
        for (std::uint64_t y = 1; y < cutoff_; ++y) {
            acc.add((prefix_[cutoff_ + y] - prefix_[2 * y]) / static_cast<double>(y));
        }
        return acc.value();
    }

    // Lower bound on the omitted terms x > X of the second series:
    //   sum_{y <= X} Z(X+y)/y + sum_{y > X} Z(2y)/y,  Z(m) = sum_{s>m} 1/s^2 > 1/(m+1).
    [[nodiscard]] double second_series_tail_lower() const {
        CompensatedSum acc;
        const double xd = static_cast<double>(cutoff_);
        for (std::uint64_t y = 1; y <= cutoff_; ++y) {
            const double yd = static_cast<double>(y);
            acc.add(1.0 / (yd * (xd + yd + 1.0)));
        }
        // int_{X+1}^inf dy / (y (2y+1))
        acc.add(std::log1p(1.0 / (2.0 * xd + 2.0)));
        return acc.value();
    }

private:
    std::uint64_t cutoff_;
    std::vector<double> prefix_;
    std::vector<int> mu_;
};

}  // namespace

Bracket zeta3_bracket(std::uint64_t terms) {
    if (terms == 0) {
        throw std::domain_error("zeta3_bracket: need at least one term");
    }
    CompensatedSum acc;
    // Smallest terms first.
    for (std::uint64_t s = terms; s >= 1; --s) {
        const double sd = static_cast<double>(s);
        acc.add(1.0 / (sd * sd * sd));
    }
    const double nd = static_cast<double>(terms);
    return {acc.value() + 0.5 / ((nd + 1.0) * (nd + 1.0)), acc.value() + 0.5 / (nd * nd)};
}

SeriesEstimate constant_C(std::uint64_t cutoff) {
    if (cutoff < 2) {
        throw std::domain_error("constant_C: cutoff must be >= 2");
    }
    const SeriesTables tables(cutoff);
    const Bracket zeta3 = zeta3_bracket();

    CompensatedSum truncated;
    CompensatedSum tail;
    for (std::uint64_t d = 1; d <= cutoff; ++d) {
        const int mu = tables.mu(d);
        if (mu == 0) {
            continue;
        }
        const double dd = static_cast<double>(d);
        const double weight = static_cast<double>(mu) / (dd * dd * dd);
        const std::uint64_t N = cutoff / d;
        truncated.add(weight * tables.all_pairs_partial(N));
        const Bracket t = tables.all_pairs_tail(N);
        tail.add(weight * (mu > 0 ? t.lower : t.upper));
    }
    // Divisors d > X see the whole sum F(inf) <= F-tail bound at N = 1.
    const double xd = static_cast<double>(cutoff);
    tail.add(-tables.all_pairs_tail(1).upper * 0.5 / (xd * xd));

    const double second = tables.second_series_partial();
    const double second_tail = tables.second_series_tail_lower();

    SeriesEstimate out;
    out.cutoff = cutoff;
    out.truncated_lower = truncated.value();
    out.lower = truncated.value() + std::max(0.0, tail.value());
    out.truncated_upper = 0.5 - second / (2.0 * zeta3.upper);
    out.upper = 0.5 - (second + second_tail) / (2.0 * zeta3.upper);
    return out;
}

Bracket constant_D(std::uint64_t cutoff) {
    const SeriesEstimate c = constant_C(cutoff);
    return {1.0 + 4.0 * c.lower, 1.0 + 4.0 * c.upper};
}

}  // namespace blockcycle

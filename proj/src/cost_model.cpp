#include "blockcycle/cost_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "blockcycle/compensated_sum.hpp"
#include "blockcycle/euclid.hpp"

namespace blockcycle {

namespace {

constexpr int kRecursionCap = 100000;

// Relative distance below which a quotient counts as an integer. Orbits of
// rationals then terminate as they do in exact arithmetic instead of
// stepping across a jump of f because of rounding.
constexpr double kSnapTolerance = 1e-10;

bool near_integer(double v) { return std::abs(v - std::round(v)) <= kSnapTolerance * v; }

// {g} with near-integers snapped to 0.
double orbit_fraction(double g) { return near_integer(g) ? 0.0 : gauss_fraction(g); }

void require(bool ok, const std::string& message) {
    if (!ok) {
        throw std::domain_error(message);
    }
}

std::uint64_t as_unsigned(std::int64_t v) { return static_cast<std::uint64_t>(v); }

// f(k/n) = (n + 2 remainder_sum(n, min(k, n-k))) / n.
Fraction rel_cost_parts(std::int64_t k, std::int64_t n) {
    const std::int64_t shorter = std::min(k, n - k);
    const auto rs = static_cast<std::int64_t>(remainder_sum(as_unsigned(n), as_unsigned(shorter)));
    return {checked_add(n, checked_mul(2, rs)), n};
}

template <class Integrand>
double grid_mean(std::size_t samples, Integrand integrand) {
    const std::vector<double> grid = sample_grid(samples);
    CompensatedSum acc;
    for (double x : grid) {
        acc.add(integrand(x));
    }
    return acc.value() / static_cast<double>(samples);
}

}  // namespace

void CostParams::validate() const {
    require(std::isfinite(nu) && nu > 0.0, "CostParams: nu must be positive");
    require(std::isfinite(kappa) && kappa >= 0.0 && kappa <= nu, "CostParams: kappa must lie in [0, nu]");
    require(std::isfinite(beta) && beta > 0.0,
            "CostParams: beta must be positive (use psi/rel_cost for the unbuffered limit)");
}

int SeriesDepthPolicy::depth() const {
    require(tolerance > 0.0, "SeriesDepthPolicy: tolerance must be positive");
    require(max_depth >= 0, "SeriesDepthPolicy: max_depth must be non-negative");
    const double needed = std::ceil(std::log(tolerance / 2.0) / std::log(2.0 / 3.0));
    return static_cast<int>(std::clamp(needed, 0.0, static_cast<double>(max_depth)));
}

double gauss_fraction(double x) {
    require(x >= 0.0, "gauss_fraction: x must be non-negative");
    return x - std::floor(x);
}

double inside_map(double x) {
    require(x >= 0.0 && x <= 0.5, "inside_map: x must lie in [0, 1/2]");
    if (x == 0.0) {
        return 0.0;
    }
    const double frac = orbit_fraction(1.0 / x);
    return frac / (1.0 + frac);
}

double outside_map(double x) {
    require(x >= 0.0 && x <= 0.5, "outside_map: x must lie in [0, 1/2]");
    if (x == 0.0) {
        return 0.0;
    }
    return x * (1.0 + orbit_fraction(1.0 / x));
}

double simple_cost(const CostParams& params) {
    params.validate();
    double nu = params.nu;
    double kappa = std::min(params.kappa, params.nu - params.kappa);
    const double beta = params.beta;
    CompensatedSum cost;
    for (int step = 0; step < kRecursionCap; ++step) {
        if (kappa <= beta * (1.0 + kSnapTolerance)) {
            cost.add(nu);
            cost.add(kappa);
            return cost.value();
        }
        const double ratio = nu / kappa;
        double rest = 0.0;
        double quotient = std::round(ratio);
        if (!near_integer(ratio)) {
            // fmod is exact, so kappa' = nu - floor(nu/kappa) kappa carries no rounding.
            rest = std::fmod(nu, kappa);
            quotient = std::round((nu - rest) / kappa);
        }
        cost.add((quotient + 1.0) * kappa);
        nu = kappa + rest;
        kappa = rest;
    }
    throw DepthLimitError("simple_cost: recursion did not terminate");
}

double psi(double x, const SeriesDepthPolicy& policy) {
    require(x >= 0.0 && x <= 0.5, "psi: x must lie in [0, 1/2]");
    const int depth = policy.depth();
    CompensatedSum sum;
    sum.add(2.0 * x);
    double product = 1.0;
    double orbit = x;
    for (int j = 1; j <= depth && orbit != 0.0; ++j) {
        product *= outside_map(orbit);
        orbit = inside_map(orbit);
        sum.add(2.0 * product * orbit);
    }
    return sum.value();
}

Fraction psi(const Fraction& x) {
    require(x >= Fraction(0) && x <= Fraction(1, 2), "psi: x must lie in [0, 1/2]");
    const std::int64_t n = x.denominator();
    const auto rs = static_cast<std::int64_t>(remainder_sum(as_unsigned(n), as_unsigned(x.numerator())));
    return {checked_mul(2, rs), n};
}

double rel_cost(double x, const SeriesDepthPolicy& policy) {
    require(x >= 0.0 && x <= 1.0, "rel_cost: x must lie in [0, 1]");
    return psi(std::min(x, 1.0 - x), policy) + 1.0;
}

Fraction rel_cost(const Fraction& x) {
    require(x >= Fraction(0) && x <= Fraction(1), "rel_cost: x must lie in [0, 1]");
    return rel_cost_parts(x.numerator(), x.denominator());
}

double rel_cost_buffered(double x, double beta) {
    require(x >= 0.0 && x <= 1.0, "rel_cost_buffered: x must lie in [0, 1]");
    return simple_cost({1.0, x, beta});
}

std::vector<double> sample_grid(std::size_t samples) {
    if (samples == 0) {
        throw std::invalid_argument("sample_grid: need at least one sample");
    }
    const double peak = (3.0 - std::sqrt(5.0)) / 2.0;
    const double cells = 2.0 * static_cast<double>(samples);
    const double shift = gauss_fraction(peak * cells);
    std::vector<double> grid(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        grid[i] = (static_cast<double>(i) + shift) / cells;
    }
    return grid;
}

double expected_cost(double beta, std::size_t samples, const SeriesDepthPolicy& policy) {
    require(beta >= 0.0, "expected_cost: beta must be non-negative");
    if (beta >= 0.5) {
        // f_beta(x) = 1 + x on [0, 1/2], and 2 * int_0^{1/2} (1 + x) dx = 5/4.
        return 1.25;
    }
    if (beta == 0.0) {
        return grid_mean(samples, [&](double x) { return rel_cost(x, policy); });
    }
    return grid_mean(samples, [&](double x) { return rel_cost_buffered(x, beta); });
}

double moment(int order, std::size_t samples, const SeriesDepthPolicy& policy) {
    require(order >= 0, "moment: order must be non-negative");
    return grid_mean(samples, [&](double x) { return std::pow(rel_cost(x, policy), order); });
}

CostDistribution cost_distribution(std::size_t samples, const SeriesDepthPolicy& policy) {
    const std::vector<double> grid = sample_grid(samples);
    CompensatedSum first;
    CompensatedSum second;
    for (double x : grid) {
        const double f = rel_cost(x, policy);
        first.add(f);
        second.add(f * f);
    }
    CostDistribution out;
    out.samples = samples;
    out.mean = first.value() / static_cast<double>(samples);
    out.second_moment = second.value() / static_cast<double>(samples);
    out.standard_deviation = std::sqrt(std::max(0.0, out.second_moment - out.mean * out.mean));
    return out;
}

double self_similarity_residual(double y, int m, const SeriesDepthPolicy& policy) {
    require(y > 0.0 && y < 0.5, "self_similarity_residual: y must lie in (0, 1/2)");
    require(m >= 2, "self_similarity_residual: m must be >= 2");
    const double md = static_cast<double>(m);
    const double scale = md + 1.0 - md * y;
    const double z = (1.0 - y) / scale;
    require(z > 1.0 / (md + 2.0) && z < 1.0 / (md + 1.0),
            "self_similarity_residual: mapped argument outside (1/(m+2), 1/(m+1))");
    const double rhs = (md + 2.0) * y - (md + 2.0) + scale * rel_cost(z, policy);
    return rel_cost(y, policy) - rhs;
}

Fraction self_similarity_residual(const Fraction& y, int m) {
    require(y > Fraction(0) && y < Fraction(1, 2), "self_similarity_residual: y must lie in (0, 1/2)");
    require(m >= 2, "self_similarity_residual: m must be >= 2");
    const Fraction mf(m);
    const Fraction scale = mf + Fraction(1) - mf * y;
    const Fraction z = (Fraction(1) - y) / scale;
    require(z > Fraction(1, m + 2) && z < Fraction(1, m + 1),
            "self_similarity_residual: mapped argument outside (1/(m+2), 1/(m+1))");
    const Fraction rhs = (mf + Fraction(2)) * y - (mf + Fraction(2)) + scale * rel_cost(z);
    return rel_cost(y) - rhs;
}

}  // namespace blockcycle

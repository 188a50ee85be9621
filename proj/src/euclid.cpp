#include "blockcycle/euclid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "blockcycle/checked.hpp"

namespace blockcycle {

namespace {

void check_pair(std::uint64_t n, std::uint64_t k) {
    if (n == 0) {
        throw std::invalid_argument("euclid: n must be positive");
    }
    if (k > n) {
        throw std::out_of_range("euclid: k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
    }
}

}  // namespace

std::uint64_t EuclidTrace::remainder_sum() const {
    std::uint64_t sum = 0;
    for (std::uint64_t r : remainders) {
        sum = checked_add(sum, r);
    }
    return sum;
}

EuclidTrace euclid_trace(std::uint64_t n, std::uint64_t k) {
    check_pair(n, k);
    EuclidTrace trace;
    trace.n = n;
    std::uint64_t prev = n;
    std::uint64_t cur = k;
    while (cur != 0) {
        trace.remainders.push_back(cur);
        trace.quotients.push_back(prev / cur);
        const std::uint64_t next = prev % cur;
        prev = cur;
        cur = next;
    }
    return trace;
}

std::uint64_t remainder_sum(std::uint64_t n, std::uint64_t k) {
    check_pair(n, k);
    std::uint64_t sum = 0;
    std::uint64_t prev = n;
    std::uint64_t cur = k;
    while (cur != 0) {
        sum = checked_add(sum, cur);
        const std::uint64_t next = prev % cur;
        prev = cur;
        cur = next;
    }
    return sum;
}

std::uint64_t move_count(std::uint64_t n, std::uint64_t k) {
    check_pair(n, k);
    if (k == 0 || k == n) {
        return 0;
    }
    const std::uint64_t shorter = std::min(k, n - k);
    return checked_add(n - std::gcd(n, k), checked_mul(2, remainder_sum(n, shorter)));
}

std::uint64_t block_cycle_cost(std::uint64_t n, std::uint64_t k, std::uint64_t buffer) {
    check_pair(n, k);
    if (buffer == 0) {
        throw std::invalid_argument("block_cycle_cost: buffer must be >= 1");
    }
    std::uint64_t cost = 0;
    k = std::min(k, n - k);
    for (;;) {
        if (k == 0) {
            return cost;
        }
        if (k <= buffer) {
            return checked_add(cost, n + k);
        }
        const std::uint64_t q = n / k;
        cost = checked_add(cost, checked_mul(q + 1, k));
        const std::uint64_t next_n = n - (q - 1) * k;
        const std::uint64_t next_k = n - q * k;
        n = next_n;
        k = next_k;
    }
}

AverageCost avg_cost(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("avg_cost: n must be positive");
    }
    AverageCost out{n, 0};
    for (std::uint64_t k = 1; k < n; ++k) {
        out.total_moves = checked_add(out.total_moves, move_count(n, k));
    }
    return out;
}

RemainderAverage avg_remainder_full(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("avg_remainder_full: n must be positive");
    }
    RemainderAverage out{n, 0};
    for (std::uint64_t k = 1; k <= n; ++k) {
        out.total = checked_add(out.total, remainder_sum(n, k));
    }
    return out;
}

}  // namespace blockcycle

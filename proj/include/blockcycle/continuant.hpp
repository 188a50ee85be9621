#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace blockcycle {

/// Entries a0, ..., at of a continuant; every entry is positive.
using ContinuantWord = std::vector<std::uint64_t>;

/// <a0, ..., at> via <> = 1, <a0> = a0 and
/// <a0, ..., at> = a0 * <a1, ..., at> + <a2, ..., at>.
/// Throws std::domain_error on a zero entry and std::overflow_error when the
/// value leaves 64 bits.
[[nodiscard]] std::uint64_t continuant(std::span<const std::uint64_t> word);

/// Row-major product of the matrices [[a_j, 1], [1, 0]] over the word; the
/// identity matrix for the empty word.
[[nodiscard]] std::array<std::uint64_t, 4> continuant_matrix(std::span<const std::uint64_t> word);

/// A continuant expansion n = <a0, ..., at> with a0 >= 2, at >= 2 and a
/// marked split point 0 <= s < t.
struct MarkedExpansion {
    std::size_t split = 0;
    ContinuantWord word;

    friend auto operator<=>(const MarkedExpansion&, const MarkedExpansion&) = default;
};

/// Solution of n = x * x' + y * y' with x > y >= 1 and x' > y' >= 1.
struct HeilbronnQuadruple {
    std::uint64_t x = 0;
    std::uint64_t x_prime = 0;
    std::uint64_t y = 0;
    std::uint64_t y_prime = 0;

    friend auto operator<=>(const HeilbronnQuadruple&, const HeilbronnQuadruple&) = default;
};

/// All marked expansions of n, found by a depth-first search over words
/// whose prefix continuants stay below n. Sorted.
[[nodiscard]] std::vector<MarkedExpansion> heilbronn_expansions(std::uint64_t n);

/// x = <a0..as>, x' = <a(s+1)..at>, y = <a0..a(s-1)>, y' = <a(s+2)..at>.
[[nodiscard]] HeilbronnQuadruple quadruple_from_expansion(const MarkedExpansion& expansion);

/// Quadruples with gcd(x, y) = 1, and gcd(x', y') = 1 as well when
/// `require_second_gcd` is set. Sorted.
[[nodiscard]] std::vector<HeilbronnQuadruple> heilbronn_quadruples(std::uint64_t n,
                                                                   bool require_second_gcd);

/// Every quadruple with no gcd condition at all. Sorted.
[[nodiscard]] std::vector<HeilbronnQuadruple> all_quadruples(std::uint64_t n);

/// Moebius function.
[[nodiscard]] int mobius(std::uint64_t d);

/// G(n): sum of x' over all quadruples of n.
[[nodiscard]] std::uint64_t big_g(std::uint64_t n);

/// G*(n): sum of x' over quadruples of n with gcd(x, y) = 1, by enumeration.
[[nodiscard]] std::uint64_t big_g_star(std::uint64_t n);

/// G*(n) = sum_{d | n} mu(d) * G(n / d).
[[nodiscard]] std::int64_t big_g_star_mobius(std::uint64_t n);

/// Both remainder-sum identities for the half range 1 <= k <= n/2, with the
/// individual sides kept for reporting.
struct HeilbronnIdentity {
    std::uint64_t n = 0;
    // sum over coprime k of remainder_sum(n, k) = sum of x' (both gcds) + #coprime k
    std::uint64_t coprime_remainder_sum = 0;
    std::uint64_t doubly_coprime_x_prime_sum = 0;
    std::uint64_t coprime_count = 0;
    // sum over all k of remainder_sum(n, k) = G*(n) + sum of gcd(n, k)
    std::uint64_t remainder_sum_total = 0;
    std::uint64_t g_star = 0;
    std::uint64_t gcd_sum = 0;

    [[nodiscard]] bool coprime_form() const noexcept {
        return coprime_remainder_sum == doubly_coprime_x_prime_sum + coprime_count;
    }
    [[nodiscard]] bool unrestricted_form() const noexcept {
        return remainder_sum_total == g_star + gcd_sum;
    }
};

/// Requires n >= 2.
[[nodiscard]] HeilbronnIdentity heilbron_identity_check(std::uint64_t n);

}  // namespace blockcycle

#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>

namespace blockcycle {

/// Exact move counters filled in by the instrumented rotation algorithms.
///
/// Type A moves copy an element into or out of auxiliary storage (the batch
/// buffer, the early-exit buffer, or a single temporary cell). Type B moves
/// copy an element from one array slot to another. Swaps are element
/// exchanges performed via std::swap / std::swap_ranges and are kept apart so
/// that both the raw swap count and the move-equivalent view are available.
struct MoveLedger {
    std::uint64_t type_a_moves = 0;
    std::uint64_t type_b_moves = 0;
    std::uint64_t swap_count = 0;

    /// Move-equivalent cost; one swap is three moves.
    [[nodiscard]] constexpr std::uint64_t total_moves() const noexcept {
        return type_a_moves + type_b_moves + 3 * swap_count;
    }

    constexpr void reset() noexcept { *this = MoveLedger{}; }

    constexpr void buffer_moves(std::size_t count) noexcept { type_a_moves += count; }
    constexpr void array_moves(std::size_t count) noexcept { type_b_moves += count; }
    constexpr void swaps(std::size_t count) noexcept { swap_count += count; }

    friend constexpr bool operator==(const MoveLedger&, const MoveLedger&) = default;
};

/// Drop-in replacement for MoveLedger that compiles the accounting away.
struct NullLedger {
    constexpr void buffer_moves(std::size_t) noexcept {}
    constexpr void array_moves(std::size_t) noexcept {}
    constexpr void swaps(std::size_t) noexcept {}
};

inline std::ostream& operator<<(std::ostream& os, const MoveLedger& ledger) {
    return os << "{A=" << ledger.type_a_moves << ", B=" << ledger.type_b_moves
              << ", swaps=" << ledger.swap_count << ", total=" << ledger.total_moves() << "}";
}

}  // namespace blockcycle

#pragma once

// In-place left rotation algorithms over contiguous sequences.
//
// Every algorithm rotates `seq` left by `k` places: the element at index i
// ends up at index (i - k) mod n. Each comes in two flavours, one taking a
// MoveLedger that receives exact move counts and one without accounting.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "blockcycle/move_ledger.hpp"

namespace blockcycle {

template <class T>
concept Rotatable = std::movable<T> && std::default_initializable<T>;

template <class L>
concept MoveTally = requires(L& tally, std::size_t count) {
    tally.buffer_moves(count);
    tally.array_moves(count);
    tally.swaps(count);
};

/// Capacities of the two auxiliary buffers used by the block cycle scheme.
///
/// `early_exit_capacity` ends the recursion once the shorter segment fits;
/// `batch_capacity` bounds the run of adjacent elements carried through a
/// block cycle at once. Both are element counts. With both set to 1 the
/// algorithm uses a single spare cell and its move count is exactly the
/// discrete cost recurrence with b = 1.
struct BlockCycleConfig {
    std::size_t early_exit_capacity = 1;
    std::size_t batch_capacity = 1;

    void validate() const {
        if (early_exit_capacity < 1 || batch_capacity < 1) {
            throw std::invalid_argument("BlockCycleConfig: capacities must be >= 1");
        }
    }
};

namespace detail {

inline void check_shift(std::size_t n, std::size_t k) {
    if (k > n) {
        throw std::out_of_range("rotation shift " + std::to_string(k) + " exceeds length " +
                                std::to_string(n));
    }
}

// Rotate [first, first + n) left by k through `buffer`, which must hold
// min(k, n - k) elements: n + min(k, n - k) moves.
template <class T, MoveTally Tally>
void rotate_through_buffer(T* first, std::size_t n, std::size_t k, std::vector<T>& buffer,
                           Tally& tally) {
    if (k <= n - k) {
        std::move(first, first + k, buffer.begin());
        std::move(first + k, first + n, first);
        std::move(buffer.begin(), buffer.begin() + static_cast<std::ptrdiff_t>(k), first + (n - k));
        tally.buffer_moves(2 * k);
        tally.array_moves(n - k);
    } else {
        const std::size_t r = n - k;
        std::move(first + k, first + n, buffer.begin());
        std::move_backward(first, first + k, first + n);
        std::move(buffer.begin(), buffer.begin() + static_cast<std::ptrdiff_t>(r), first);
        tally.buffer_moves(2 * r);
        tally.array_moves(k);
    }
}

// Cyclic permutation of `count` blocks of length `len`, where block i starts
// at `first + i * stride` (stride is +len or -len). Block 0 is carried to the
// slot of block count-1 and every other block moves one slot towards block 0.
// Runs of up to `batch` adjacent elements travel through the buffer together.
template <class T, MoveTally Tally>
void cycle_blocks(T* first, std::ptrdiff_t stride, std::size_t count, std::size_t len,
                  std::vector<T>& buffer, std::size_t batch, Tally& tally) {
    for (std::size_t offset = 0; offset < len; offset += batch) {
        const std::size_t run = std::min(batch, len - offset);
        T* slot = first + offset;
        std::move(slot, slot + run, buffer.begin());
        for (std::size_t i = 1; i < count; ++i) {
            T* next = slot + stride;
            std::move(next, next + run, slot);
            slot = next;
        }
        std::move(buffer.begin(), buffer.begin() + static_cast<std::ptrdiff_t>(run), slot);
        tally.buffer_moves(2 * run);
        tally.array_moves((count - 1) * run);
    }
}

template <Rotatable T, MoveTally Tally>
void block_cycle(std::span<T> seq, std::size_t k, const BlockCycleConfig& config, Tally& tally) {
    config.validate();
    std::size_t n = seq.size();
    check_shift(n, k);
    if (k == 0 || k == n) {
        return;
    }
    std::vector<T> buffer(std::min(n, std::max(config.early_exit_capacity, config.batch_capacity)));
    const std::size_t batch = std::min(config.batch_capacity, buffer.size());

    T* first = seq.data();
    while (k != 0 && k != n) {
        const std::size_t right = n - k;
        const std::size_t shorter = std::min(k, right);
        if (shorter <= config.early_exit_capacity) {
            rotate_through_buffer(first, n, k, buffer, tally);
            return;
        }
        if (k == right) {
            // Equal halves: each exchange is a two-cycle through one spare
            // cell, tallied as two buffer moves and one in-array move.
            std::swap_ranges(first, first + k, first + k);
            tally.buffer_moves(2 * k);
            tally.array_moves(k);
            return;
        }
        if (k < right) {
            // Left segment is shorter: blocks of length k cycle towards the front.
            const std::size_t blocks = n / k;
            const std::size_t rest = n - blocks * k;
            cycle_blocks(first, static_cast<std::ptrdiff_t>(k), blocks, k, buffer, batch, tally);
            first += (blocks - 1) * k;
            n = k + rest;
        } else {
            // Mirrored step: blocks of length `right` cycle towards the back.
            const std::size_t blocks = n / right;
            const std::size_t rest = n - blocks * right;
            cycle_blocks(first + (n - right), -static_cast<std::ptrdiff_t>(right), blocks, right,
                         buffer, batch, tally);
            n = rest + right;
            k = rest;
        }
    }
}

template <Rotatable T, MoveTally Tally>
void block_swap(std::span<T> seq, std::size_t k, Tally& tally) {
    std::size_t n = seq.size();
    check_shift(n, k);
    T* first = seq.data();
    while (k != 0 && k != n) {
        const std::size_t right = n - k;
        if (k <= right) {
            // Fill the k leading positions from the adjacent block.
            std::swap_ranges(first, first + k, first + k);
            tally.swaps(k);
            first += k;
            n -= k;
        } else {
            std::swap_ranges(first + (k - right), first + k, first + k);
            tally.swaps(right);
            n -= right;
            k -= right;
        }
    }
}

template <class T, MoveTally Tally>
void reverse_counted(T* first, T* last, Tally& tally) {
    tally.swaps(static_cast<std::size_t>(last - first) / 2);
    std::reverse(first, last);
}

template <Rotatable T, MoveTally Tally>
void triple_reverse(std::span<T> seq, std::size_t k, Tally& tally) {
    const std::size_t n = seq.size();
    check_shift(n, k);
    if (k == 0 || k == n) {
        return;
    }
    T* first = seq.data();
    reverse_counted(first, first + k, tally);
    reverse_counted(first + k, first + n, tally);
    reverse_counted(first, first + n, tally);
}

// Triple reversal with the three reversals interleaved so that transpositions
// combine into 4-cycles (5 moves per 4 elements) and 3-cycles (4 moves per 3
// elements) through one temporary cell.
template <Rotatable T, MoveTally Tally>
void trinity_unchecked(T* array, std::size_t left, std::size_t right, Tally& tally) {
    T* a = array;
    T* b = array + left;
    T* c = b;
    T* d = c + right;
    T temp;
    if (left < right) {
        for (std::size_t loop = left / 2; loop != 0; --loop) {
            temp = std::move(*--b);
            *b = std::move(*a);
            *a++ = std::move(*c);
            *c++ = std::move(*--d);
            *d = std::move(temp);
            tally.buffer_moves(2);
            tally.array_moves(3);
        }
        for (std::size_t loop = static_cast<std::size_t>(d - c) / 2; loop != 0; --loop) {
            temp = std::move(*c);
            *c++ = std::move(*--d);
            *d = std::move(*a);
            *a++ = std::move(temp);
            tally.buffer_moves(2);
            tally.array_moves(2);
        }
    } else {
        for (std::size_t loop = right / 2; loop != 0; --loop) {
            temp = std::move(*--b);
            *b = std::move(*a);
            *a++ = std::move(*c);
            *c++ = std::move(*--d);
            *d = std::move(temp);
            tally.buffer_moves(2);
            tally.array_moves(3);
        }
        for (std::size_t loop = static_cast<std::size_t>(b - a) / 2; loop != 0; --loop) {
            temp = std::move(*--b);
            *b = std::move(*a);
            *a++ = std::move(*--d);
            *d = std::move(temp);
            tally.buffer_moves(2);
            tally.array_moves(2);
        }
    }
    for (std::size_t loop = static_cast<std::size_t>(d - a) / 2; loop != 0; --loop) {
        temp = std::move(*a);
        *a++ = std::move(*--d);
        *d = std::move(temp);
        tally.buffer_moves(2);
        tally.array_moves(1);
    }
}

template <Rotatable T, MoveTally Tally>
void trinity(std::span<T> seq, std::size_t k, const BlockCycleConfig& config, Tally& tally) {
    config.validate();
    const std::size_t n = seq.size();
    check_shift(n, k);
    if (k == 0 || k == n) {
        return;
    }
    const std::size_t shorter = std::min(k, n - k);
    if (shorter <= config.early_exit_capacity) {
        std::vector<T> buffer(shorter);
        rotate_through_buffer(seq.data(), n, k, buffer, tally);
        return;
    }
    trinity_unchecked(seq.data(), k, n - k, tally);
}

template <Rotatable T, MoveTally Tally>
void dolphin(std::span<T> seq, std::size_t k, Tally& tally) {
    const std::size_t n = seq.size();
    if (k == 0 || k >= n) {
        throw std::out_of_range("dolphin rotation requires 0 < k < n (got k=" + std::to_string(k) +
                                ", n=" + std::to_string(n) + ")");
    }
    const std::size_t cycles = std::gcd(n, k);
    T* array = seq.data();
    for (std::size_t leader = 0; leader < cycles; ++leader) {
        T temp = std::move(array[leader]);
        tally.buffer_moves(1);
        std::size_t hole = leader;
        for (;;) {
            std::size_t source = hole + k;
            if (source >= n) {
                source -= n;
            }
            if (source == leader) {
                break;
            }
            array[hole] = std::move(array[source]);
            tally.array_moves(1);
            hole = source;
        }
        array[hole] = std::move(temp);
        tally.buffer_moves(1);
    }
}

}  // namespace detail

/// Reference semantics: out-of-place rotation through a full copy.
template <class T>
[[nodiscard]] std::vector<T> rotate_oracle(std::span<const T> seq, std::size_t k) {
    const std::size_t n = seq.size();
    detail::check_shift(n, k);
    std::vector<T> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t source = i + k;
        if (source >= n) {
            source -= n;
        }
        out.push_back(seq[source]);
    }
    return out;
}

/// Block cycle rotation.
///
/// Repeatedly permutes the q = floor(n / s) blocks of the shorter segment
/// length s cyclically, which fixes (q - 1) * s elements at a cost of
/// (q + 1) * s moves and leaves a rotation of length s + (n mod s) whose
/// shorter segment sits on the opposite side. The recursion stops when the
/// shorter segment fits into the early-exit buffer (n + s moves) or vanishes.
/// For k > n / 2 the mirrored step runs, so Cost(n, k) = Cost(n, n - k).
template <Rotatable T>
void rotate_block_cycle(std::span<T> seq, std::size_t k, const BlockCycleConfig& config,
                        MoveLedger& ledger) {
    detail::block_cycle(seq, k, config, ledger);
}

template <Rotatable T>
void rotate_block_cycle(std::span<T> seq, std::size_t k, const BlockCycleConfig& config = {}) {
    NullLedger none;
    detail::block_cycle(seq, k, config, none);
}

/// Gries-Mills style block swapping where the positions of the shorter
/// segment are filled from the adjacent block; n - gcd(n, k) swaps.
template <Rotatable T>
void rotate_block_swap(std::span<T> seq, std::size_t k, MoveLedger& ledger) {
    detail::block_swap(seq, k, ledger);
}

template <Rotatable T>
void rotate_block_swap(std::span<T> seq, std::size_t k) {
    NullLedger none;
    detail::block_swap(seq, k, none);
}

/// Three reversals; floor(k/2) + floor((n-k)/2) + floor(n/2) swaps.
template <Rotatable T>
void rotate_triple_reverse(std::span<T> seq, std::size_t k, MoveLedger& ledger) {
    detail::triple_reverse(seq, k, ledger);
}

template <Rotatable T>
void rotate_triple_reverse(std::span<T> seq, std::size_t k) {
    NullLedger none;
    detail::triple_reverse(seq, k, none);
}

/// Trinity rotation: about 2n moves. Uses the early-exit buffer of `config`
/// when the shorter segment fits into it.
template <Rotatable T>
void rotate_trinity(std::span<T> seq, std::size_t k, const BlockCycleConfig& config,
                    MoveLedger& ledger) {
    detail::trinity(seq, k, config, ledger);
}

template <Rotatable T>
void rotate_trinity(std::span<T> seq, std::size_t k, const BlockCycleConfig& config = {}) {
    NullLedger none;
    detail::trinity(seq, k, config, none);
}

/// Cycle-leader rotation along the gcd(n, k) cycles; n + gcd(n, k) moves.
/// Requires 0 < k < n.
template <Rotatable T>
void rotate_dolphin(std::span<T> seq, std::size_t k, MoveLedger& ledger) {
    detail::dolphin(seq, k, ledger);
}

template <Rotatable T>
void rotate_dolphin(std::span<T> seq, std::size_t k) {
    NullLedger none;
    detail::dolphin(seq, k, none);
}

/// Triple reversal behind the same early-exit buffer trinity uses.
template <Rotatable T>
void rotate_buffered_triple_reverse(std::span<T> seq, std::size_t k, std::size_t capacity) {
    const std::size_t n = seq.size();
    detail::check_shift(n, k);
    if (k == 0 || k == n) {
        return;
    }
    NullLedger none;
    const std::size_t shorter = std::min(k, n - k);
    if (shorter <= capacity) {
        std::vector<T> buffer(shorter);
        detail::rotate_through_buffer(seq.data(), n, k, buffer, none);
        return;
    }
    detail::triple_reverse(seq, k, none);
}

}  // namespace blockcycle

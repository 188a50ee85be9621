#pragma once

#include <cstdint>
#include <stdexcept>

namespace blockcycle {

// 64-bit arithmetic that throws instead of wrapping.

[[nodiscard]] inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw std::overflow_error("unsigned 64-bit addition overflow");
    }
    return out;
}

[[nodiscard]] inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw std::overflow_error("unsigned 64-bit multiplication overflow");
    }
    return out;
}

[[nodiscard]] inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw std::overflow_error("signed 64-bit addition overflow");
    }
    return out;
}

[[nodiscard]] inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_sub_overflow(a, b, &out)) {
        throw std::overflow_error("signed 64-bit subtraction overflow");
    }
    return out;
}

[[nodiscard]] inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw std::overflow_error("signed 64-bit multiplication overflow");
    }
    return out;
}

}  // namespace blockcycle

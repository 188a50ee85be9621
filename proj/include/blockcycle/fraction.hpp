#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "blockcycle/checked.hpp"

namespace blockcycle {

/// Reduced rational number with a positive denominator. Arithmetic is
/// overflow-checked; used wherever the cost model is evaluated exactly.
class Fraction {
public:
    constexpr Fraction() = default;
    Fraction(std::int64_t numerator, std::int64_t denominator = 1) : num_(numerator), den_(denominator) {
        if (den_ == 0) {
            throw std::domain_error("Fraction: zero denominator");
        }
        normalize();
    }

    [[nodiscard]] std::int64_t numerator() const noexcept { return num_; }
    [[nodiscard]] std::int64_t denominator() const noexcept { return den_; }
    [[nodiscard]] double to_double() const noexcept {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    friend Fraction operator+(const Fraction& a, const Fraction& b) {
        const std::int64_t g = std::gcd(a.den_, b.den_);
        const std::int64_t left = checked_mul(a.num_, b.den_ / g);
        const std::int64_t right = checked_mul(b.num_, a.den_ / g);
        return {checked_add(left, right), checked_mul(a.den_ / g, b.den_)};
    }
    friend Fraction operator-(const Fraction& a) { return {checked_sub(0, a.num_), a.den_}; }
    friend Fraction operator-(const Fraction& a, const Fraction& b) { return a + (-b); }
    friend Fraction operator*(const Fraction& a, const Fraction& b) {
        const std::int64_t g1 = std::gcd(a.num_, b.den_);
        const std::int64_t g2 = std::gcd(b.num_, a.den_);
        return {checked_mul(a.num_ / (g1 ? g1 : 1), b.num_ / (g2 ? g2 : 1)),
                checked_mul(a.den_ / (g2 ? g2 : 1), b.den_ / (g1 ? g1 : 1))};
    }
    friend Fraction operator/(const Fraction& a, const Fraction& b) {
        if (b.num_ == 0) {
            throw std::domain_error("Fraction: division by zero");
        }
        return a * Fraction(b.den_, b.num_);
    }

    friend bool operator==(const Fraction&, const Fraction&) = default;
    friend bool operator<(const Fraction& a, const Fraction& b) {
        __extension__ using wide = __int128;
        return static_cast<wide>(a.num_) * b.den_ < static_cast<wide>(b.num_) * a.den_;
    }
    friend bool operator<=(const Fraction& a, const Fraction& b) { return !(b < a); }
    friend bool operator>(const Fraction& a, const Fraction& b) { return b < a; }
    friend bool operator>=(const Fraction& a, const Fraction& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const Fraction& f) {
        os << f.num_;
        if (f.den_ != 1) {
            os << '/' << f.den_;
        }
        return os;
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = checked_sub(0, num_);
            den_ = checked_sub(0, den_);
        }
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace blockcycle

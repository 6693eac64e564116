#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace radlab {

/// Exact rational with int64 terms, always stored reduced with den > 0.
/// Intermediates run through 128-bit integers; construction throws
/// std::overflow_error if a reduced term does not fit in int64.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {}

    Rational(std::int64_t num, std::int64_t den) {
        if (den == 0)
            throw std::invalid_argument("Rational: zero denominator");
        *this = make(num, den);
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_)
                         : std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                    i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                    i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0)
            throw std::invalid_argument("Rational: division by zero");
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) = default;

    friend std::strong_ordering operator<=>(const Rational& a,
                                            const Rational& b) {
        // den > 0 on both sides, so the cross products order directly.
        i128 lhs = i128(a.num_) * b.den_;
        i128 rhs = i128(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    using i128 = __int128;

    static Rational make(i128 num, i128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        i128 g = gcd128(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        constexpr i128 lo = std::numeric_limits<std::int64_t>::min();
        constexpr i128 hi = std::numeric_limits<std::int64_t>::max();
        if (num < lo || num > hi || den > hi)
            throw std::overflow_error("Rational: reduced term exceeds int64");
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace radlab

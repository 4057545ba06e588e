#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rleacs {

using u128 = unsigned __int128;

/// Raised when an exact accumulator would leave its integer range.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

inline u128 checked_add(u128 a, u128 b, const char* what) {
    u128 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError(what);
    return r;
}

inline u128 checked_mul(u128 a, u128 b, const char* what) {
    u128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError(what);
    return r;
}

inline u128 checked_sub(u128 a, u128 b, const char* what) {
    if (b > a) throw OverflowError(what);
    return a - b;
}

std::string to_string(u128 v);

u128 gcd(u128 a, u128 b);

/// Non-negative exact fraction. Stores the value as given; `reduced()` yields
/// the canonical form used for floating-point rendering.
struct Rational {
    u128 num = 0;
    u128 den = 1;

    [[nodiscard]] Rational reduced() const;
    /// Conversion goes through the reduced form, so equal values always
    /// produce bit-identical doubles.
    [[nodiscard]] double to_double() const;
    [[nodiscard]] std::string str() const;  // "num/den"

    friend bool operator==(const Rational& a, const Rational& b) {
        const auto ra = a.reduced();
        const auto rb = b.reduced();
        return ra.num == rb.num && ra.den == rb.den;
    }
};

}  // namespace rleacs

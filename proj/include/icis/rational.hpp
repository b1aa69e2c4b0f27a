#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

namespace icis {

// GMP keeps every mpq_class result canonical: lowest terms, positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& value);

/// Accepts "a", "-a" or "a/b" with decimal integers; throws Error(InvalidInput).
Rational parse_rational(std::string_view text);

/// A non-negative count that may be infinite (colengths, orders of vanishing).
class ExtendedCount {
public:
    constexpr ExtendedCount() = default;
    constexpr explicit ExtendedCount(std::uint64_t value) : value_(value), finite_(true) {}

    static constexpr ExtendedCount infinity() { return ExtendedCount{}; }

    constexpr bool is_finite() const { return finite_; }
    /// Precondition: is_finite().
    constexpr std::uint64_t value() const { return value_; }

    friend constexpr bool operator==(const ExtendedCount& a, const ExtendedCount& b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend constexpr bool operator==(const ExtendedCount& a, std::uint64_t b) {
        return a.finite_ && a.value_ == b;
    }
    friend constexpr bool operator<(const ExtendedCount& a, const ExtendedCount& b) {
        if (!a.finite_) return false;
        if (!b.finite_) return true;
        return a.value_ < b.value_;
    }
    friend constexpr bool operator<=(const ExtendedCount& a, const ExtendedCount& b) {
        return a < b || a == b;
    }

    std::string to_string() const;

private:
    std::uint64_t value_ = 0;
    bool finite_ = false;
};

}  // namespace icis

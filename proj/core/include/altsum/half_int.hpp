#pragma once

#include "altsum/exact_int.hpp"
#include "altsum/ratio.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace altsum {

/// An element of {n/2 : n integer}, stored as twice the value so parity
/// checks are exact. Integer exactly when twice_value() is even.
class HalfInt {
public:
    HalfInt() : twice_(0) {}

    static HalfInt from_integer(const ExactInt& n) { return HalfInt(n + n); }
    static HalfInt from_twice(ExactInt twice) { return HalfInt(std::move(twice)); }

    /// Parses "n" (an integer) or "m/2". Returns nullopt on bad text or a
    /// denominator other than 2.
    static std::optional<HalfInt> parse(std::string_view text);

    const ExactInt& twice_value() const { return twice_; }
    bool is_integer() const { return twice_.is_even(); }

    /// The value as an ExactInt. Throws std::domain_error for proper halves.
    ExactInt as_integer() const;

    Ratio to_ratio() const { return Ratio(twice_, ExactInt(2)); }

    /// "n" when integral, "m/2" (m odd) otherwise.
    std::string to_string() const;

    /// Shift by an integer (the +1, +2, +3 offsets of the power sums).
    HalfInt operator+(long k) const { return HalfInt(twice_ + ExactInt(2 * k)); }

    friend bool operator==(const HalfInt& a, const HalfInt& b) { return a.twice_ == b.twice_; }
    friend std::strong_ordering operator<=>(const HalfInt& a, const HalfInt& b) {
        return a.twice_ <=> b.twice_;
    }

private:
    explicit HalfInt(ExactInt twice) : twice_(std::move(twice)) {}

    ExactInt twice_;
};

} // namespace altsum

#pragma once

#include "altsum/exact_int.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace altsum {

/// Reduced rational number: gcd(|num|, den) = 1 and den >= 1, always.
/// Construction normalizes eagerly, so two equal values compare equal
/// coefficient-wise.
class Ratio {
public:
    Ratio() : num_(0), den_(1) {}
    Ratio(ExactInt n) : num_(std::move(n)), den_(1) {}
    Ratio(long n) : num_(n), den_(1) {}
    Ratio(int n) : num_(n), den_(1) {}

    /// num/den, reduced. Throws std::domain_error when den == 0.
    Ratio(ExactInt num, ExactInt den);

    /// Parses "p" or "p/q" with decimal p, q. Returns nullopt on bad text
    /// (including q == 0).
    static std::optional<Ratio> parse(std::string_view text);

    /// "p" when integral, "p/q" otherwise.
    std::string to_string() const;

    const ExactInt& num() const { return num_; }
    const ExactInt& den() const { return den_; }

    int sign() const { return num_.sign(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == ExactInt(1); }

    /// The value as an ExactInt. Throws std::domain_error when not integral.
    const ExactInt& as_integer() const;

    Ratio& operator+=(const Ratio& o);
    Ratio& operator-=(const Ratio& o);
    Ratio& operator*=(const Ratio& o);

    friend Ratio operator+(Ratio a, const Ratio& b) { a += b; return a; }
    friend Ratio operator-(Ratio a, const Ratio& b) { a -= b; return a; }
    friend Ratio operator*(Ratio a, const Ratio& b) { a *= b; return a; }
    friend Ratio operator-(const Ratio& a);

    /// Exact division. Throws std::domain_error when o is zero.
    Ratio& operator/=(const Ratio& o);
    friend Ratio operator/(Ratio a, const Ratio& b) { a /= b; return a; }

    static Ratio pow(const Ratio& base, unsigned long exponent);

    friend bool operator==(const Ratio& a, const Ratio& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
        return (a.num_ * b.den_) <=> (b.num_ * a.den_);
    }

private:
    void reduce();

    ExactInt num_;
    ExactInt den_;
};

} // namespace altsum

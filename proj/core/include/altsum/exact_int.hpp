#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace altsum {

/// Signed integer of unbounded magnitude with exact arithmetic.
///
/// Thin value wrapper over GMP. Everything downstream (rationals,
/// polynomials, the searches) funnels its integer arithmetic through this
/// type, so the decimal text interface here is the only place numbers are
/// ever converted to or from strings.
class ExactInt {
public:
    ExactInt() : v_(0) {}
    ExactInt(long v) : v_(v) {}
    ExactInt(int v) : v_(v) {}

    /// Parses an optionally negated decimal numeral. Returns nullopt on
    /// anything else (empty string, stray characters, lone '-').
    static std::optional<ExactInt> parse(std::string_view text);

    /// Canonical decimal rendering ("-17", "0", ...). parse(to_decimal())
    /// round-trips for every value.
    std::string to_decimal() const;

    int sign() const { return mpz_sgn(v_.get_mpz_t()); }
    bool is_zero() const { return sign() == 0; }
    bool is_even() const { return mpz_even_p(v_.get_mpz_t()) != 0; }
    bool is_odd() const { return !is_even(); }

    bool fits_long() const { return v_.fits_slong_p(); }
    long to_long() const; // requires fits_long()

    ExactInt abs() const;

    ExactInt& operator+=(const ExactInt& o) { v_ += o.v_; return *this; }
    ExactInt& operator-=(const ExactInt& o) { v_ -= o.v_; return *this; }
    ExactInt& operator*=(const ExactInt& o) { v_ *= o.v_; return *this; }

    friend ExactInt operator+(const ExactInt& a, const ExactInt& b) { return ExactInt(a.v_ + b.v_); }
    friend ExactInt operator-(const ExactInt& a, const ExactInt& b) { return ExactInt(a.v_ - b.v_); }
    friend ExactInt operator*(const ExactInt& a, const ExactInt& b) { return ExactInt(a.v_ * b.v_); }
    friend ExactInt operator-(const ExactInt& a) { return ExactInt(-a.v_); }

    friend bool operator==(const ExactInt& a, const ExactInt& b) { return mpz_cmp(a.v_.get_mpz_t(), b.v_.get_mpz_t()) == 0; }
    friend std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b) {
        int c = mpz_cmp(a.v_.get_mpz_t(), b.v_.get_mpz_t());
        return c <=> 0;
    }

    static ExactInt pow(const ExactInt& base, unsigned long exponent);

    /// gcd(a, b) >= 0; gcd(0, 0) = 0.
    static ExactInt gcd(const ExactInt& a, const ExactInt& b);

    /// Quotient n / d. Requires d != 0 and d | n; throws std::domain_error
    /// otherwise.
    static ExactInt div_exact(const ExactInt& n, const ExactInt& d);

    /// Truncated division: n = q*d + r with |r| < |d| and sign(r) = sign(n).
    /// Throws std::domain_error when d == 0.
    static void div_mod(const ExactInt& n, const ExactInt& d,
                        ExactInt& quotient, ExactInt& remainder);

    /// Strips every factor f out of n: returns (n / f^e, e) with the largest
    /// e such that f^e | n. Requires n != 0 and |f| >= 2.
    static std::pair<ExactInt, unsigned long> remove_factor(const ExactInt& n, const ExactInt& f);

private:
    explicit ExactInt(mpz_class v) : v_(std::move(v)) {}

    mpz_class v_;
};

} // namespace altsum

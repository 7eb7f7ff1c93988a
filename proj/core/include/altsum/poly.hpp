#pragma once

#include "altsum/exact_int.hpp"
#include "altsum/ratio.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace altsum {

/// Dense univariate polynomial with rational coefficients, ascending by
/// power. Canonical form: the zero polynomial is the empty list, otherwise
/// the last coefficient is nonzero. The variable is anonymous; whether a
/// polynomial is "in x" or "in u" is the caller's business.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Ratio> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static RatPoly constant(Ratio c);
    static RatPoly monomial(Ratio c, std::size_t power);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree, or -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    const std::vector<Ratio>& coeffs() const { return coeffs_; }
    /// Coefficient of X^i; zero beyond the degree.
    Ratio coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Ratio(0); }
    Ratio leading() const { return coeffs_.empty() ? Ratio(0) : coeffs_.back(); }

    RatPoly scaled(const Ratio& factor) const;

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Display form, e.g. "5u^3 + 25u" for variable 'u'.
    std::string to_string(char variable) const;

private:
    void normalize();

    std::vector<Ratio> coeffs_;
};

/// Same canonical-form contract with integer coefficients.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<ExactInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    const std::vector<ExactInt>& coeffs() const { return coeffs_; }
    ExactInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ExactInt(0); }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string(char variable) const;

private:
    void normalize();

    std::vector<ExactInt> coeffs_;
};

/// Canonical product; zero if either factor is zero.
RatPoly poly_mul(const RatPoly& a, const RatPoly& b);

/// Exact Horner evaluation.
Ratio poly_eval(const RatPoly& p, const Ratio& v);
ExactInt poly_eval(const IntPoly& p, const ExactInt& v);
Ratio poly_eval(const IntPoly& p, const Ratio& v);

/// outer(inner(X)) expanded to canonical form.
RatPoly poly_compose(const RatPoly& outer, const RatPoly& inner);

/// Canonical expansion of (X + offset)^d: degree exactly d, monic.
RatPoly binomial_expand(const Ratio& offset, unsigned d);

/// Integer-coefficient view, or nullopt if any coefficient has a
/// denominator other than 1.
std::optional<IntPoly> to_int_poly(const RatPoly& p);
RatPoly to_rat_poly(const IntPoly& p);

} // namespace altsum

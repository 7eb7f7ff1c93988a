#include "altsum/exact_int.hpp"

#include <cctype>
#include <stdexcept>

namespace altsum {

std::optional<ExactInt> ExactInt::parse(std::string_view text) {
    // Strict form: optional '-', then one or more digits. GMP itself would
    // silently skip whitespace, so validate before handing over.
    std::string_view digits = text;
    if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (digits.empty()) return std::nullopt;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    }
    ExactInt r;
    if (mpz_set_str(r.v_.get_mpz_t(), std::string(text).c_str(), 10) != 0) return std::nullopt;
    return r;
}

std::string ExactInt::to_decimal() const {
    return v_.get_str();
}

long ExactInt::to_long() const {
    if (!fits_long()) throw std::domain_error("ExactInt::to_long: value does not fit in long");
    return v_.get_si();
}

ExactInt ExactInt::abs() const {
    ExactInt r;
    mpz_abs(r.v_.get_mpz_t(), v_.get_mpz_t());
    return r;
}

ExactInt ExactInt::pow(const ExactInt& base, unsigned long exponent) {
    ExactInt r;
    mpz_pow_ui(r.v_.get_mpz_t(), base.v_.get_mpz_t(), exponent);
    return r;
}

ExactInt ExactInt::gcd(const ExactInt& a, const ExactInt& b) {
    ExactInt r;
    mpz_gcd(r.v_.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return r;
}

ExactInt ExactInt::div_exact(const ExactInt& n, const ExactInt& d) {
    if (d.is_zero()) throw std::domain_error("ExactInt::div_exact: division by zero");
    ExactInt q, r;
    div_mod(n, d, q, r);
    if (!r.is_zero()) throw std::domain_error("ExactInt::div_exact: remainder is nonzero");
    return q;
}

void ExactInt::div_mod(const ExactInt& n, const ExactInt& d,
                       ExactInt& quotient, ExactInt& remainder) {
    if (d.is_zero()) throw std::domain_error("ExactInt::div_mod: division by zero");
    mpz_tdiv_qr(quotient.v_.get_mpz_t(), remainder.v_.get_mpz_t(),
                n.v_.get_mpz_t(), d.v_.get_mpz_t());
}

std::pair<ExactInt, unsigned long> ExactInt::remove_factor(const ExactInt& n, const ExactInt& f) {
    if (n.is_zero()) throw std::domain_error("ExactInt::remove_factor: n must be nonzero");
    if (f.abs() <= ExactInt(1)) throw std::domain_error("ExactInt::remove_factor: |f| must be >= 2");
    ExactInt reduced;
    unsigned long e = mpz_remove(reduced.v_.get_mpz_t(), n.v_.get_mpz_t(), f.v_.get_mpz_t());
    return {reduced, e};
}

} // namespace altsum

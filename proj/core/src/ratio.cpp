#include "altsum/ratio.hpp"

#include <stdexcept>

namespace altsum {

Ratio::Ratio(ExactInt num, ExactInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("Ratio: zero denominator");
    reduce();
}

void Ratio::reduce() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    ExactInt g = ExactInt::gcd(num_, den_);
    if (g != ExactInt(1)) {
        num_ = ExactInt::div_exact(num_, g);
        den_ = ExactInt::div_exact(den_, g);
    }
}

std::optional<Ratio> Ratio::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        auto n = ExactInt::parse(text);
        if (!n) return std::nullopt;
        return Ratio(*n);
    }
    auto n = ExactInt::parse(text.substr(0, slash));
    auto d = ExactInt::parse(text.substr(slash + 1));
    if (!n || !d || d->is_zero()) return std::nullopt;
    return Ratio(*n, *d);
}

std::string Ratio::to_string() const {
    if (is_integer()) return num_.to_decimal();
    return num_.to_decimal() + "/" + den_.to_decimal();
}

const ExactInt& Ratio::as_integer() const {
    if (!is_integer()) throw std::domain_error("Ratio::as_integer: value " + to_string() + " is not an integer");
    return num_;
}

Ratio& Ratio::operator+=(const Ratio& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

Ratio& Ratio::operator-=(const Ratio& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

Ratio& Ratio::operator*=(const Ratio& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

Ratio& Ratio::operator/=(const Ratio& o) {
    if (o.is_zero()) throw std::domain_error("Ratio: division by zero");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    reduce();
    return *this;
}

Ratio operator-(const Ratio& a) {
    Ratio r = a;
    r.num_ = -r.num_;
    return r;
}

Ratio Ratio::pow(const Ratio& base, unsigned long exponent) {
    // Already reduced, so numerator and denominator powers stay coprime.
    Ratio r;
    r.num_ = ExactInt::pow(base.num_, exponent);
    r.den_ = ExactInt::pow(base.den_, exponent);
    return r;
}

} // namespace altsum

#include "altsum/poly.hpp"

#include <algorithm>
#include <sstream>

namespace altsum {

namespace {

template <typename Coeff>
void strip_trailing_zeros(std::vector<Coeff>& cs) {
    while (!cs.empty() && cs.back().is_zero()) cs.pop_back();
}

// Shared rendering for both coefficient types: highest power first,
// suppressing zero terms, unit coefficients and X^0/X^1 noise.
template <typename Coeff>
std::string render(const std::vector<Coeff>& cs, char variable) {
    if (cs.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t idx = cs.size(); idx-- > 0;) {
        const Coeff& c = cs[idx];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        std::string mag = negative ? (-c).to_string() : c.to_string();
        if (idx == 0) {
            out << mag;
        } else {
            if (mag != "1") out << mag;
            out << variable;
            if (idx > 1) out << "^" << idx;
        }
    }
    return out.str();
}

} // namespace

void RatPoly::normalize() { strip_trailing_zeros(coeffs_); }
void IntPoly::normalize() { strip_trailing_zeros(coeffs_); }

RatPoly RatPoly::constant(Ratio c) {
    std::vector<Ratio> cs;
    cs.push_back(std::move(c));
    return RatPoly(std::move(cs));
}

RatPoly RatPoly::monomial(Ratio c, std::size_t power) {
    std::vector<Ratio> cs(power + 1, Ratio(0));
    cs[power] = std::move(c);
    return RatPoly(std::move(cs));
}

RatPoly RatPoly::scaled(const Ratio& factor) const {
    std::vector<Ratio> cs;
    cs.reserve(coeffs_.size());
    for (const Ratio& c : coeffs_) cs.push_back(c * factor);
    return RatPoly(std::move(cs));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Ratio> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), Ratio(0));
    for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = a.coeff(i) + b.coeff(i);
    return RatPoly(std::move(cs));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<Ratio> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), Ratio(0));
    for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = a.coeff(i) - b.coeff(i);
    return RatPoly(std::move(cs));
}

std::string RatPoly::to_string(char variable) const { return render(coeffs_, variable); }
std::string IntPoly::to_string(char variable) const {
    if (coeffs_.empty()) return "0";
    // Reuse the rational renderer through a cheap view.
    std::vector<Ratio> view;
    view.reserve(coeffs_.size());
    for (const ExactInt& c : coeffs_) view.emplace_back(c);
    return render(view, variable);
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Ratio> cs(a.coeffs().size() + b.coeffs().size() - 1, Ratio(0));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
            cs[i + j] += a.coeffs()[i] * b.coeffs()[j];
        }
    }
    return RatPoly(std::move(cs));
}

Ratio poly_eval(const RatPoly& p, const Ratio& v) {
    Ratio acc(0);
    for (std::size_t idx = p.coeffs().size(); idx-- > 0;) {
        acc = acc * v + p.coeffs()[idx];
    }
    return acc;
}

ExactInt poly_eval(const IntPoly& p, const ExactInt& v) {
    ExactInt acc(0);
    for (std::size_t idx = p.coeffs().size(); idx-- > 0;) {
        acc = acc * v + p.coeffs()[idx];
    }
    return acc;
}

Ratio poly_eval(const IntPoly& p, const Ratio& v) {
    Ratio acc(0);
    for (std::size_t idx = p.coeffs().size(); idx-- > 0;) {
        acc = acc * v + Ratio(p.coeffs()[idx]);
    }
    return acc;
}

RatPoly poly_compose(const RatPoly& outer, const RatPoly& inner) {
    RatPoly acc;
    for (std::size_t idx = outer.coeffs().size(); idx-- > 0;) {
        acc = poly_mul(acc, inner) + RatPoly::constant(outer.coeffs()[idx]);
    }
    return acc;
}

RatPoly binomial_expand(const Ratio& offset, unsigned d) {
    // (X + offset)^d = sum_i C(d, i) offset^(d-i) X^i.
    std::vector<Ratio> cs(d + 1, Ratio(0));
    ExactInt binom(1); // C(d, i), updated incrementally
    std::vector<Ratio> offset_powers(d + 1, Ratio(1));
    for (unsigned i = 1; i <= d; ++i) offset_powers[i] = offset_powers[i - 1] * offset;
    for (unsigned i = 0; i <= d; ++i) {
        cs[i] = Ratio(binom) * offset_powers[d - i];
        // C(d, i+1) = C(d, i) * (d - i) / (i + 1), exact at every step.
        if (i < d) binom = ExactInt::div_exact(binom * ExactInt(static_cast<long>(d - i)), ExactInt(static_cast<long>(i + 1)));
    }
    return RatPoly(std::move(cs));
}

std::optional<IntPoly> to_int_poly(const RatPoly& p) {
    std::vector<ExactInt> cs;
    cs.reserve(p.coeffs().size());
    for (const Ratio& c : p.coeffs()) {
        if (!c.is_integer()) return std::nullopt;
        cs.push_back(c.num());
    }
    return IntPoly(std::move(cs));
}

RatPoly to_rat_poly(const IntPoly& p) {
    std::vector<Ratio> cs;
    cs.reserve(p.coeffs().size());
    for (const ExactInt& c : p.coeffs()) cs.emplace_back(c);
    return RatPoly(std::move(cs));
}

} // namespace altsum

#include "altsum/power_sum.hpp"

#include <cassert>
#include <stdexcept>

namespace altsum {

namespace {

void require_degree(unsigned d, const char* who) {
    if (d == 0) throw std::domain_error(std::string(who) + ": degree must be >= 1");
}

// Signed combination p(X) - p(X+s1) - p(X+s2) + p(X+s3) of binomial
// expansions, shared by both closed forms.
RatPoly signed_expansion(unsigned d, long o0, long o1, long o2, long o3) {
    RatPoly p = binomial_expand(Ratio(o0), d);
    p = p - binomial_expand(Ratio(o1), d);
    p = p - binomial_expand(Ratio(o2), d);
    p = p + binomial_expand(Ratio(o3), d);
    return p;
}

} // namespace

Ratio alt_sum_naive(const HalfInt& x, unsigned d) {
    require_degree(d, "alt_sum_naive");
    Ratio r = Ratio::pow(x.to_ratio(), d);
    r -= Ratio::pow((x + 1).to_ratio(), d);
    r -= Ratio::pow((x + 2).to_ratio(), d);
    r += Ratio::pow((x + 3).to_ratio(), d);
    return r;
}

IntPoly alt_sum_poly(unsigned d) {
    require_degree(d, "alt_sum_poly");
    RatPoly p = signed_expansion(d, 0, 1, 2, 3);
    auto ip = to_int_poly(p);
    assert(ip && "alternating sum of integer binomials has integer coefficients");
    return *ip;
}

UForm to_u_form(unsigned d) {
    require_degree(d, "to_u_form");
    RatPoly p = signed_expansion(d, 3, 1, -1, -3);
    Ratio half_pow = Ratio::pow(Ratio(ExactInt(1), ExactInt(2)), d);
    return UForm{d, p.scaled(half_pow)};
}

} // namespace altsum

#pragma once

#include "altsum/half_int.hpp"
#include "altsum/poly.hpp"
#include "altsum/ratio.hpp"

namespace altsum {

/// S_d(x) = x^d - (x+1)^d - (x+2)^d + (x+3)^d, rewritten in u = 2x + 3:
///
///   S_d = 2^(-d) [ (u+3)^d - (u+1)^d - (u-1)^d + (u-3)^d ].
///
/// The substitution centers the four consecutive arguments, so poly only
/// contains powers u^i with i = d (mod 2), its degree is d - 2 (zero for
/// d = 1), and every coefficient denominator is a power of 2 dividing 2^d.
/// It takes integer values at every odd integer u.
struct UForm {
    unsigned d = 0;
    RatPoly poly;
};

/// The brute-force route: four exact exponentiations. This is the oracle
/// every other evaluation path is checked against. Throws std::domain_error
/// for d = 0.
Ratio alt_sum_naive(const HalfInt& x, unsigned d);

/// S_d expanded as a polynomial in x with integer coefficients.
/// alt_sum_poly(1) is the zero polynomial; alt_sum_poly(2) is the constant 4.
IntPoly alt_sum_poly(unsigned d);

/// The closed form in u. Composing with u = 2x + 3 reproduces
/// alt_sum_poly(d) as an exact polynomial identity.
UForm to_u_form(unsigned d);

} // namespace altsum

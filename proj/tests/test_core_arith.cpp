#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "altsum/exact_int.hpp"
#include "altsum/half_int.hpp"
#include "altsum/poly.hpp"
#include "altsum/ratio.hpp"

#include "test_support.hpp"

#include <stdexcept>

using namespace altsum;
using altsum::test::make_rng;
using altsum::test::random_long;
using altsum::test::random_poly;
using altsum::test::random_ratio;

TEST_CASE("ExactInt decimal round-trip") {
    for (const char* text : {"0", "1", "-1", "42", "-987654321", "100000000000000000007"}) {
        auto n = ExactInt::parse(text);
        REQUIRE(n);
        CHECK(n->to_decimal() == text);
    }
    CHECK(ExactInt::parse("007")->to_decimal() == "7");
}

TEST_CASE("ExactInt handles 5^700 exactly") {
    ExactInt big = ExactInt::pow(ExactInt(5), 700);
    // Independent route: repeated multiplication.
    ExactInt check(1);
    for (int i = 0; i < 700; ++i) check *= ExactInt(5);
    CHECK(big == check);

    std::string text = big.to_decimal();
    CHECK(text.size() == 490);
    auto back = ExactInt::parse(text);
    REQUIRE(back);
    CHECK(*back == big);
}

TEST_CASE("ExactInt parse rejects junk") {
    CHECK_FALSE(ExactInt::parse(""));
    CHECK_FALSE(ExactInt::parse("-"));
    CHECK_FALSE(ExactInt::parse("12a"));
    CHECK_FALSE(ExactInt::parse("1 2"));
    CHECK_FALSE(ExactInt::parse("+5"));
    CHECK_FALSE(ExactInt::parse("1.5"));
}

TEST_CASE("ExactInt arithmetic identities on random values") {
    auto rng = make_rng();
    for (int i = 0; i < 200; ++i) {
        ExactInt a(random_long(rng, -1000000, 1000000));
        ExactInt b(random_long(rng, -1000000, 1000000));
        CHECK((a + b) * (a - b) == a * a - b * b);
        CHECK(a + b == b + a);
        CHECK(-(-a) == a);
    }
}

TEST_CASE("ExactInt parity, sign, abs") {
    CHECK(ExactInt(0).is_zero());
    CHECK(ExactInt(0).is_even());
    CHECK(ExactInt(-3).is_odd());
    CHECK(ExactInt(-3).sign() == -1);
    CHECK(ExactInt(7).sign() == 1);
    CHECK(ExactInt(-3).abs() == ExactInt(3));
}

TEST_CASE("ExactInt gcd") {
    CHECK(ExactInt::gcd(ExactInt(12), ExactInt(18)) == ExactInt(6));
    CHECK(ExactInt::gcd(ExactInt(-12), ExactInt(18)) == ExactInt(6));
    CHECK(ExactInt::gcd(ExactInt(0), ExactInt(0)) == ExactInt(0));
    CHECK(ExactInt::gcd(ExactInt(0), ExactInt(5)) == ExactInt(5));
}

TEST_CASE("ExactInt division helpers") {
    CHECK(ExactInt::div_exact(ExactInt(750), ExactInt(5)) == ExactInt(150));
    CHECK_THROWS_AS(ExactInt::div_exact(ExactInt(7), ExactInt(2)), std::domain_error);
    CHECK_THROWS_AS(ExactInt::div_exact(ExactInt(7), ExactInt(0)), std::domain_error);

    ExactInt q, r;
    ExactInt::div_mod(ExactInt(7), ExactInt(2), q, r);
    CHECK(q == ExactInt(3));
    CHECK(r == ExactInt(1));
    ExactInt::div_mod(ExactInt(-7), ExactInt(2), q, r);
    CHECK(q == ExactInt(-3));
    CHECK(r == ExactInt(-1));
    CHECK_THROWS_AS(ExactInt::div_mod(ExactInt(1), ExactInt(0), q, r), std::domain_error);
}

TEST_CASE("ExactInt remove_factor") {
    auto [reduced, e] = ExactInt::remove_factor(ExactInt(750), ExactInt(5));
    CHECK(reduced == ExactInt(6));
    CHECK(e == 3);

    auto [r1, e1] = ExactInt::remove_factor(ExactInt(1), ExactInt(5));
    CHECK(r1 == ExactInt(1));
    CHECK(e1 == 0);

    CHECK_THROWS_AS(ExactInt::remove_factor(ExactInt(0), ExactInt(5)), std::domain_error);
    CHECK_THROWS_AS(ExactInt::remove_factor(ExactInt(10), ExactInt(1)), std::domain_error);
}

TEST_CASE("ExactInt to_long") {
    CHECK(ExactInt(-42).to_long() == -42);
    CHECK_THROWS_AS(ExactInt::pow(ExactInt(10), 30).to_long(), std::domain_error);
}

TEST_CASE("Ratio reduction invariants") {
    Ratio a(ExactInt(6), ExactInt(4));
    CHECK(a.num() == ExactInt(3));
    CHECK(a.den() == ExactInt(2));

    Ratio b(ExactInt(6), ExactInt(-4));
    CHECK(b.num() == ExactInt(-3));
    CHECK(b.den() == ExactInt(2));

    Ratio z(ExactInt(0), ExactInt(17));
    CHECK(z.is_zero());
    CHECK(z.den() == ExactInt(1));

    CHECK_THROWS_AS(Ratio(ExactInt(1), ExactInt(0)), std::domain_error);

    auto rng = make_rng(7);
    for (int i = 0; i < 200; ++i) {
        Ratio r = random_ratio(rng);
        CHECK(r.den() >= ExactInt(1));
        CHECK(ExactInt::gcd(r.num(), r.den()) == ExactInt(1));
    }
}

TEST_CASE("Ratio parse and render") {
    CHECK(Ratio::parse("3/2")->to_string() == "3/2");
    CHECK(Ratio::parse("-7")->to_string() == "-7");
    CHECK(Ratio::parse("4/6")->to_string() == "2/3");
    CHECK(Ratio::parse("-4/-6")->to_string() == "2/3");
    CHECK_FALSE(Ratio::parse("1/0"));
    CHECK_FALSE(Ratio::parse("a"));
    CHECK_FALSE(Ratio::parse("1/"));
    CHECK_FALSE(Ratio::parse("/2"));
}

TEST_CASE("Ratio arithmetic") {
    Ratio half(ExactInt(1), ExactInt(2));
    Ratio third(ExactInt(1), ExactInt(3));
    CHECK((half + third).to_string() == "5/6");
    CHECK((half - third).to_string() == "1/6");
    CHECK((half * third).to_string() == "1/6");
    CHECK((half / third).to_string() == "3/2");
    CHECK_THROWS_AS(half / Ratio(0), std::domain_error);
    CHECK(Ratio::pow(Ratio(ExactInt(3), ExactInt(2)), 3).to_string() == "27/8");
    CHECK(Ratio::pow(half, 0) == Ratio(1));

    auto rng = make_rng(11);
    for (int i = 0; i < 200; ++i) {
        Ratio a = random_ratio(rng), b = random_ratio(rng), c = random_ratio(rng);
        CHECK((a + b) * c == a * c + b * c);
    }
}

TEST_CASE("Ratio ordering and as_integer") {
    CHECK(Ratio(ExactInt(1), ExactInt(3)) < Ratio(ExactInt(1), ExactInt(2)));
    CHECK(Ratio(-1) < Ratio(ExactInt(-1), ExactInt(2)));
    CHECK(Ratio(ExactInt(4), ExactInt(2)).as_integer() == ExactInt(2));
    CHECK_THROWS_AS(Ratio(ExactInt(1), ExactInt(2)).as_integer(), std::domain_error);
}

TEST_CASE("HalfInt representation and parsing") {
    HalfInt h = HalfInt::from_twice(ExactInt(3));
    CHECK(h.to_string() == "3/2");
    CHECK_FALSE(h.is_integer());
    CHECK(h.to_ratio() == Ratio(ExactInt(3), ExactInt(2)));

    CHECK(HalfInt::parse("4/2")->to_string() == "2");
    CHECK(HalfInt::parse("-1")->as_integer() == ExactInt(-1));
    CHECK(HalfInt::parse("3/2")->twice_value() == ExactInt(3));
    CHECK_FALSE(HalfInt::parse("3/4"));
    CHECK_FALSE(HalfInt::parse("1/3"));
    CHECK_FALSE(HalfInt::parse("x"));

    CHECK((h + 1).to_string() == "5/2");
    CHECK((HalfInt::from_integer(ExactInt(2)) + 3).as_integer() == ExactInt(5));
    CHECK_THROWS_AS(h.as_integer(), std::domain_error);
}

TEST_CASE("polynomial canonical form") {
    RatPoly zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(zero.coeffs().empty());

    RatPoly trimmed(std::vector<Ratio>{Ratio(1), Ratio(2), Ratio(0), Ratio(0)});
    CHECK(trimmed.degree() == 1);

    // Normalizing twice is the same as normalizing once.
    RatPoly again(trimmed.coeffs());
    CHECK(again == trimmed);

    RatPoly all_zero(std::vector<Ratio>{Ratio(0), Ratio(0)});
    CHECK(all_zero == zero);

    IntPoly izero(std::vector<ExactInt>{ExactInt(0)});
    CHECK(izero.is_zero());
}

TEST_CASE("binomial_expand examples") {
    RatPoly sq = binomial_expand(Ratio(3), 2);
    CHECK(sq.coeffs() == std::vector<Ratio>{Ratio(9), Ratio(6), Ratio(1)});

    RatPoly pascal = binomial_expand(Ratio(1), 5);
    CHECK(pascal.coeffs() ==
          std::vector<Ratio>{Ratio(1), Ratio(5), Ratio(10), Ratio(10), Ratio(5), Ratio(1)});

    RatPoly shifted = binomial_expand(Ratio(3), 5);
    CHECK(shifted.coeffs() == std::vector<Ratio>{Ratio(243), Ratio(405), Ratio(270), Ratio(90),
                                                 Ratio(15), Ratio(1)});

    // Independent oracle: five repeated multiplications by (X + 3).
    RatPoly factor(std::vector<Ratio>{Ratio(3), Ratio(1)});
    RatPoly product = RatPoly::constant(Ratio(1));
    for (int i = 0; i < 5; ++i) product = poly_mul(product, factor);
    CHECK(product == shifted);

    CHECK(binomial_expand(Ratio(7), 0) == RatPoly::constant(Ratio(1)));
}

TEST_CASE("binomial_expand agrees with exact powers at random points") {
    auto rng = make_rng(13);
    for (unsigned d = 0; d <= 12; ++d) {
        for (int i = 0; i < 8; ++i) {
            Ratio offset = random_ratio(rng, 9, 4);
            Ratio v = random_ratio(rng, 9, 4);
            CHECK(poly_eval(binomial_expand(offset, d), v) == Ratio::pow(v + offset, d));
        }
    }
}

TEST_CASE("poly_mul examples") {
    RatPoly a(std::vector<Ratio>{Ratio(3), Ratio(2)});           // 2X + 3
    RatPoly b(std::vector<Ratio>{Ratio(7), Ratio(6), Ratio(2)}); // 2X^2 + 6X + 7
    RatPoly ab = poly_mul(a, b);
    CHECK(ab.coeffs() == std::vector<Ratio>{Ratio(21), Ratio(32), Ratio(18), Ratio(4)});

    RatPoly scaled = ab.scaled(Ratio(10));
    CHECK(scaled.coeffs() == std::vector<Ratio>{Ratio(210), Ratio(320), Ratio(180), Ratio(40)});

    CHECK(poly_mul(RatPoly(), b).is_zero());

    RatPoly xp1(std::vector<Ratio>{Ratio(1), Ratio(1)});
    RatPoly xm1(std::vector<Ratio>{Ratio(-1), Ratio(1)});
    CHECK(poly_mul(xp1, xm1).coeffs() == std::vector<Ratio>{Ratio(-1), Ratio(0), Ratio(1)});
}

TEST_CASE("poly_eval examples") {
    RatPoly p(std::vector<Ratio>{Ratio(210), Ratio(320), Ratio(180), Ratio(40)});
    CHECK(poly_eval(p, Ratio(1)) == Ratio(750));
    CHECK(poly_eval(p, Ratio(11)) == Ratio(78750));
    CHECK(poly_eval(p, Ratio(0)) == Ratio(210));
    CHECK(poly_eval(RatPoly(), Ratio(5)) == Ratio(0));
}

TEST_CASE("eval is multiplicative over poly_mul at random points") {
    auto rng = make_rng(17);
    for (int i = 0; i < 100; ++i) {
        RatPoly a = random_poly(rng);
        RatPoly b = random_poly(rng);
        Ratio v = random_ratio(rng, 30, 7);
        CHECK(poly_eval(poly_mul(a, b), v) == poly_eval(a, v) * poly_eval(b, v));
    }
}

TEST_CASE("poly_compose") {
    RatPoly outer(std::vector<Ratio>{Ratio(1), Ratio(0), Ratio(1)}); // X^2 + 1
    RatPoly inner(std::vector<Ratio>{Ratio(1), Ratio(1)});           // X + 1
    CHECK(poly_compose(outer, inner).coeffs() ==
          std::vector<Ratio>{Ratio(2), Ratio(2), Ratio(1)});

    auto rng = make_rng(19);
    for (int i = 0; i < 40; ++i) {
        RatPoly f = random_poly(rng, 4);
        RatPoly ginner = random_poly(rng, 3);
        Ratio v = random_ratio(rng, 9, 3);
        CHECK(poly_eval(poly_compose(f, ginner), v) == poly_eval(f, poly_eval(ginner, v)));
    }
}

TEST_CASE("integer/rational polynomial conversions") {
    RatPoly p(std::vector<Ratio>{Ratio(2), Ratio(-3)});
    auto ip = to_int_poly(p);
    REQUIRE(ip);
    CHECK(ip->coeffs() == std::vector<ExactInt>{ExactInt(2), ExactInt(-3)});
    CHECK(to_rat_poly(*ip) == p);

    RatPoly frac(std::vector<Ratio>{Ratio(ExactInt(1), ExactInt(2))});
    CHECK_FALSE(to_int_poly(frac));

    IntPoly ip2(std::vector<ExactInt>{ExactInt(7), ExactInt(0), ExactInt(5)});
    CHECK(poly_eval(ip2, ExactInt(2)) == ExactInt(27));
    CHECK(poly_eval(ip2, Ratio(ExactInt(1), ExactInt(2))) == Ratio(ExactInt(33), ExactInt(4)));
}

TEST_CASE("polynomial rendering") {
    RatPoly p(std::vector<Ratio>{Ratio(0), Ratio(25), Ratio(0), Ratio(5)});
    CHECK(p.to_string('u') == "5u^3 + 25u");
    RatPoly q(std::vector<Ratio>{Ratio(3), Ratio(0), Ratio(-1)});
    CHECK(q.to_string('x') == "-x^2 + 3");
    CHECK(RatPoly().to_string('x') == "0");
    RatPoly r(std::vector<Ratio>{Ratio(ExactInt(91), ExactInt(4))});
    CHECK(r.to_string('u') == "91/4");
}

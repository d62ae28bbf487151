#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "procp/graded.hpp"

using namespace procp;

namespace {

GradedElement random_element(std::mt19937& rng, const TruncationContext& ctx, int degree) {
    GradedElement g(ctx, degree);
    std::uniform_int_distribution<i64> c(0, ctx.p - 1);
    for (i64 i = 0; i < u_dim(ctx, degree); ++i) {
        auto [j, w] = monomial_of_index(ctx, degree, i);
        g.set_term(j, w, c(rng));
    }
    return g;
}

} // namespace

TEST_CASE("slice dimensions") {
    TruncationContext d2(3, 2, 5);
    i64 expect2[] = {1, 3, 7, 15, 31, 63};
    for (int n = 0; n <= 5; ++n) CHECK(u_dim(d2, n) == expect2[n]);

    TruncationContext d3(2, 3, 4);
    i64 expect3[] = {1, 4, 13, 40, 121};
    for (int n = 0; n <= 4; ++n) CHECK(u_dim(d3, n) == expect3[n]);

    TruncationContext d1(5, 1, 4);
    CHECK(u_dim(d1, 4) == 5);

    CHECK_THROWS_AS(u_dim(d2, -1), Error);
    CHECK_THROWS_AS(u_dim(d2, 6), Error);
    try {
        u_dim(d2, 6);
    } catch (const Error& e) {
        CHECK(e.code() == errc::degree_out_of_range);
    }
}

TEST_CASE("context validation") {
    CHECK_THROWS_AS(TruncationContext(4, 2, 5), Error);   // p not prime
    CHECK_THROWS_AS(TruncationContext(3, 0, 5), Error);   // no generators
    CHECK_THROWS_AS(TruncationContext(3, 2, 1), Error);   // truncation too small
    CHECK_THROWS_AS(TruncationContext(2, 2, 62), Error);  // p^N overflows
    CHECK_THROWS_AS(TruncationContext(2, 10, 10), Error); // basis too large
    try {
        TruncationContext(9, 2, 5);
    } catch (const Error& e) {
        CHECK(e.code() == errc::non_prime_p);
    }

    TruncationContext ctx(3, 2, 4);
    CHECK(ctx.coeff_modulus(1) == 81); // p^N
    CHECK(ctx.coeff_modulus(4) == 3);  // p^1
    CHECK(ctx.weight_top() == 5);
}

TEST_CASE("monomial indexing round trip and basis order") {
    TruncationContext ctx(3, 2, 5);
    for (int n = 0; n <= 4; ++n) {
        for (i64 i = 0; i < u_dim(ctx, n); ++i) {
            auto [j, w] = monomial_of_index(ctx, n, i);
            CHECK(j + (int)w.size() == n);
            CHECK(monomial_index(ctx, n, j, w) == i);
        }
    }
    // the j = 0 block comes first, lexicographic inside a block
    Letters x1x2;
    x1x2.push_back(0);
    x1x2.push_back(1);
    CHECK(monomial_index(ctx, 2, 0, x1x2) == 1);
    CHECK(monomial_index(ctx, 2, 1, Letters(1, (char)1)) == 5);
    CHECK(monomial_index(ctx, 2, 2, Letters()) == 6);
}

TEST_CASE("generators, pi, and rendering") {
    TruncationContext ctx(3, 2, 5);
    GradedElement x1 = GradedElement::generator(ctx, 1);
    GradedElement x2 = GradedElement::generator(ctx, 2);
    GradedElement pi = GradedElement::pi(ctx);
    CHECK(x1.to_string() == "x1");
    CHECK(x2.to_string() == "x2");
    CHECK(pi.to_string() == "pi");
    CHECK(GradedElement::zero(ctx, 3).to_string() == "0");
    CHECK((x1 + x2.scaled(2)).to_string() == "x1 + 2 x2");

    GradedElement m(ctx, 4);
    Letters w;
    w.push_back(0);
    w.push_back(1);
    m.set_term(2, w, 2);
    CHECK(m.to_string() == "2 pi^2 x1.x2");

    CHECK_THROWS_AS(GradedElement::generator(ctx, 3), Error);
    CHECK_THROWS_AS(GradedElement::generator(ctx, 0), Error);
}

TEST_CASE("product and bracket coefficients") {
    TruncationContext ctx(3, 2, 5);
    GradedElement x1 = GradedElement::generator(ctx, 1);
    GradedElement x2 = GradedElement::generator(ctx, 2);
    GradedElement b = bracket(x1, x2);
    Letters w12, w21;
    w12.push_back(0);
    w12.push_back(1);
    w21.push_back(1);
    w21.push_back(0);
    CHECK(b.coeff(0, w12) == 1);
    CHECK(b.coeff(0, w21) == 2); // -1 mod 3
    CHECK(b.to_string() == "x1.x2 + 2 x2.x1");
    CHECK(bracket(x1, x1).is_zero());

    GradedElement sq = mul(x1 + x2, x1 + x2);
    Letters w11, w22;
    w11.assign(2, (char)0);
    w22.assign(2, (char)1);
    CHECK(sq.coeff(0, w11) == 1);
    CHECK(sq.coeff(0, w12) == 1);
    CHECK(sq.coeff(0, w21) == 1);
    CHECK(sq.coeff(0, w22) == 1);
}

TEST_CASE("degree overflow") {
    TruncationContext ctx(3, 2, 3);
    GradedElement a(ctx, 2), b(ctx, 2);
    CHECK_THROWS_AS(mul(a, b), Error);
    GradedElement top(ctx, 3);
    CHECK_THROWS_AS(pi_mul(top), Error);
    try {
        mul(a, b);
    } catch (const Error& e) {
        CHECK(e.code() == errc::degree_overflow);
    }
}

TEST_CASE("pi is central") {
    std::mt19937 rng(7);
    TruncationContext ctx(5, 2, 4);
    GradedElement pi = GradedElement::pi(ctx);
    for (int trial = 0; trial < 20; ++trial) {
        GradedElement a = random_element(rng, ctx, 1 + trial % 3);
        CHECK(mul(pi, a) == mul(a, pi));
        CHECK(mul(pi, a) == pi_mul(a));
    }
}

TEST_CASE("associativity and bilinearity on random elements") {
    std::mt19937 rng(99);
    for (i64 p : {2, 3, 5}) {
        TruncationContext ctx(p, 2, 5);
        for (int trial = 0; trial < 15; ++trial) {
            GradedElement a = random_element(rng, ctx, 1);
            GradedElement b = random_element(rng, ctx, 2);
            GradedElement c = random_element(rng, ctx, 1);
            CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
            CHECK(mul(a + c, b) == mul(a, b) + mul(c, b));
        }
    }
}

TEST_CASE("Jacobi identity") {
    std::mt19937 rng(1234);
    TruncationContext ctx(3, 2, 5);
    for (int trial = 0; trial < 15; ++trial) {
        GradedElement a = random_element(rng, ctx, 1);
        GradedElement b = random_element(rng, ctx, 2);
        GradedElement c = random_element(rng, ctx, 1);
        GradedElement j = bracket(bracket(a, b), c) + bracket(bracket(b, c), a) +
                          bracket(bracket(c, a), b);
        CHECK(j.is_zero());
    }
}

TEST_CASE("the restricted operator") {
    // odd p: always multiplication by pi
    TruncationContext odd(3, 2, 4);
    GradedElement a = GradedElement::generator(odd, 1) + GradedElement::generator(odd, 2);
    CHECK(apply_P(a, true) == pi_mul(a));

    // p = 2, degree-1 combination of letters: a^2 + pi a
    TruncationContext even(2, 2, 4);
    GradedElement x1 = GradedElement::generator(even, 1);
    GradedElement x2 = GradedElement::generator(even, 2);
    GradedElement s = x1 + x2;
    GradedElement expect = mul(s, s) + pi_mul(s);
    CHECK(apply_P(s, true) == expect);
    Letters w12, w21;
    w12.push_back(0);
    w12.push_back(1);
    w21.push_back(1);
    w21.push_back(0);
    GradedElement ps = apply_P(s, true);
    CHECK(ps.coeff(0, Letters(2, (char)0)) == 1); // x1.x1
    CHECK(ps.coeff(0, w12) == 1);
    CHECK(ps.coeff(0, w21) == 1);
    CHECK(ps.coeff(1, Letters(1, (char)0)) == 1); // pi x1
    CHECK(ps.coeff(1, Letters(1, (char)1)) == 1); // pi x2

    // p = 2 but not a plain letter combination, or higher degree: just pi a
    CHECK(apply_P(s, false) == pi_mul(s));
    GradedElement deg2 = bracket(x1, x2);
    CHECK(apply_P(deg2, false) == pi_mul(deg2));
    CHECK(apply_P(deg2, true) == pi_mul(deg2));
}

TEST_CASE("scaling and linear structure") {
    TruncationContext ctx(5, 2, 4);
    std::mt19937 rng(55);
    GradedElement a = random_element(rng, ctx, 2);
    CHECK(a.scaled(0).is_zero());
    CHECK(a.scaled(1) == a);
    CHECK(a.scaled(2) == a + a);
    CHECK((a - a).is_zero());
    GradedElement b(ctx, 3);
    CHECK_THROWS_AS(a + b, Error); // degree mismatch
}

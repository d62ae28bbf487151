#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "procp/milnor.hpp"

using namespace procp;

TEST_CASE("prime fields and extension fields come out right") {
    FiniteField F7 = FiniteField::make(7);
    CHECK(F7.p0 == 7);
    CHECK(F7.k == 1);
    CHECK(F7.mul(3, 5) == 1);
    CHECK(F7.add(5, 4) == 2);
    CHECK(F7.sub(2, 5) == 4);
    CHECK(F7.inv(3) == 5);
    CHECK(F7.pow(3, 6) == 1);
    CHECK(F7.to_string(4) == "4");

    FiniteField F4 = FiniteField::make(4);
    CHECK(F4.p0 == 2);
    CHECK(F4.k == 2);
    CHECK(F4.modulus == detail::Poly{1, 1, 1}); // t^2 + t + 1, the first candidate
    CHECK(F4.add(2, 3) == 1);                   // t + (t+1)
    CHECK(F4.mul(2, 2) == 3);                   // t^2 = t + 1
    CHECK(F4.mul(2, 3) == 1);                   // t (t+1) = 1
    CHECK(F4.inv(2) == 3);
    CHECK(F4.to_string(3) == "t+1");

    FiniteField F8 = FiniteField::make(8);
    CHECK(F8.modulus == detail::Poly{1, 1, 0, 1}); // t^3 + t + 1 beats t^3 + 1

    FiniteField F9 = FiniteField::make(9);
    CHECK(F9.modulus == detail::Poly{1, 0, 1}); // t^2 + 1 (t^2 has a root)
    CHECK(F9.to_string(5) == "t+2");

    for (i64 bad : {i64(0), i64(1), i64(6), i64(12)}) {
        try {
            FiniteField::make(bad);
            FAIL("expected rejection of " << bad);
        } catch (const Error& e) {
            CHECK(e.code() == errc::bad_field);
        }
    }
    try {
        FiniteField::make(2000003);
        FAIL("expected a size cap");
    } catch (const Error& e) {
        CHECK(e.code() == errc::resource_cap);
    }
}

TEST_CASE("field exhaustive laws on F_9") {
    FiniteField F = FiniteField::make(9);
    for (i64 a = 0; a < 9; ++a)
        for (i64 b = 0; b < 9; ++b) {
            CHECK(F.add(a, b) == F.add(b, a));
            CHECK(F.mul(a, b) == F.mul(b, a));
            CHECK(F.sub(F.add(a, b), b) == a);
            for (i64 c = 0; c < 9; ++c)
                CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        }
    for (i64 a = 1; a < 9; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
}

TEST_CASE("adapters expose primitive roots, classes, and hypothesis failures") {
    FieldAdapter f = FieldAdapter::make(7, 2);
    CHECK(f.generator() == 3);
    CHECK(unit_classes(f) == std::vector<i64>{3});
    CHECK(f.units().size() == 6);
    // squares of F_7 are {1, 2, 4}
    for (i64 u : {i64(1), i64(2), i64(4)}) CHECK(f.unit_class(u) == 0);
    for (i64 u : {i64(3), i64(5), i64(6)}) CHECK(f.unit_class(u) == 1);
    CHECK(f.class_rep(1) == 3);

    FieldAdapter f4 = FieldAdapter::make(4, 3);
    CHECK(f4.generator() == 2);
    CHECK(unit_classes(f4).size() == 1);
    CHECK(f4.unit_class(1) == 0); // cubes are just {1}
    CHECK(f4.unit_class(2) == 1);
    CHECK(f4.unit_class(3) == 2);

    try {
        FieldAdapter::make(5, 3);
        FAIL("expected the root-of-unity hypothesis to fail");
    } catch (const Error& e) {
        CHECK(e.code() == errc::no_root_of_unity);
    }
    try {
        FieldAdapter::make(7, 4);
        FAIL("expected a prime check");
    } catch (const Error& e) {
        CHECK(e.code() == errc::non_prime_p);
    }
    try {
        FieldAdapter::make(103, 3);
        FAIL("expected the q^p cap");
    } catch (const Error& e) {
        CHECK(e.code() == errc::resource_cap);
    }
    try {
        FieldAdapter::make(7, 2, 2); // 2 has order 3 in F_7*
        FAIL("expected generator validation");
    } catch (const Error& e) {
        CHECK(e.code() == errc::bad_field);
    }
}

TEST_CASE("norms of the radical extension, by hand and by sweep") {
    FieldAdapter f = FieldAdapter::make(7, 2);
    RadicalExtension K(f, 3); // F_7[s] / (s^2 - 3) = F_49
    CHECK(K.norm({0, 1}) == 4); // N(s) = s * s^7 = s^8 = 3^4
    CHECK(K.norm({1, 1}) == 5); // N(1+s) = (1+s)(1+6s)
    CHECK(K.norm({2, 0}) == 4); // constants: N(c) = c^2

    CHECK(norm_classes(f, 3) == std::vector<i64>{0, 1});
    CHECK(norm_classes(f, 6) == std::vector<i64>{0, 1});
    try {
        norm_classes(f, 2); // 2 = 3^2 is a square
        FAIL("expected a trivial extension");
    } catch (const Error& e) {
        CHECK(e.code() == errc::trivial_extension);
    }

    FieldAdapter f4 = FieldAdapter::make(4, 3);
    CHECK(norm_classes(f4, 2) == std::vector<i64>{0, 1, 2}); // N: F_64* -> F_4* onto
}

TEST_CASE("symbol quotient dims: one line in degree 1, collapse above") {
    struct Case {
        i64 q, p;
    } cases[] = {{7, 2}, {7, 3}, {4, 3}, {13, 3}};
    for (auto [q, p] : cases) {
        INFO("q=" << q << " p=" << p);
        FieldAdapter f = FieldAdapter::make(q, p);
        CHECK(milnor_dims(f, 1) == 1);
        CHECK(milnor_dims(f, 2) == 0);
        CHECK(milnor_dims(f, 3) == 0);
    }
    FieldAdapter f = FieldAdapter::make(7, 2);
    MilnorRing ring = milnor_ring(f, 2);
    CHECK(ring.ambient_dim == 1);
    CHECK(ring.relations.rank() == 1);
    try {
        milnor_ring(f, 0);
        FAIL("expected a degree guard");
    } catch (const Error& e) {
        CHECK(e.code() == errc::degree_out_of_range);
    }
}

TEST_CASE("the identities hold exhaustively in the computed quotients") {
    for (auto [q, p] : {std::pair<i64, i64>{7, 2}, {13, 3}, {4, 3}}) {
        INFO("q=" << q << " p=" << p);
        FieldAdapter f = FieldAdapter::make(q, p);
        SteinbergReport rep = steinberg_suite(f, 2);
        CHECK(rep.sum_one_ok);
        CHECK(rep.minus_ok);
        CHECK(rep.antisym_ok);
        CHECK(rep.passed);
        CHECK(rep.witnesses.empty());
        CHECK(rep.checked > 0);
    }
    // degree-3 symbols collapse the same way
    FieldAdapter f7 = FieldAdapter::make(7, 2);
    CHECK(steinberg_suite(f7, 3).passed);

    // count the degree-2 sweep on F_7: 5 + 6 + 36 checks
    CHECK(steinberg_suite(f7, 2).checked == 47);

    try {
        steinberg_suite(f7, 1);
        FAIL("expected a degree guard");
    } catch (const Error& e) {
        CHECK(e.code() == errc::degree_out_of_range);
    }
    FieldAdapter big = FieldAdapter::make(997, 2);
    try {
        steinberg_suite(big, 3);
        FAIL("expected a sweep cap");
    } catch (const Error& e) {
        CHECK(e.code() == errc::resource_cap);
    }
}

TEST_CASE("quotient dims do not depend on the choice of primitive root") {
    FieldAdapter a = FieldAdapter::make(7, 2);
    FieldAdapter b = FieldAdapter::make(7, 2, 5);
    CHECK(a.generator() != b.generator());
    for (int n = 1; n <= 3; ++n) CHECK(milnor_dims(a, n) == milnor_dims(b, n));
    CHECK(steinberg_suite(b, 2).passed);

    FieldAdapter c = FieldAdapter::make(13, 3);
    FieldAdapter d = FieldAdapter::make(13, 3, 6);
    CHECK(c.generator() == 2);
    for (int n = 1; n <= 3; ++n) CHECK(milnor_dims(c, n) == milnor_dims(d, n));
    // the two roots really do label classes differently
    bool differ = false;
    for (i64 u = 1; u < 13; ++u) differ = differ || c.unit_class(u) != d.unit_class(u);
    CHECK(differ);
}

TEST_CASE("symbols are multiplicative in the first slot") {
    FieldAdapter f = FieldAdapter::make(13, 3);
    for (i64 a = 1; a < 13; ++a)
        for (i64 b = 1; b < 13; ++b) {
            i64 ab = f.field().mul(a, b);
            CHECK(f.unit_class(ab) == (f.unit_class(a) + f.unit_class(b)) % 3);
            for (i64 c = 1; c < 13; ++c) {
                i64 lhs = mul_mod(f.unit_class(ab), f.unit_class(c), 3);
                i64 rhs = mod_reduce(f.unit_class(a) * f.unit_class(c) +
                                         f.unit_class(b) * f.unit_class(c),
                                     3);
                CHECK(lhs == rhs);
            }
        }
}

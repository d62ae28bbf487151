#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "procp/fp.hpp"

using namespace procp;

TEST_CASE("primality and modular helpers") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(5));
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(9));
    CHECK_FALSE(is_prime(91)); // 7 * 13

    CHECK(mod_reduce(-1, 7) == 6);
    CHECK(mod_reduce(14, 7) == 0);
    CHECK(pow_mod(2, 10, 1000) == 24);
    CHECK(inv_mod_p(2, 5) == 3);
    CHECK(inv_mod_p(4, 7) == 2);

    CHECK(valuation(12, 2) == 2);
    CHECK(valuation(27, 3) == 3);
    CHECK(valuation(5, 3) == 0);
}

TEST_CASE("composite modulus is rejected") {
    CHECK_THROWS_AS(FpMatrix(6, 2), Error);
    try {
        FpMatrix(6, 2);
    } catch (const Error& e) {
        CHECK(e.code() == errc::composite_modulus);
    }
    CHECK_THROWS_AS(EchelonBasis(1, 3), Error);
}

TEST_CASE("echelonize drops dependent rows") {
    FpMatrix m(3, 2);
    m.add_row({1, 2});
    m.add_row({2, 1}); // = 2*(1,2) mod 3
    EchelonBasis r = echelonize(m);
    REQUIRE(r.rank() == 1);
    CHECK(r.rows()[0] == FpVec{1, 2});
}

TEST_CASE("reduction records the combination used") {
    EchelonBasis b(5, 2);
    b.insert({1, 2});
    Reduction red = b.reduce({2, 4});
    CHECK(red.in_span);
    CHECK(red.residual == FpVec{0, 0});
    REQUIRE(red.coefficients.size() == 1);
    CHECK(red.coefficients[0] == 2);

    Reduction out = b.reduce({0, 1});
    CHECK_FALSE(out.in_span);
    CHECK(out.residual == FpVec{0, 1});
}

TEST_CASE("reduce_against standalone helper") {
    EchelonBasis b(5, 2);
    b.insert({1, 2});
    Reduction r1 = reduce_against({2, 4}, b);
    CHECK(r1.in_span);
    CHECK(r1.residual == FpVec{0, 0});
    Reduction r2 = reduce_against({2, 0}, b);
    CHECK_FALSE(r2.in_span);
    CHECK(r2.residual == FpVec{0, 1}); // (2,0) - 2*(1,2) = (0,-4) = (0,1)
}

TEST_CASE("canonical form is independent of insertion order") {
    std::mt19937 rng(20240517);
    std::vector<FpVec> vecs = {
        {1, 0, 2, 1}, {0, 1, 1, 1}, {1, 1, 3, 2}, {2, 0, 4, 2}, {0, 0, 0, 1}};
    EchelonBasis ref(5, 4);
    for (const auto& v : vecs) ref.insert(v);
    for (int trial = 0; trial < 20; ++trial) {
        auto shuffled = vecs;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        EchelonBasis b(5, 4);
        for (const auto& v : shuffled) b.insert(v);
        REQUIRE(b == ref);
    }
    // pivots of the reduced form are 1 with zeros above and below
    for (const auto& row : ref.rows()) {
        std::size_t piv = 0;
        while (piv < row.size() && row[piv] == 0) ++piv;
        REQUIRE(piv < row.size());
        CHECK(row[piv] == 1);
        for (const auto& other : ref.rows())
            if (&other != &row) CHECK(other[piv] == 0);
    }
}

namespace {

// count solutions of M x = 0 over F_p by enumeration
long long brute_force_kernel_count(const FpMatrix& m, int ncols) {
    long long count = 0, total = 1;
    for (int i = 0; i < ncols; ++i) total *= m.p;
    for (long long code = 0; code < total; ++code) {
        FpVec x(ncols);
        long long v = code;
        for (int i = 0; i < ncols; ++i) {
            x[i] = v % m.p;
            v /= m.p;
        }
        bool ok = true;
        for (const auto& row : m.rows) {
            i64 dot = 0;
            for (int i = 0; i < ncols; ++i) dot += row[i] * x[i];
            if (dot % m.p != 0) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
    }
    return count;
}

} // namespace

TEST_CASE("rank + nullity against brute-force solution counting") {
    std::mt19937 rng(911);
    for (i64 p : {2, 3, 5}) {
        std::uniform_int_distribution<i64> entry(0, p - 1);
        for (int trial = 0; trial < 30; ++trial) {
            int cols = 1 + trial % 4;
            int nrows = 1 + (trial / 4) % 4;
            FpMatrix m(p, cols);
            for (int r = 0; r < nrows; ++r) {
                FpVec row(cols);
                for (auto& e : row) e = entry(rng);
                m.add_row(row);
            }
            int rank = (int)echelonize(m).rank();
            auto ker = kernel_basis(m);
            CHECK((int)ker.size() == cols - rank);
            long long expect = 1;
            for (int i = 0; i < cols - rank; ++i) expect *= p;
            CHECK(brute_force_kernel_count(m, cols) == expect);
            // every reported kernel vector actually lies in the kernel
            for (const auto& x : ker) {
                for (const auto& row : m.rows) {
                    i64 dot = 0;
                    for (int i = 0; i < cols; ++i) dot += row[i] * x[i];
                    CHECK(dot % p == 0);
                }
            }
        }
    }
}

TEST_CASE("insert reports whether the vector was new") {
    EchelonBasis b(3, 3);
    CHECK(b.insert({1, 1, 0}));
    CHECK_FALSE(b.insert({2, 2, 0}));
    CHECK(b.insert({0, 0, 1}));
    CHECK(b.rank() == 2);
    CHECK(b.contains({1, 1, 1}));
    CHECK_FALSE(b.contains({1, 0, 0}));
}

#pragma once

// Shared truncation parameters for the series and graded layers.
//
// Everything downstream works modulo weight > N, where a term c * w of a
// power series has weight v_p(c) + |w| (the prime p and each letter both
// count 1).  Coefficients on a word of length m therefore live in
// Z/p^(N-m+1): the part divisible by p^(N-m+1) has weight > N and is cut.

#include <cstdint>
#include <vector>

#include "procp/errors.hpp"
#include "procp/fp.hpp"

namespace procp {

struct TruncationContext {
    i64 p = 0; // prime, weight(p) = 1
    int d = 0; // number of generators, weight(x_i) = 1
    int N = 0; // truncation degree: verdicts hold modulo S^(N+1)

    std::vector<i64> ppow; // p^0 .. p^(N+1)

    TruncationContext() = default;

    TruncationContext(i64 p_, int d_, int N_) : p(p_), d(d_), N(N_) {
        if (!is_prime(p)) fail(errc::non_prime_p, "p = " + std::to_string(p) + " is not prime");
        if (d < 1) fail(errc::dimension_mismatch, "need at least one generator");
        if (N < 2) fail(errc::truncation_too_small, "truncation degree must be >= 2");
        ppow.assign(N + 2, 1);
        for (int i = 1; i <= N + 1; ++i) {
            if (ppow[i - 1] > (i64(1) << 60) / p)
                fail(errc::resource_cap, "p^N too large for exact arithmetic");
            ppow[i] = ppow[i - 1] * p;
        }
        i64 words = 0, dm = 1;
        for (int m = 0; m <= N; ++m) {
            words += dm;
            if (words > 300000) fail(errc::resource_cap, "monomial basis too large at this (d, N)");
            dm *= d;
        }
    }

    bool operator==(const TruncationContext& o) const { return p == o.p && d == o.d && N == o.N; }
    bool operator!=(const TruncationContext& o) const { return !(*this == o); }

    // modulus for the coefficient of a word of length m
    i64 coeff_modulus(int m) const { return m == 0 ? ppow[N] : ppow[N - m + 1]; }

    // sentinel weight for elements that are trivial modulo the truncation
    int weight_top() const { return N + 1; }
};

inline void require_same_context(const TruncationContext& a, const TruncationContext& b) {
    if (a != b) fail(errc::dimension_mismatch, "operands come from different truncation contexts");
}

} // namespace procp

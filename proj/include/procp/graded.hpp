#pragma once

// The graded algebra U = F_p[pi]<x_1..x_d>: free associative on the letters,
// with one extra central variable pi, all generators in degree 1.  Degree-n
// slice U_n has basis { pi^j * w : j + |w| = n }, ordered by j ascending and
// then lexicographically on the word.  The graded layers of the free group
// live inside U as a Lie subalgebra; ideals and Hilbert series computations
// happen on these dense degree slices.

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "procp/context.hpp"
#include "procp/errors.hpp"
#include "procp/fp.hpp"

namespace procp {

// dim U_n = sum_{m=0..n} d^m  (m = word length, pi supplies the rest)
inline i64 u_dim(const TruncationContext& ctx, int n) {
    if (n < 0 || n > ctx.N)
        fail(errc::degree_out_of_range, "degree " + std::to_string(n) + " outside [0, N]");
    i64 total = 0, dm = 1;
    for (int m = 0; m <= n; ++m) {
        total += dm;
        dm *= ctx.d;
    }
    return total;
}

using Letters = std::string; // word over letters 0..d-1, one byte per letter

namespace detail {

// rank of a length-m word among the d^m words of that length, lexicographic
inline i64 word_rank(const Letters& w, int d) {
    i64 r = 0;
    for (char c : w) r = r * d + (unsigned char)c;
    return r;
}

inline Letters word_of_rank(i64 r, int d, int m) {
    Letters w(m, '\0');
    for (int i = m - 1; i >= 0; --i) {
        w[i] = (char)(r % d);
        r /= d;
    }
    return w;
}

inline i64 pow_i(i64 b, int e) {
    i64 r = 1;
    while (e-- > 0) r *= b;
    return r;
}

} // namespace detail

// index of pi^j * w inside the U_n basis (n = j + |w|)
inline i64 monomial_index(const TruncationContext& ctx, int n, int j, const Letters& w) {
    i64 off = 0;
    for (int jj = 0; jj < j; ++jj) off += detail::pow_i(ctx.d, n - jj);
    return off + detail::word_rank(w, ctx.d);
}

inline std::pair<int, Letters> monomial_of_index(const TruncationContext& ctx, int n, i64 idx) {
    for (int j = 0; j <= n; ++j) {
        i64 block = detail::pow_i(ctx.d, n - j);
        if (idx < block) return {j, detail::word_of_rank(idx, ctx.d, n - j)};
        idx -= block;
    }
    fail(errc::degree_out_of_range, "monomial index out of range");
}

// A homogeneous element of U_n, dense over the monomial basis.
class GradedElement {
  public:
    GradedElement(const TruncationContext& ctx, int degree)
        : ctx_(ctx), degree_(degree), coeffs_(u_dim(ctx, degree), 0) {}

    static GradedElement zero(const TruncationContext& ctx, int degree) {
        return GradedElement(ctx, degree);
    }
    // x_i, 1-based
    static GradedElement generator(const TruncationContext& ctx, int i) {
        if (i < 1 || i > ctx.d) fail(errc::unknown_generator, "x index out of range");
        GradedElement g(ctx, 1);
        g.set_term(0, Letters(1, (char)(i - 1)), 1);
        return g;
    }
    static GradedElement pi(const TruncationContext& ctx) {
        GradedElement g(ctx, 1);
        g.set_term(1, Letters(), 1);
        return g;
    }

    const TruncationContext& ctx() const { return ctx_; }
    int degree() const { return degree_; }
    const FpVec& coeffs() const { return coeffs_; }

    i64 coeff(int j, const Letters& w) const { return coeffs_[monomial_index(ctx_, degree_, j, w)]; }

    void set_term(int j, const Letters& w, i64 c) {
        if (j < 0 || j + (int)w.size() != degree_)
            fail(errc::degree_out_of_range, "monomial degree mismatch");
        coeffs_[monomial_index(ctx_, degree_, j, w)] = mod_reduce(c, ctx_.p);
    }

    bool is_zero() const {
        for (i64 c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    GradedElement& operator+=(const GradedElement& o) {
        require_compatible(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] = mod_reduce(coeffs_[i] + o.coeffs_[i], ctx_.p);
        return *this;
    }
    GradedElement& operator-=(const GradedElement& o) {
        require_compatible(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] = mod_reduce(coeffs_[i] - o.coeffs_[i], ctx_.p);
        return *this;
    }
    GradedElement operator+(const GradedElement& o) const {
        GradedElement r = *this;
        r += o;
        return r;
    }
    GradedElement operator-(const GradedElement& o) const {
        GradedElement r = *this;
        r -= o;
        return r;
    }
    GradedElement scaled(i64 c) const {
        GradedElement r = *this;
        c = mod_reduce(c, ctx_.p);
        for (auto& x : r.coeffs_) x = mul_mod(x, c, ctx_.p);
        return r;
    }

    bool operator==(const GradedElement& o) const {
        return ctx_ == o.ctx_ && degree_ == o.degree_ && coeffs_ == o.coeffs_;
    }

    // "2 pi^2 x1.x2 + x2.x1" style rendering, monomials in basis order
    std::string to_string() const {
        std::ostringstream out;
        bool first = true;
        for (i64 idx = 0; idx < (i64)coeffs_.size(); ++idx) {
            i64 c = coeffs_[idx];
            if (c == 0) continue;
            auto [j, w] = monomial_of_index(ctx_, degree_, idx);
            if (!first) out << " + ";
            first = false;
            bool wrote = false;
            if (c != 1 || (j == 0 && w.empty())) {
                out << c;
                wrote = true;
            }
            if (j > 0) {
                if (wrote) out << " ";
                out << "pi";
                if (j > 1) out << "^" << j;
                wrote = true;
            }
            if (!w.empty()) {
                if (wrote) out << " ";
                for (std::size_t i = 0; i < w.size(); ++i) {
                    if (i) out << ".";
                    out << "x" << (int)(unsigned char)w[i] + 1;
                }
            }
        }
        return first ? "0" : out.str();
    }

  private:
    void require_compatible(const GradedElement& o) const {
        require_same_context(ctx_, o.ctx_);
        if (degree_ != o.degree_) fail(errc::dimension_mismatch, "degrees differ");
    }

    TruncationContext ctx_;
    int degree_;
    FpVec coeffs_;
};

// associative product U_a x U_b -> U_{a+b}
inline GradedElement mul(const GradedElement& a, const GradedElement& b) {
    require_same_context(a.ctx(), b.ctx());
    const TruncationContext& ctx = a.ctx();
    int n = a.degree() + b.degree();
    if (n > ctx.N)
        fail(errc::degree_overflow, "product degree " + std::to_string(n) + " exceeds truncation");
    GradedElement out(ctx, n);
    FpVec acc(u_dim(ctx, n), 0);
    for (i64 ia = 0; ia < (i64)a.coeffs().size(); ++ia) {
        i64 ca = a.coeffs()[ia];
        if (ca == 0) continue;
        auto [ja, wa] = monomial_of_index(ctx, a.degree(), ia);
        for (i64 ib = 0; ib < (i64)b.coeffs().size(); ++ib) {
            i64 cb = b.coeffs()[ib];
            if (cb == 0) continue;
            auto [jb, wb] = monomial_of_index(ctx, b.degree(), ib);
            i64 idx = monomial_index(ctx, n, ja + jb, wa + wb);
            acc[idx] = mod_reduce(acc[idx] + ca * cb, ctx.p);
        }
    }
    for (i64 i = 0; i < (i64)acc.size(); ++i) {
        auto [j, w] = monomial_of_index(ctx, n, i);
        out.set_term(j, w, acc[i]);
    }
    return out;
}

inline GradedElement bracket(const GradedElement& a, const GradedElement& b) {
    return mul(a, b) - mul(b, a);
}

// multiplication by the central degree-1 variable pi
inline GradedElement pi_mul(const GradedElement& a) {
    const TruncationContext& ctx = a.ctx();
    int n = a.degree() + 1;
    if (n > ctx.N) fail(errc::degree_overflow, "pi shift exceeds truncation");
    GradedElement out(ctx, n);
    for (i64 i = 0; i < (i64)a.coeffs().size(); ++i) {
        i64 c = a.coeffs()[i];
        if (c == 0) continue;
        auto [j, w] = monomial_of_index(ctx, a.degree(), i);
        out.set_term(j + 1, w, c);
    }
    return out;
}

// The restricted operator of the graded layers.  For odd p it is plain
// multiplication by pi.  For p = 2 a degree-1 combination of the letters maps
// to a^2 + pi a (the square of a group generator contributes both terms);
// in degree > 1 the square has too high a weight and only pi a remains.
inline GradedElement apply_P(const GradedElement& a, bool is_degree_one_generator_combination) {
    const TruncationContext& ctx = a.ctx();
    if (ctx.p == 2 && a.degree() == 1 && is_degree_one_generator_combination)
        return mul(a, a) + pi_mul(a);
    return pi_mul(a);
}

} // namespace procp

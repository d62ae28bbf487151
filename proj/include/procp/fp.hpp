#pragma once

// Exact linear algebra over F_p and small helpers for Z/p^K arithmetic.
// This is the substrate: everything upstream (graded layers, ideals, Milnor
// relation spans) reduces its questions to row echelon forms built here.

#include <cstdint>
#include <vector>

#include "procp/errors.hpp"

namespace procp {

using i64 = std::int64_t;
using i128 = __int128;
using FpVec = std::vector<i64>;

inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

inline i64 mod_reduce(i64 a, i64 m) {
    a %= m;
    return a < 0 ? a + m : a;
}

inline i64 mul_mod(i64 a, i64 b, i64 m) { return (i64)((i128)a * b % m); }

inline i64 pow_mod(i64 base, i64 exp, i64 m) {
    i64 r = 1 % m;
    base = mod_reduce(base, m);
    while (exp > 0) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Multiplicative inverse mod a prime.
inline i64 inv_mod_p(i64 a, i64 p) {
    a = mod_reduce(a, p);
    if (a == 0) fail(errc::dimension_mismatch, "inverse of 0 mod p");
    return pow_mod(a, p - 2, p);
}

// p-adic valuation of a nonzero residue.
inline int valuation(i64 c, i64 p) {
    if (c == 0) fail(errc::internal_invariant, "valuation of 0");
    int v = 0;
    while (c % p == 0) {
        c /= p;
        ++v;
    }
    return v;
}

struct FpMatrix {
    i64 p = 0;
    std::size_t cols = 0;
    std::vector<FpVec> rows;

    FpMatrix(i64 p_, std::size_t cols_) : p(p_), cols(cols_) {
        if (!is_prime(p)) fail(errc::composite_modulus, "modulus " + std::to_string(p) + " is not prime");
    }

    void add_row(FpVec r) {
        if (r.size() != cols) fail(errc::dimension_mismatch, "row length != cols");
        for (auto& x : r) x = mod_reduce(x, p);
        rows.push_back(std::move(r));
    }
};

struct Reduction {
    FpVec residual;     // v minus its projection onto the row space
    FpVec coefficients; // one coefficient per basis row, in row order
    bool in_span = false;
};

// Reduced row echelon basis of a subspace of F_p^cols.  Rows are kept fully
// reduced (pivot 1, zeros above and below each pivot) and sorted by pivot
// column, so the row set is the canonical basis of the row space: two
// computations of the same subspace produce identical bytes.
class EchelonBasis {
  public:
    EchelonBasis(i64 p, std::size_t cols) : p_(p), cols_(cols) {
        if (!is_prime(p_)) fail(errc::composite_modulus, "modulus " + std::to_string(p_) + " is not prime");
    }

    i64 p() const { return p_; }
    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<FpVec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    Reduction reduce(FpVec v) const {
        if (v.size() != cols_) fail(errc::dimension_mismatch, "vector length != cols");
        Reduction out;
        out.coefficients.assign(rows_.size(), 0);
        for (auto& x : v) x = mod_reduce(x, p_);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            i64 c = v[pivots_[i]];
            if (c == 0) continue;
            out.coefficients[i] = c;
            const FpVec& r = rows_[i];
            for (std::size_t j = pivots_[i]; j < cols_; ++j)
                if (r[j] != 0) v[j] = mod_reduce(v[j] - c * r[j], p_);
        }
        out.in_span = true;
        for (i64 x : v)
            if (x != 0) { out.in_span = false; break; }
        out.residual = std::move(v);
        return out;
    }

    bool contains(const FpVec& v) const { return reduce(v).in_span; }

    // Insert a vector, keeping the reduced echelon invariants.  Returns false
    // if v was already in the span.
    bool insert(const FpVec& v) {
        Reduction red = reduce(v);
        if (red.in_span) return false;
        FpVec row = std::move(red.residual);
        std::size_t piv = 0;
        while (row[piv] == 0) ++piv;
        i64 inv = inv_mod_p(row[piv], p_);
        for (auto& x : row) x = mul_mod(mod_reduce(x, p_), inv, p_);
        // clear the new pivot column in the existing rows
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            i64 c = rows_[i][piv];
            if (c == 0) continue;
            for (std::size_t j = 0; j < cols_; ++j)
                rows_[i][j] = mod_reduce(rows_[i][j] - c * row[j], p_);
        }
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(row));
        pivots_.insert(pivots_.begin() + pos, piv);
        return true;
    }

    bool operator==(const EchelonBasis& o) const {
        return p_ == o.p_ && cols_ == o.cols_ && rows_ == o.rows_;
    }

  private:
    i64 p_;
    std::size_t cols_;
    std::vector<FpVec> rows_;
    std::vector<std::size_t> pivots_;
};

inline EchelonBasis echelonize(const FpMatrix& m) {
    EchelonBasis b(m.p, m.cols);
    for (const FpVec& r : m.rows) b.insert(r);
    return b;
}

inline Reduction reduce_against(const FpVec& v, const EchelonBasis& b) { return b.reduce(v); }

// Basis of the right kernel {v : M v = 0}, read off the reduced echelon form
// by back-substituting one free column at a time.
inline std::vector<FpVec> kernel_basis(const FpMatrix& m) {
    EchelonBasis b = echelonize(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t piv : b.pivots()) is_pivot[piv] = true;
    std::vector<FpVec> out;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        FpVec v(m.cols, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < b.rank(); ++i)
            v[b.pivots()[i]] = mod_reduce(-b.rows()[i][free], m.p);
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace procp

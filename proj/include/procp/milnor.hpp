#pragma once

// Milnor K-theory mod p for explicit small finite fields.
//
// For F = F_q with p | q - 1 the group F*/F*^p is one F_p-line, generated by
// the class of a primitive root.  The degree-n object l_n is the quotient of
// (F*/F*^p)^(tensor n) by the span of the tensors [a_1] x ... x [a_n] in
// which a_1 is a norm from the degree-p radical extension F(a_j^(1/p)), for
// some j >= 2.  Norm images are enumerated by brute force over the whole
// extension field - every relation inserted here has an explicit witness,
// and the expected collapse (k_1 = 1, k_n = 0 for n >= 2) has to emerge from
// that enumeration rather than from a theorem.
//
// Fields are capped at q^p <= 10^6 so the enumeration stays exhaustive.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "procp/errors.hpp"
#include "procp/fp.hpp"

namespace procp {

namespace detail {

// dense polynomials over F_p0, coefficients low to high, no trailing zeros
using Poly = std::vector<i64>;

inline Poly poly_trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

inline Poly poly_mul(const Poly& f, const Poly& g, i64 p0) {
    if (f.empty() || g.empty()) return {};
    Poly h(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            h[i + j] = mod_reduce(h[i + j] + f[i] * g[j], p0);
    return poly_trim(std::move(h));
}

inline Poly poly_rem(Poly f, const Poly& m, i64 p0) {
    i64 lead_inv = inv_mod_p(m.back(), p0);
    while (f.size() >= m.size()) {
        i64 c = mul_mod(f.back(), lead_inv, p0);
        std::size_t shift = f.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i)
            f[shift + i] = mod_reduce(f[shift + i] - c * m[i], p0);
        f = poly_trim(std::move(f));
        if (f.size() < m.size()) break;
    }
    return poly_trim(std::move(f));
}

inline bool poly_irreducible(const Poly& m, i64 p0) {
    int k = (int)m.size() - 1;
    // trial division by every monic polynomial of degree 1 .. k/2
    for (int deg = 1; 2 * deg <= k; ++deg) {
        i64 count = 1;
        for (int i = 0; i < deg; ++i) count *= p0;
        for (i64 code = 0; code < count; ++code) {
            Poly div(deg + 1, 0);
            i64 c = code;
            for (int i = 0; i < deg; ++i) {
                div[i] = c % p0;
                c /= p0;
            }
            div[deg] = 1;
            if (poly_rem(m, div, p0).empty()) return false;
        }
    }
    return true;
}

} // namespace detail

struct FiniteField {
    i64 q = 0;  // p0^k
    i64 p0 = 0; // characteristic
    int k = 0;
    detail::Poly modulus; // monic irreducible of degree k (empty when k == 1)

    // elements are encoded as integers in [0, q): base-p0 digits, low to high
    static FiniteField make(i64 q) {
        if (q < 2) fail(errc::bad_field, "field size must be at least 2");
        if (q > 1000000) fail(errc::resource_cap, "field size capped at 10^6");
        FiniteField F;
        F.q = q;
        i64 p0 = 2;
        while (p0 * p0 <= q && q % p0 != 0) ++p0;
        if (q % p0 != 0) p0 = q; // q prime
        F.p0 = p0;
        i64 rest = q;
        while (rest % p0 == 0) {
            rest /= p0;
            ++F.k;
        }
        if (rest != 1)
            fail(errc::bad_field, std::to_string(q) + " is not a prime power");
        if (F.k > 1) {
            // first irreducible monic t^k + (lower part), lower parts in
            // increasing encoding order
            for (i64 code = 0;; ++code) {
                if (code >= q) fail(errc::internal_invariant, "no irreducible polynomial found");
                detail::Poly m(F.k + 1, 0);
                i64 c = code;
                for (int i = 0; i < F.k; ++i) {
                    m[i] = c % p0;
                    c /= p0;
                }
                m[F.k] = 1;
                if (detail::poly_irreducible(m, p0)) {
                    F.modulus = m;
                    break;
                }
            }
        }
        return F;
    }

    detail::Poly decode(i64 a) const {
        detail::Poly f;
        while (a != 0) {
            f.push_back(a % p0);
            a /= p0;
        }
        return f;
    }

    i64 encode(const detail::Poly& f) const {
        i64 a = 0;
        for (std::size_t i = f.size(); i-- > 0;) a = a * p0 + f[i];
        return a;
    }

    i64 add(i64 a, i64 b) const {
        i64 r = 0, scale = 1;
        while (a != 0 || b != 0) {
            r += scale * ((a % p0 + b % p0) % p0);
            scale *= p0;
            a /= p0;
            b /= p0;
        }
        return r;
    }

    i64 neg(i64 a) const {
        i64 r = 0, scale = 1;
        while (a != 0) {
            r += scale * ((p0 - a % p0) % p0);
            scale *= p0;
            a /= p0;
        }
        return r;
    }

    i64 sub(i64 a, i64 b) const { return add(a, neg(b)); }

    i64 mul(i64 a, i64 b) const {
        if (k == 1) return mul_mod(a, b, p0);
        detail::Poly h = detail::poly_mul(decode(a), decode(b), p0);
        if (h.size() >= modulus.size()) h = detail::poly_rem(std::move(h), modulus, p0);
        return encode(h);
    }

    i64 pow(i64 a, i64 e) const {
        i64 r = 1;
        while (e > 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    i64 inv(i64 a) const {
        if (a == 0) fail(errc::internal_invariant, "inverse of zero");
        return pow(a, q - 2);
    }

    std::string to_string(i64 a) const {
        if (k == 1) return std::to_string(a);
        detail::Poly f = decode(a);
        if (f.empty()) return "0";
        std::string out;
        for (std::size_t i = f.size(); i-- > 0;) {
            if (f[i] == 0) continue;
            if (!out.empty()) out += "+";
            if (i == 0 || f[i] != 1) out += std::to_string(f[i]);
            if (i >= 1) out += "t";
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }
};

// F_q together with the prime p of the analysis: requires a primitive p-th
// root of unity in F_q (p | q - 1), carries a primitive root and its
// discrete-log table, and reads off classes in F*/F*^p
class FieldAdapter {
  public:
    static FieldAdapter make(i64 q, i64 p, i64 preferred_generator = 0) {
        if (!is_prime(p)) fail(errc::non_prime_p, std::to_string(p) + " is not prime");
        FieldAdapter f;
        f.F_ = FiniteField::make(q);
        f.p_ = p;
        if ((q - 1) % p != 0)
            fail(errc::no_root_of_unity,
                 "F_" + std::to_string(q) + " has no primitive p-th root of unity for p = " +
                     std::to_string(p) + " (" + std::to_string(p) + " does not divide " +
                     std::to_string(q - 1) + ")");
        i64 ext = 1;
        for (i64 i = 0; i < p; ++i) {
            ext *= q;
            if (ext > 1000000)
                fail(errc::resource_cap, "q^p exceeds the enumeration cap of 10^6");
        }

        std::vector<i64> prime_factors;
        i64 m = q - 1;
        for (i64 r = 2; r * r <= m; ++r)
            if (m % r == 0) {
                prime_factors.push_back(r);
                while (m % r == 0) m /= r;
            }
        if (m > 1) prime_factors.push_back(m);
        auto is_generator = [&](i64 a) {
            for (i64 r : prime_factors)
                if (f.F_.pow(a, (q - 1) / r) == 1) return false;
            return true;
        };
        if (preferred_generator != 0) {
            if (preferred_generator <= 0 || preferred_generator >= q ||
                !is_generator(preferred_generator))
                fail(errc::bad_field, "requested element does not generate the unit group");
            f.g_ = preferred_generator;
        } else {
            f.g_ = 0;
            for (i64 a = 1; a < q; ++a)
                if (is_generator(a)) {
                    f.g_ = a;
                    break;
                }
            if (f.g_ == 0) fail(errc::internal_invariant, "no primitive root found");
        }

        f.dlog_.assign(q, -1);
        i64 x = 1;
        for (i64 t = 0; t < q - 1; ++t) {
            if (f.dlog_[x] != -1) fail(errc::internal_invariant, "primitive root has small order");
            f.dlog_[x] = t;
            x = f.F_.mul(x, f.g_);
        }
        return f;
    }

    const FiniteField& field() const { return F_; }
    i64 q() const { return F_.q; }
    i64 p() const { return p_; }
    i64 generator() const { return g_; }

    std::vector<i64> units() const {
        std::vector<i64> u;
        for (i64 a = 1; a < F_.q; ++a) u.push_back(a);
        return u;
    }

    i64 unit_class(i64 u) const {
        if (u <= 0 || u >= F_.q) fail(errc::bad_field, "not a unit of the field");
        return dlog_[u] % p_;
    }

    i64 class_rep(i64 c) const { return F_.pow(g_, mod_reduce(c, p_)); }

  private:
    FiniteField F_;
    i64 p_ = 0;
    i64 g_ = 0;
    std::vector<i64> dlog_;
};

// F_p-basis of F*/F*^p as unit representatives: the class of a primitive
// root generates the (one-dimensional) group
inline std::vector<i64> unit_classes(const FieldAdapter& f) { return {f.generator()}; }

// the radical extension K = F_q[s] / (s^p - a), elements as coefficient
// vectors of 1, s, ..., s^(p-1)
struct RadicalExtension {
    const FieldAdapter& f;
    i64 a;
    using Elt = std::vector<i64>;

    RadicalExtension(const FieldAdapter& f_, i64 a_) : f(f_), a(a_) {}

    Elt mul(const Elt& x, const Elt& y) const {
        const FiniteField& F = f.field();
        i64 p = f.p();
        Elt z(p, 0);
        for (i64 i = 0; i < p; ++i) {
            if (x[i] == 0) continue;
            for (i64 j = 0; j < p; ++j) {
                if (y[j] == 0) continue;
                i64 c = F.mul(x[i], y[j]);
                if (i + j < p)
                    z[i + j] = F.add(z[i + j], c);
                else
                    z[i + j - p] = F.add(z[i + j - p], F.mul(c, a)); // s^p = a
            }
        }
        return z;
    }

    Elt pow(Elt x, i64 e) const {
        Elt r(f.p(), 0);
        r[0] = 1;
        while (e > 0) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }

    // field norm K -> F_q: x ^ ((q^p - 1) / (q - 1)); requires the extension
    // to be a genuine field (a not a p-th power)
    i64 norm(const Elt& x) const {
        i64 e = 0, qk = 1;
        for (i64 i = 0; i < f.p(); ++i) {
            e += qk;
            qk *= f.q();
        }
        Elt n = pow(x, e);
        for (i64 i = 1; i < f.p(); ++i)
            if (n[i] != 0) fail(errc::internal_invariant, "norm left the base field");
        return n[0];
    }
};

// classes of N(K*) in F*/F*^p for K = F(a^(1/p)), by exhaustive enumeration
inline std::vector<i64> norm_classes(const FieldAdapter& f, i64 a) {
    if (a <= 0 || a >= f.q()) fail(errc::bad_field, "norm_classes needs a unit of the field");
    if (f.unit_class(a) == 0)
        fail(errc::trivial_extension,
             f.field().to_string(a) + " is already a " + std::to_string(f.p()) +
                 "-th power: the radical extension is trivial");
    RadicalExtension K(f, a);
    std::vector<bool> seen(f.p(), false);
    RadicalExtension::Elt x(f.p(), 0);
    // odometer over all q^p - 1 nonzero coefficient vectors
    for (;;) {
        i64 i = 0;
        while (i < f.p() && x[i] == f.q() - 1) x[i++] = 0;
        if (i == f.p()) break;
        ++x[i];
        i64 n = K.norm(x);
        if (n == 0) fail(errc::internal_invariant, "norm of a unit vanished");
        seen[f.unit_class(n)] = true;
    }
    std::vector<i64> out;
    for (i64 c = 0; c < f.p(); ++c)
        if (seen[c]) out.push_back(c);
    return out;
}

struct MilnorRing {
    int n = 0;
    i64 ambient_dim = 0;  // (dim F*/F*^p)^n
    EchelonBasis relations;
    i64 quotient_dim = 0; // dim of l_n = k_n

    MilnorRing(int n_, i64 ambient, i64 p) : n(n_), ambient_dim(ambient), relations(p, (std::size_t)ambient) {}
};

// the degree-n quotient: tensors indexed by class tuples (c_1 .. c_n), with
// one relation for every tuple in which c_1 lies in the norm classes of a
// representative of some c_j, j >= 2
inline MilnorRing milnor_ring(const FieldAdapter& f, int n) {
    if (n < 1) fail(errc::degree_out_of_range, "symbol length must be >= 1");
    i64 p = f.p();
    i64 tuples = 1;
    for (int i = 0; i < n; ++i) {
        tuples *= p;
        if (tuples > 1000000) fail(errc::resource_cap, "class-tuple enumeration too large");
    }
    MilnorRing ring(n, 1, p); // F*/F*^p is one line, so the tensor power is too
    if (n == 1) {
        ring.quotient_dim = 1;
        return ring;
    }
    std::map<i64, std::vector<i64>> norm_cache;
    auto norms_of = [&](i64 cls) -> const std::vector<i64>& {
        auto it = norm_cache.find(cls);
        if (it == norm_cache.end())
            it = norm_cache.emplace(cls, norm_classes(f, f.class_rep(cls))).first;
        return it->second;
    };
    for (i64 code = 0; code < tuples; ++code) {
        std::vector<i64> c(n);
        i64 rest = code;
        for (int i = 0; i < n; ++i) {
            c[i] = rest % p;
            rest /= p;
        }
        i64 v = 1;
        for (int i = 0; i < n; ++i) v = mul_mod(v, c[i], p);
        if (v == 0) continue; // the zero vector relates nothing
        for (int j = 1; j < n; ++j) {
            if (c[j] == 0) continue;
            const std::vector<i64>& ns = norms_of(c[j]);
            if (std::find(ns.begin(), ns.end(), c[0]) != ns.end()) {
                ring.relations.insert({v});
                break;
            }
        }
    }
    ring.quotient_dim = ring.ambient_dim - (i64)ring.relations.rank();
    return ring;
}

inline i64 milnor_dims(const FieldAdapter& f, int n) { return milnor_ring(f, n).quotient_dim; }

struct SteinbergReport {
    int n = 2;
    bool sum_one_ok = true;   // symbols with a_i + a_j = 1 vanish
    bool minus_ok = true;     // symbols with slots (a, ..., -a, ...) vanish
    bool antisym_ok = true;   // swapping two slots negates, via the quotient
    i64 checked = 0;
    std::vector<std::string> witnesses;
    bool passed = true;
};

// exhaustive check of the degree-n identities in the computed quotient
inline SteinbergReport steinberg_suite(const FieldAdapter& f, int n) {
    if (n < 2) fail(errc::degree_out_of_range, "the identities live in degree >= 2");
    i64 q = f.q();
    double sweep = 1;
    for (int i = 0; i < n; ++i) sweep *= (double)(q - 1);
    if (sweep * n * n > 5e6)
        fail(errc::resource_cap, "exhaustive identity sweep too large for this field");

    MilnorRing ring = milnor_ring(f, n);
    auto zero_in_quotient = [&](i64 v) {
        v = mod_reduce(v, f.p());
        return v == 0 || ring.relations.contains({v});
    };
    auto symbol = [&](const std::vector<i64>& elts) {
        i64 v = 1;
        for (i64 a : elts) v = mul_mod(v, f.unit_class(a), f.p());
        return v;
    };
    auto describe = [&](const std::vector<i64>& elts) {
        std::string s = "<";
        for (std::size_t i = 0; i < elts.size(); ++i)
            s += (i ? ", " : "") + f.field().to_string(elts[i]);
        return s + ">";
    };

    SteinbergReport rep;
    rep.n = n;
    const FiniteField& F = f.field();

    // enumerate assignments of the free slots over all units
    auto for_each_filler = [&](int slots, auto&& body) {
        std::vector<i64> fill(slots, 1);
        for (;;) {
            body(fill);
            int i = 0;
            while (i < slots && fill[i] == q - 1) fill[i++] = 1;
            if (i == slots) break;
            ++fill[i];
        }
    };

    // (i) a_i + a_j = 1 forces the symbol to vanish
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (i64 a = 2; a < q; ++a) { // skip 0 and 1: both slots must be units
                i64 b = F.sub(1, a);
                if (b == 0) continue;
                for_each_filler(n - 2, [&](const std::vector<i64>& fill) {
                    std::vector<i64> elts;
                    int fi = 0;
                    for (int s = 0; s < n; ++s)
                        elts.push_back(s == i ? a : s == j ? b : fill[fi++]);
                    ++rep.checked;
                    if (!zero_in_quotient(symbol(elts))) {
                        rep.sum_one_ok = false;
                        if (rep.witnesses.size() < 8)
                            rep.witnesses.push_back(describe(elts) + " with slots summing to 1");
                    }
                });
            }

    // (ii) first slot a, some later slot -a
    for (int j = 1; j < n; ++j)
        for (i64 a = 1; a < q; ++a)
            for_each_filler(n - 2, [&](const std::vector<i64>& fill) {
                std::vector<i64> elts;
                int fi = 0;
                for (int s = 0; s < n; ++s)
                    elts.push_back(s == 0 ? a : s == j ? F.neg(a) : fill[fi++]);
                ++rep.checked;
                if (!zero_in_quotient(symbol(elts))) {
                    rep.minus_ok = false;
                    if (rep.witnesses.size() < 8)
                        rep.witnesses.push_back(describe(elts) + " with opposite slots");
                }
            });

    // (iii) swapping two slots negates the symbol
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for_each_filler(n, [&](const std::vector<i64>& fill) {
                std::vector<i64> sw = fill;
                std::swap(sw[i], sw[j]);
                ++rep.checked;
                if (!zero_in_quotient(symbol(fill) + symbol(sw))) {
                    rep.antisym_ok = false;
                    if (rep.witnesses.size() < 8)
                        rep.witnesses.push_back(describe(fill) + " + swapped " + describe(sw));
                }
            });

    rep.passed = rep.sum_one_ok && rep.minus_ok && rep.antisym_ok;
    return rep;
}

} // namespace procp

#pragma once

// Layered closure: graded layer bases for subgroups of the truncated free
// group Q = S/S^(N+1).
//
// A LayerBasis stores, for each degree n <= N, a reduced-echelon set of
// vectors in U_n together with group representatives whose initial forms are
// exactly those rows.  Membership testing ("sifting") walks an element down
// the filtration: reduce its initial form against the layer, left-divide by
// the matching product of representatives, and continue with the
// higher-weight remainder until it either dies (weight > N: member modulo
// truncation) or sticks (certified non-member, with the residual form as the
// certificate).
//
// layered_closure grows such a basis from seed elements until the basis is
// stable under the requested operations:
//   subgroup        p-th powers and pairwise commutators of basis elements
//                   (enough for the staircase products to form the subgroup
//                   generated by the seeds)
//   normal_closure  additionally commutators with the ambient generators,
//                   making the result the normal closure of the seeds
//   frattini_step   from a generating set of a normal subgroup X, the layers
//                   of X^p [X, S]: the seeds' p-th powers and generator
//                   commutators start the worklist, then the same closure
//                   rules as normal_closure
//
// After the worklist drains, a verification sweep re-sifts every closure
// obligation against the final basis and reopens the worklist if anything
// fails, so the returned basis provably satisfies all closure conditions at
// once.  The whole procedure is deterministic: seeds in order, FIFO queue,
// fixed offspring order, canonical reduced echelon rows per degree.

#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "procp/context.hpp"
#include "procp/errors.hpp"
#include "procp/fp.hpp"
#include "procp/graded.hpp"
#include "procp/magnus.hpp"

namespace procp {

inline GradedElement graded_from_vec(const TruncationContext& ctx, int degree, const FpVec& v) {
    GradedElement g(ctx, degree);
    if ((i64)v.size() != u_dim(ctx, degree)) fail(errc::dimension_mismatch, "coefficient vector length");
    for (i64 i = 0; i < (i64)v.size(); ++i) {
        if (v[i] == 0) continue;
        auto [j, w] = monomial_of_index(ctx, degree, i);
        g.set_term(j, w, v[i]);
    }
    return g;
}

struct LayerRow {
    FpVec row;        // vector in U_n, part of a reduced echelon set
    GroupElement rep; // group element of weight n with initial_form == row
};

struct SiftOutcome {
    bool member = false;    // true: element is in the staircase span mod S^(N+1)
    int degree = 0;         // level where reduction stuck (valid when !member)
    FpVec residual;         // its reduced initial form, nonzero (when !member)
    GroupElement remainder; // the fully reduced element itself
};

class LayerBasis {
  public:
    explicit LayerBasis(const TruncationContext& ctx)
        : ctx_(ctx), levels_(ctx.N + 1) {}

    const TruncationContext& ctx() const { return ctx_; }
    int dim(int n) const {
        if (n < 1 || n > ctx_.N) fail(errc::degree_out_of_range, "layer degree outside [1, N]");
        return (int)levels_[n].size();
    }
    const std::vector<LayerRow>& level(int n) const {
        if (n < 1 || n > ctx_.N) fail(errc::degree_out_of_range, "layer degree outside [1, N]");
        return levels_[n];
    }
    int total_rank() const {
        int t = 0;
        for (const auto& l : levels_) t += (int)l.size();
        return t;
    }
    std::vector<int> dims() const {
        std::vector<int> out;
        for (int n = 1; n <= ctx_.N; ++n) out.push_back(dim(n));
        return out;
    }

    EchelonBasis echelon(int n) const {
        EchelonBasis b(ctx_.p, (std::size_t)u_dim(ctx_, n));
        for (const LayerRow& r : level(n)) b.insert(r.row);
        return b;
    }

    SiftOutcome sift(GroupElement g) const {
        for (;;) {
            int w = weight(g);
            if (w > ctx_.N) return {true, 0, {}, std::move(g)};
            FpVec v = initial_form(g).coeffs();
            const auto& rows = levels_[w];
            // reduce against the level, remembering the combination
            std::vector<i64> coeff(rows.size(), 0);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                std::size_t piv = pivot_of(rows[i].row);
                i64 c = v[piv];
                if (c == 0) continue;
                coeff[i] = c;
                for (std::size_t j = piv; j < v.size(); ++j)
                    if (rows[i].row[j] != 0) v[j] = mod_reduce(v[j] - c * rows[i].row[j], ctx_.p);
            }
            bool zero = true;
            for (i64 x : v)
                if (x != 0) { zero = false; break; }
            // left-divide by the matched staircase combination, so that the
            // remainder's initial form is exactly the reduced residual
            GroupElement combo = GroupElement::identity(ctx_);
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (coeff[i] != 0) combo = combo * rows[i].rep.pow(coeff[i]);
            g = combo.inverse() * g;
            if (!zero) return {false, w, std::move(v), std::move(g)};
        }
    }

    // Insert the certificate of a failed sift as a new basis row.  Returns
    // the representative actually stored (remainder scaled to pivot 1).
    GroupElement insert(const SiftOutcome& stuck) {
        int n = stuck.degree;
        FpVec row = stuck.residual;
        std::size_t piv = pivot_of(row);
        i64 inv = inv_mod_p(row[piv], ctx_.p);
        for (auto& x : row) x = mul_mod(mod_reduce(x, ctx_.p), inv, ctx_.p);
        GroupElement rep = stuck.remainder.pow(inv);
        // clear the new pivot column from the existing rows, adjusting their
        // representatives so initial forms keep matching
        for (LayerRow& r : levels_[n]) {
            i64 c = r.row[piv];
            if (c == 0) continue;
            for (std::size_t j = 0; j < row.size(); ++j)
                r.row[j] = mod_reduce(r.row[j] - c * row[j], ctx_.p);
            r.rep = r.rep * rep.pow(ctx_.p - c);
        }
        std::size_t pos = 0;
        while (pos < levels_[n].size() && pivot_of(levels_[n][pos].row) < piv) ++pos;
        levels_[n].insert(levels_[n].begin() + pos, LayerRow{std::move(row), rep});
        return rep;
    }

    std::string to_string() const {
        std::ostringstream out;
        for (int n = 1; n <= ctx_.N; ++n) {
            out << "degree " << n << ": dim " << levels_[n].size() << "\n";
            for (const LayerRow& r : levels_[n])
                out << "  " << graded_from_vec(ctx_, n, r.row).to_string() << "\n";
        }
        return out.str();
    }

  private:
    static std::size_t pivot_of(const FpVec& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) return i;
        fail(errc::internal_invariant, "zero row in layer basis");
    }

    TruncationContext ctx_;
    std::vector<std::vector<LayerRow>> levels_; // index = degree, [0] unused
};

enum class ClosureMode { subgroup, normal_closure, frattini_step };

struct ClosureLimits {
    std::size_t max_insertions = 1000000;
};

namespace detail {

inline int rep_weight(const GroupElement& g) { return weight(g); }

} // namespace detail

inline LayerBasis layered_closure(const TruncationContext& ctx, const std::vector<GroupElement>& seeds,
                                  ClosureMode mode, const ClosureLimits& limits = {}) {
    for (const GroupElement& s : seeds) require_same_context(ctx, s.ctx());

    std::vector<GroupElement> gens;
    for (int i = 1; i <= ctx.d; ++i) gens.push_back(GroupElement::generator(ctx, i));

    // worklist start: the elements whose closure is requested
    std::vector<GroupElement> initial;
    if (mode == ClosureMode::frattini_step) {
        for (const GroupElement& r : seeds)
            if (!r.is_identity()) initial.push_back(r.pow(ctx.p));
        for (const GroupElement& r : seeds)
            if (!r.is_identity())
                for (const GroupElement& s : gens) initial.push_back(commutator(r, s));
    } else {
        for (const GroupElement& r : seeds)
            if (!r.is_identity()) initial.push_back(r);
    }

    LayerBasis basis(ctx);
    std::vector<GroupElement> inserted; // insertion-time copies, worklist offspring source
    std::deque<GroupElement> queue(initial.begin(), initial.end());
    std::size_t insertions = 0;

    auto process = [&](const GroupElement& cand) {
        SiftOutcome out = basis.sift(cand);
        if (out.member) return false;
        if (++insertions > limits.max_insertions)
            fail(errc::resource_cap, "layered closure exceeded " +
                                         std::to_string(limits.max_insertions) + " insertions");
        GroupElement rep = basis.insert(out);
        int w = out.degree;
        for (const GroupElement& b : inserted)
            if (w + detail::rep_weight(b) <= ctx.N) queue.push_back(commutator(rep, b));
        if (w + 1 <= ctx.N) queue.push_back(rep.pow(ctx.p));
        if (mode != ClosureMode::subgroup && w + 1 <= ctx.N)
            for (const GroupElement& s : gens) queue.push_back(commutator(rep, s));
        inserted.push_back(rep);
        return true;
    };

    for (;;) {
        while (!queue.empty()) {
            GroupElement cand = queue.front();
            queue.pop_front();
            process(cand);
        }
        // Verification sweep: every closure obligation must sift to the
        // identity against the *final* rows.  The sweep works on a value
        // snapshot of the current representatives (process() mutates the
        // basis) and restarts after any insertion.
        bool clean = true;
        for (const GroupElement& c : initial)
            if (process(c)) { clean = false; break; }
        if (clean) {
            std::vector<GroupElement> reps;
            std::vector<int> ws;
            for (int n = 1; n <= ctx.N; ++n)
                for (const LayerRow& r : basis.level(n)) {
                    reps.push_back(r.rep);
                    ws.push_back(n);
                }
            for (std::size_t i = 0; i < reps.size() && clean; ++i) {
                if (ws[i] + 1 <= ctx.N) {
                    if (process(reps[i].pow(ctx.p))) { clean = false; break; }
                    if (mode != ClosureMode::subgroup)
                        for (const GroupElement& s : gens)
                            if (process(commutator(reps[i], s))) { clean = false; break; }
                }
                for (std::size_t j = 0; j < i && clean; ++j)
                    if (ws[i] + ws[j] <= ctx.N)
                        if (process(commutator(reps[i], reps[j]))) { clean = false; break; }
            }
        }
        if (clean && queue.empty()) break;
    }
    return basis;
}

// ---- graded layers of the ambient free group -------------------------------
//
// gr_n(S) is computed by the same closure machinery with the generators as
// seeds; the result is cached per (p, d, N) since every analysis consults it
// repeatedly.  The cache is the only shared state in the library.

struct LieLayer {
    int degree;
    EchelonBasis basis;
};

inline const LayerBasis& full_group_layers(const TruncationContext& ctx) {
    static std::mutex mu;
    static std::map<std::tuple<i64, int, int>, std::unique_ptr<LayerBasis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(ctx.p, ctx.d, ctx.N);
    auto it = cache.find(key);
    if (it == cache.end()) {
        std::vector<GroupElement> seeds;
        for (int i = 1; i <= ctx.d; ++i) seeds.push_back(GroupElement::generator(ctx, i));
        auto basis = std::make_unique<LayerBasis>(layered_closure(ctx, seeds, ClosureMode::subgroup));
        it = cache.emplace(key, std::move(basis)).first;
    }
    return *it->second;
}

inline LieLayer lie_layer(const TruncationContext& ctx, int n) {
    if (n < 1 || n > ctx.N)
        fail(errc::degree_out_of_range, "layer degree " + std::to_string(n) + " outside [1, N]");
    return LieLayer{n, full_group_layers(ctx).echelon(n)};
}

// Is a homogeneous element of U_n the initial form of some group element,
// i.e. does it lie in gr_n(S)?  Degree 0 holds only for 0.
inline bool is_lie_element(const GradedElement& a) {
    if (a.degree() == 0) return a.is_zero();
    if (a.is_zero()) return true;
    return lie_layer(a.ctx(), a.degree()).basis.contains(a.coeffs());
}

} // namespace procp

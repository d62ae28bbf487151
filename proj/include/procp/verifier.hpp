#pragma once

// The group-level verification engine.
//
// For a presentation 1 -> R -> S -> G -> 1 it computes the descending chain
//   step 1 = R,   step n+1 = (step n)^p [step n, S]
// as layer bases, together with the intersections R cap S^(m) (read off the
// layers of R at degrees >= m), and compares the two chains degree by degree.
//
// Step n+1 is built by the frattini-step closure seeded with the layer
// representatives of step n: any element of step n is, modulo weight > N, a
// staircase product of representatives, so p-th powers and commutators of
// the representatives generate the same normal subgroup as those of the full
// step (commutator identities put the cross terms inside [X, X][X, S]).
//
// Containment of step n inside R cap S^(n+1) is a theorem for minimal
// presentations; the comparison verifies it row by row and treats any
// violation as an internal bug, never as a reportable verdict.  Equality
// verdicts are certified only up to the truncation; gap verdicts are
// unconditional (a missing layer vector cannot reappear at higher precision).

#include <string>
#include <vector>

#include "procp/context.hpp"
#include "procp/errors.hpp"
#include "procp/fp.hpp"
#include "procp/layers.hpp"
#include "procp/magnus.hpp"
#include "procp/presentation.hpp"

namespace procp {

class RSeries {
  public:
    RSeries(TruncationContext ctx, std::vector<LayerBasis> chain)
        : ctx_(ctx), chain_(std::move(chain)) {}

    const TruncationContext& ctx() const { return ctx_; }

    // largest n for which step n can have layers visible below the truncation
    int max_step() const { return ctx_.N - 1; }

    // step 1 = R, step n+1 = (step n)^p [step n, S]
    const LayerBasis& step(int n) const {
        if (n < 1) fail(errc::degree_out_of_range, "chain step must be >= 1");
        if (n > max_step())
            fail(errc::truncation_exhausted,
                 "step " + std::to_string(n) + " lies entirely above weight " +
                     std::to_string(ctx_.N) + ": chain saturated at truncation");
        return chain_[n];
    }

    // dims of the layers of R cap S^(m): layers of R at degrees >= m
    std::vector<int> intersection_dims(int m) const {
        std::vector<int> out(ctx_.N, 0);
        for (int k = std::max(m, 1); k <= ctx_.N; ++k) out[k - 1] = chain_[1].dim(k);
        return out;
    }

    // gr_n(G) = gr_n(S) / (layer of R at n), for the quotient G = S/R
    std::vector<int> quotient_dims() const {
        std::vector<int> out;
        for (int n = 1; n <= ctx_.N; ++n)
            out.push_back(full_group_layers(ctx_).dim(n) - chain_[1].dim(n));
        return out;
    }

  private:
    TruncationContext ctx_;
    std::vector<LayerBasis> chain_; // [0] unused; [n] = step n, n = 1..N-1
};

inline RSeries r_series(const Presentation& pr, std::vector<std::string>* warnings = nullptr) {
    const TruncationContext& ctx = pr.ctx;
    std::vector<LayerBasis> chain;
    chain.reserve(ctx.N);
    chain.emplace_back(ctx); // unused slot 0
    chain.push_back(layered_closure(ctx, evaluate_relators(pr, warnings), ClosureMode::normal_closure));
    for (int n = 2; n <= ctx.N - 1; ++n) {
        std::vector<GroupElement> seeds;
        for (int k = 1; k <= ctx.N; ++k)
            for (const LayerRow& r : chain[n - 1].level(k)) seeds.push_back(r.rep);
        chain.push_back(layered_closure(ctx, seeds, ClosureMode::frattini_step));
    }
    return RSeries(ctx, std::move(chain));
}

struct StepComparison {
    int n = 0;                  // step n vs R cap S^(n+1)
    std::vector<int> step_dims; // layer dims of step n, degrees 1..N
    std::vector<int> cap_dims;  // layer dims of R cap S^(n+1), degrees 1..N
    int gap_degree = 0;         // smallest degree where cap strictly exceeds step; 0 = equal
};

struct EqualityReport {
    std::vector<StepComparison> steps; // n = 1 .. N-1
    bool equal_to_truncation = true;
    int first_gap_step = 0;
    int first_gap_degree = 0;
    std::vector<std::string> obstructions;
};

inline EqualityReport equality_report(const Presentation& pr,
                                      std::vector<std::string>* warnings = nullptr) {
    const TruncationContext& ctx = pr.ctx;
    {
        MinimalityReport min = minimality_check(pr);
        if (!min.weight_ok)
            fail(errc::degree_out_of_range,
                 "chain comparison requires a minimal presentation: relator " +
                     std::to_string(min.shallow.front() + 1) + " has weight < 2");
    }
    RSeries rs = r_series(pr, warnings);
    const LayerBasis& r_layers = rs.step(1);

    EqualityReport rep;
    for (int n = 1; n <= rs.max_step(); ++n) {
        const LayerBasis& step = rs.step(n);
        StepComparison cmp;
        cmp.n = n;
        cmp.cap_dims = rs.intersection_dims(n + 1);
        for (int k = 1; k <= ctx.N; ++k) {
            cmp.step_dims.push_back(step.dim(k));
            // containment is a theorem; a violation is a bug, not a verdict
            if (k <= n && step.dim(k) > 0)
                fail(errc::internal_invariant,
                     "chain step " + std::to_string(n) + " has a layer at degree " +
                         std::to_string(k) + " below its guaranteed filtration level");
            if (step.dim(k) > 0) {
                EchelonBasis cap = r_layers.echelon(k);
                for (const LayerRow& row : step.level(k))
                    if (!cap.contains(row.row))
                        fail(errc::internal_invariant,
                             "chain step " + std::to_string(n) +
                                 " escapes the relation subgroup at degree " + std::to_string(k));
            }
        }
        for (int k = 1; k <= ctx.N && cmp.gap_degree == 0; ++k) {
            if (cmp.cap_dims[k - 1] > cmp.step_dims[k - 1]) cmp.gap_degree = k;
            if (cmp.step_dims[k - 1] > cmp.cap_dims[k - 1])
                fail(errc::internal_invariant,
                     "chain step " + std::to_string(n) + " exceeds the intersection at degree " +
                         std::to_string(k));
        }
        if (cmp.gap_degree != 0 && rep.first_gap_step == 0) {
            rep.first_gap_step = n;
            rep.first_gap_degree = cmp.gap_degree;
            rep.equal_to_truncation = false;
        }
        rep.steps.push_back(std::move(cmp));
    }

    for (const StepComparison& cmp : rep.steps) {
        if (cmp.gap_degree == 0) continue;
        std::string where = "step " + std::to_string(cmp.n) + " of the induced chain differs from R cap S^(" +
                            std::to_string(cmp.n + 1) + ") at degree " + std::to_string(cmp.gap_degree) +
                            " (unconditional)";
        if (cmp.n == 2)
            rep.obstructions.push_back(
                where +
                "; for the maximal pro-p Galois group of a field containing a primitive p-th root of"
                " unity, surjectivity of the degree-2 norm-residue homomorphism (Merkurjev-Suslin)"
                " forces equality at this step");
        else if (cmp.n == 3)
            rep.obstructions.push_back(
                where +
                "; the norm-residue isomorphism theorem in degree 3 (Rost-Voevodsky) forces equality"
                " at this step for such Galois groups");
    }
    return rep;
}

enum class Membership { in_up_to_truncation, not_in };

struct MembershipCertificate {
    Membership verdict = Membership::not_in;
    int stuck_degree = 0; // when not_in: degree of the residual initial form
    FpVec residual;       // nonzero vector outside the layer span at that degree
};

// Reduce g through the layers of h.  Reaching the identity within the
// truncation certifies membership modulo weight > N; sticking yields an
// unconditional non-membership certificate, re-verified independently.
inline MembershipCertificate membership_mod_truncation(const GroupElement& g, const LayerBasis& h) {
    SiftOutcome out = h.sift(g);
    if (out.member) return {Membership::in_up_to_truncation, 0, {}};
    if (h.echelon(out.degree).contains(out.residual))
        fail(errc::internal_invariant, "sift certificate contradicts direct reduction");
    return {Membership::not_in, out.degree, out.residual};
}

struct RelatorStatus {
    int index = 0;       // relator position, 0-based
    bool essential = false;
    // essential: unconditional (residual certificate); redundant: modulo weight > N only
};

// Drop-one minimality certification: relator i is redundant iff it lies in
// ncl(other relators) * R^p[R,S], i.e. its class in R / R^p[R,S] is spanned
// by the others.
inline std::vector<RelatorStatus> certify_relators(const Presentation& pr,
                                                   std::vector<std::string>* warnings = nullptr) {
    const TruncationContext& ctx = pr.ctx;
    std::vector<GroupElement> rel = evaluate_relators(pr, warnings);
    LayerBasis r_layers = layered_closure(ctx, rel, ClosureMode::normal_closure);
    std::vector<GroupElement> frat_seeds;
    for (int k = 1; k <= ctx.N; ++k)
        for (const LayerRow& r : r_layers.level(k)) frat_seeds.push_back(r.rep);
    LayerBasis frattini = layered_closure(ctx, frat_seeds, ClosureMode::frattini_step);

    std::vector<RelatorStatus> out;
    for (int i = 0; i < (int)rel.size(); ++i) {
        std::vector<GroupElement> seeds;
        for (int j = 0; j < (int)rel.size(); ++j)
            if (j != i) seeds.push_back(rel[j]);
        for (int k = 1; k <= ctx.N; ++k)
            for (const LayerRow& r : frattini.level(k)) seeds.push_back(r.rep);
        LayerBasis others = layered_closure(ctx, seeds, ClosureMode::normal_closure);
        MembershipCertificate cert = membership_mod_truncation(rel[i], others);
        out.push_back({i, cert.verdict == Membership::not_in});
    }
    return out;
}

} // namespace procp

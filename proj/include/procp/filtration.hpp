#pragma once

// The graded side of a presentation: initial forms of the relators, the
// two-sided structures they generate, and the quadraticity verdicts.
//
// Three graded objects are computed from the relator initial forms rho_i of
// degrees e_i >= 2:
//
//  * the ideal they generate inside the graded algebra of the free group,
//    closed degree by degree under pi-multiplication and bracketing with the
//    degree-one generators (which suffices: ad extends over products, pi
//    commutes, and ad of a p-th power is the p-th power of ad);
//
//  * the two-sided associative ideal in the enveloping algebra U, built by
//    the recurrence J_n = span(rho_i at n) + pi J_(n-1) + sum_j (x_j J_(n-1)
//    + J_(n-1) x_j), whose codimensions are compared against the coefficient
//    recurrence of 1 / ((1-t) (1 - d t + sum_i t^(e_i))) - agreement up to
//    the truncation is the strong-freeness certificate;
//
//  * the comparison of the Lie-ideal layers against the layers of the
//    relation subgroup itself, which certifies that the graded object of the
//    group is already determined by the degree-2 forms.

#include <string>
#include <vector>

#include "procp/context.hpp"
#include "procp/errors.hpp"
#include "procp/fp.hpp"
#include "procp/graded.hpp"
#include "procp/layers.hpp"
#include "procp/magnus.hpp"
#include "procp/presentation.hpp"

namespace procp {

struct InitialForm {
    int relator = 0; // 0-based index into the presentation's relator list
    GradedElement form;
};

struct InitialFormSet {
    std::vector<InitialForm> forms;
    std::vector<int> degrees;
    bool quadratic = true; // every degree equals 2 (vacuously true when empty)
};

inline InitialFormSet initial_forms(const Presentation& pr,
                                    std::vector<std::string>* warnings = nullptr) {
    InitialFormSet out;
    std::vector<GroupElement> rel = evaluate_relators(pr, warnings);
    for (int i = 0; i < (int)rel.size(); ++i) {
        if (rel[i].is_identity())
            fail(errc::identity_relator,
                 "relator " + std::to_string(i + 1) +
                     " is trivial modulo weight > " + std::to_string(pr.ctx.N) +
                     "; raise the truncation to certify its degree");
        GradedElement f = initial_form(rel[i]);
        out.degrees.push_back(f.degree());
        if (f.degree() != 2) out.quadratic = false;
        out.forms.push_back({i, std::move(f)});
    }
    return out;
}

class GradedIdeal {
  public:
    explicit GradedIdeal(const TruncationContext& ctx) : ctx_(ctx) {
        for (int n = 0; n <= ctx.N; ++n) levels_.emplace_back(ctx.p, (std::size_t)u_dim(ctx, n));
    }

    const TruncationContext& ctx() const { return ctx_; }

    int dim(int n) const { return (int)level(n).rank(); }

    std::vector<int> dims() const {
        std::vector<int> out;
        for (int n = 1; n <= ctx_.N; ++n) out.push_back(dim(n));
        return out;
    }

    const EchelonBasis& level(int n) const {
        if (n < 0 || n > ctx_.N)
            fail(errc::degree_out_of_range, "ideal level " + std::to_string(n));
        return levels_[n];
    }

    bool contains(const GradedElement& g) const { return level(g.degree()).contains(g.coeffs()); }

  private:
    friend GradedIdeal graded_ideal(const InitialFormSet&, const TruncationContext&);
    TruncationContext ctx_;
    std::vector<EchelonBasis> levels_;
};

// the ideal generated by the forms in the graded algebra of the free group,
// computed level by level (every closure operation raises degree by one)
inline GradedIdeal graded_ideal(const InitialFormSet& fs, const TruncationContext& ctx) {
    for (const InitialForm& f : fs.forms)
        if (f.form.degree() < 2)
            fail(errc::degree_out_of_range,
                 "ideal generators must have degree >= 2 (relator " +
                     std::to_string(f.relator + 1) + " has degree " +
                     std::to_string(f.form.degree()) + ")");
    GradedIdeal ideal(ctx);
    for (int n = 2; n <= ctx.N; ++n) {
        EchelonBasis& level = ideal.levels_[n];
        for (const InitialForm& f : fs.forms)
            if (f.form.degree() == n) level.insert(f.form.coeffs());
        for (const FpVec& row : ideal.levels_[n - 1].rows()) {
            GradedElement v = graded_from_vec(ctx, n - 1, row);
            level.insert(pi_mul(v).coeffs());
            for (int j = 1; j <= ctx.d; ++j)
                level.insert(bracket(v, GradedElement::generator(ctx, j)).coeffs());
        }
    }
    return ideal;
}

struct HilbertVerdict {
    enum class Kind { strongly_free, not_strongly_free, target_degenerate };
    Kind kind = Kind::strongly_free;
    int detail_degree = 0;     // first mismatch / first negative target
    std::vector<i64> computed; // codimensions of J_n in U_n, degrees 0..N
    std::vector<i64> target;   // series coefficients, degrees 0..N
};

inline const char* hilbert_kind_name(HilbertVerdict::Kind k) {
    switch (k) {
        case HilbertVerdict::Kind::strongly_free: return "strongly-free";
        case HilbertVerdict::Kind::not_strongly_free: return "not-strongly-free";
        case HilbertVerdict::Kind::target_degenerate: return "target-degenerate";
    }
    return "?";
}

inline HilbertVerdict strongly_free_test(const InitialFormSet& fs, const TruncationContext& ctx) {
    for (const InitialForm& f : fs.forms)
        if (f.form.degree() < 2)
            fail(errc::degree_out_of_range,
                 "the strong-freeness test needs forms of degree >= 2 (relator " +
                     std::to_string(f.relator + 1) + ")");

    HilbertVerdict v;

    // codimensions of the two-sided ideal, degree by degree
    std::vector<EchelonBasis> J;
    for (int n = 0; n <= ctx.N; ++n) J.emplace_back(ctx.p, (std::size_t)u_dim(ctx, n));
    for (int n = 1; n <= ctx.N; ++n) {
        for (const InitialForm& f : fs.forms)
            if (f.form.degree() == n) J[n].insert(f.form.coeffs());
        for (const FpVec& row : J[n - 1].rows()) {
            GradedElement w = graded_from_vec(ctx, n - 1, row);
            J[n].insert(pi_mul(w).coeffs());
            for (int j = 1; j <= ctx.d; ++j) {
                GradedElement x = GradedElement::generator(ctx, j);
                J[n].insert(mul(x, w).coeffs());
                J[n].insert(mul(w, x).coeffs());
            }
        }
    }
    for (int n = 0; n <= ctx.N; ++n) v.computed.push_back(u_dim(ctx, n) - (i64)J[n].rank());

    // coefficients of 1 / ((1-t) (1 - d t + sum_i t^(e_i)))
    std::vector<i64> A(ctx.N + 1, 0);
    A[0] = 1;
    A[1] -= ctx.d;
    for (int e : fs.degrees)
        if (e <= ctx.N) A[e] += 1;
    std::vector<i64> B(ctx.N + 1, 0);
    B[0] = 1;
    for (int k = 1; k <= ctx.N; ++k) B[k] = A[k] - A[k - 1];
    for (int n = 0; n <= ctx.N; ++n) {
        i64 t = (n == 0) ? 1 : 0;
        for (int k = 1; k <= n; ++k) t -= B[k] * v.target[n - k];
        if (t > (i64)1e15 || t < -(i64)1e15)
            fail(errc::resource_cap, "series coefficient overflow at degree " + std::to_string(n));
        v.target.push_back(t);
    }

    for (int n = 0; n <= ctx.N; ++n) {
        if (v.target[n] < 0) {
            v.kind = HilbertVerdict::Kind::target_degenerate;
            v.detail_degree = n;
            return v;
        }
        if (v.computed[n] != v.target[n]) {
            v.kind = HilbertVerdict::Kind::not_strongly_free;
            v.detail_degree = n;
            return v;
        }
    }
    return v;
}

struct QuadraticReport {
    enum class Verdict {
        r_trivial,
        quadratic_strongly_free,
        quadratic_group_certified,
        not_quadratic,
        inconclusive
    };
    Verdict verdict = Verdict::inconclusive;
    bool quadratic = false;
    std::vector<int> degrees;
    HilbertVerdict hilbert;
    std::vector<int> ideal_dims;   // Lie-ideal layer dims 1..N (certification path only)
    std::vector<int> induced_dims; // relation-subgroup layer dims 1..N (ditto)
    int mismatch_degree = 0;       // first degree where the ideal undershoots the layers
};

inline const char* verdict_string(QuadraticReport::Verdict v) {
    switch (v) {
        case QuadraticReport::Verdict::r_trivial: return "R-trivial";
        case QuadraticReport::Verdict::quadratic_strongly_free:
            return "quadratically-defined (strongly-free certificate)";
        case QuadraticReport::Verdict::quadratic_group_certified:
            return "quadratically-defined (group-certified)";
        case QuadraticReport::Verdict::not_quadratic: return "not-quadratic";
        case QuadraticReport::Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

inline QuadraticReport quadratic_verdict(const Presentation& pr,
                                         std::vector<std::string>* warnings = nullptr) {
    {
        MinimalityReport min = minimality_check(pr);
        if (!min.weight_ok)
            fail(errc::degree_out_of_range,
                 "quadraticity analysis requires a minimal presentation: relator " +
                     std::to_string(min.shallow.front() + 1) + " has weight < 2");
    }
    QuadraticReport rep;
    if (pr.relators.empty()) {
        rep.verdict = QuadraticReport::Verdict::r_trivial;
        rep.quadratic = true;
        rep.hilbert = strongly_free_test(InitialFormSet{}, pr.ctx);
        return rep;
    }
    InitialFormSet fs = initial_forms(pr, warnings);
    rep.quadratic = fs.quadratic;
    rep.degrees = fs.degrees;
    rep.hilbert = strongly_free_test(fs, pr.ctx);
    if (!fs.quadratic) {
        rep.verdict = QuadraticReport::Verdict::not_quadratic;
        return rep;
    }
    if (rep.hilbert.kind == HilbertVerdict::Kind::strongly_free) {
        rep.verdict = QuadraticReport::Verdict::quadratic_strongly_free;
        return rep;
    }

    // quadratic but not strongly free: compare the ideal's layers against the
    // relation subgroup's layers; equality certifies, excess is impossible
    GradedIdeal ideal = graded_ideal(fs, pr.ctx);
    LayerBasis r_layers =
        layered_closure(pr.ctx, evaluate_relators(pr, nullptr), ClosureMode::normal_closure);
    rep.ideal_dims = ideal.dims();
    rep.induced_dims = r_layers.dims();
    for (int n = 1; n <= pr.ctx.N; ++n) {
        if (ideal.dim(n) > r_layers.dim(n))
            fail(errc::internal_invariant,
                 "form ideal exceeds the relation layers at degree " + std::to_string(n));
        if (ideal.dim(n) > 0) {
            EchelonBasis span = r_layers.echelon(n);
            for (const FpVec& row : ideal.level(n).rows())
                if (!span.contains(row))
                    fail(errc::internal_invariant,
                         "form ideal escapes the relation layers at degree " + std::to_string(n));
        }
        if (ideal.dim(n) < r_layers.dim(n) && rep.mismatch_degree == 0) rep.mismatch_degree = n;
    }
    rep.verdict = rep.mismatch_degree == 0 ? QuadraticReport::Verdict::quadratic_group_certified
                                           : QuadraticReport::Verdict::inconclusive;
    return rep;
}

} // namespace procp

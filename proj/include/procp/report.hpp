// Assembled analysis reports: one full pipeline run over a presentation (or a
// finite field), every verdict paired with its certification degree, rendered
// as stable-key JSON or fixed-layout text.  Rendering never recomputes; all
// numbers come from the structs filled in by the analysis pass.
#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "procp/filtration.hpp"
#include "procp/milnor.hpp"
#include "procp/presentation.hpp"
#include "procp/verifier.hpp"

namespace procp {

using nlohmann::ordered_json;

struct AnalysisReport {
    Presentation pr;
    std::vector<std::string> warnings;
    MinimalityReport minimality;
    std::vector<RelatorStatus> certification;
    InitialFormSet forms;

    // the comparison pipeline needs every relator at weight >= 2; when that
    // fails we stop after the diagnostics above and say so in `note`
    bool comparisons_run = false;
    std::string note;

    QuadraticReport quadratic;
    std::vector<std::vector<int>> chain_dims; // step n = 1..N-1, layer dims 1..N
    std::vector<int> group_dims;              // gr_n(S/R) dims, 1..N
    EqualityReport equality;

    std::string realizability;
};

namespace detail {

inline std::string join(const std::vector<int>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
    return v.empty() ? "-" : out.str();
}

inline std::string join64(const std::vector<i64>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
    return v.empty() ? "-" : out.str();
}

} // namespace detail

inline std::string truncation_disclaimer(int N) {
    return "computed in the weight-" + std::to_string(N) +
           " truncation: equalities and memberships are certified up to truncation (modulo weight"
           " > " +
           std::to_string(N) + "), gaps and non-memberships are unconditional";
}

inline std::string quadratic_summary(const QuadraticReport& q, int N) {
    using V = QuadraticReport::Verdict;
    switch (q.verdict) {
        case V::r_trivial:
            return "R is trivial: the group is free on its generators (certified to degree " +
                   std::to_string(N) + ")";
        case V::quadratic_strongly_free:
        case V::quadratic_group_certified:
            return "quadratically defined (certified to degree " + std::to_string(N) + ")";
        case V::not_quadratic:
            return "not quadratically defined: an initial form has degree " +
                   std::to_string(q.degrees.empty() ? 0 : *std::max_element(q.degrees.begin(),
                                                                            q.degrees.end())) +
                   " (form degrees are exact below the truncation)";
        case V::inconclusive:
            return "inconclusive: quadratic initial forms, but their ideal undershoots the induced"
                   " filtration at degree " +
                   std::to_string(q.mismatch_degree) + "; no certificate either way to degree " +
                   std::to_string(N);
    }
    return "?";
}

inline std::string equality_summary(const EqualityReport& eq, int N) {
    if (eq.equal_to_truncation)
        return "every computed step R^(n,S) equals R cap S^(n+1) to degree " + std::to_string(N) +
               " (certified up to truncation)";
    return "R^(n,S) differs from R cap S^(n+1): first gap at step " +
           std::to_string(eq.first_gap_step) + ", degree " + std::to_string(eq.first_gap_degree) +
           " (unconditional)";
}

inline AnalysisReport analyze_presentation(const Presentation& pr) {
    AnalysisReport rep;
    rep.pr = pr;
    rep.minimality = minimality_check(pr);
    rep.forms = initial_forms(pr, &rep.warnings);
    rep.certification = certify_relators(pr);

    if (!rep.minimality.weight_ok) {
        rep.note = "chain comparison skipped: relator " +
                   std::to_string(rep.minimality.shallow.front() + 1) +
                   " has weight < 2, so the presentation is not minimal and the comparison"
                   " theorems do not apply";
        rep.realizability =
            "not assessed: the presentation is not minimal, so the realizability criteria do not"
            " apply";
        return rep;
    }

    rep.comparisons_run = true;
    rep.quadratic = quadratic_verdict(pr);

    RSeries rs = r_series(pr);
    for (int n = 1; n <= rs.max_step(); ++n) {
        std::vector<int> dims;
        for (int k = 1; k <= pr.ctx.N; ++k) dims.push_back(rs.step(n).dim(k));
        rep.chain_dims.push_back(std::move(dims));
    }
    rep.group_dims = rs.quotient_dims();
    rep.equality = equality_report(pr);

    int gap_step = 0, gap_degree = 0;
    for (const StepComparison& cmp : rep.equality.steps)
        if ((cmp.n == 2 || cmp.n == 3) && cmp.gap_degree != 0 && gap_step == 0) {
            gap_step = cmp.n;
            gap_degree = cmp.gap_degree;
        }
    if (gap_step != 0)
        rep.realizability = "NOT realizable as Gal(F(p)/F) for any F ∋ ζ_p (certified gap at"
                            " degree " +
                            std::to_string(gap_degree) + ")";
    else if (rep.equality.equal_to_truncation)
        rep.realizability = "no obstruction found: the induced chain matches R cap S^(n+1) at"
                            " every computed step to degree " +
                            std::to_string(pr.ctx.N) + " (certified up to truncation)";
    else
        rep.realizability = "no obstruction at steps 2 and 3 to degree " +
                            std::to_string(pr.ctx.N) +
                            " (certified up to truncation); the gap at step " +
                            std::to_string(rep.equality.first_gap_step) +
                            " is unconditional but carries no realizability consequence";
    return rep;
}

inline ordered_json analysis_json(const AnalysisReport& rep) {
    const int N = rep.pr.ctx.N;
    ordered_json j;
    j["input"] = ordered_json::parse(serialize_presentation(rep.pr));
    j["truncation"] = {{"N", N}, {"disclaimer", truncation_disclaimer(N)}};
    j["warnings"] = rep.warnings;

    j["minimality"] = {{"passed", rep.minimality.passed},
                       {"weight_ok", rep.minimality.weight_ok},
                       {"forms_independent", rep.minimality.forms_independent},
                       {"weights", rep.minimality.weights},
                       {"shallow_relators", rep.minimality.shallow},
                       {"dependent_relators", rep.minimality.dependent}};

    ordered_json certs = ordered_json::array();
    for (const RelatorStatus& st : rep.certification)
        certs.push_back({{"relator", rep.pr.relator_text[st.index]},
                         {"essential", st.essential},
                         {"certificate", st.essential
                                             ? std::string("unconditional")
                                             : "redundant modulo weight > " + std::to_string(N)}});
    j["relator_certification"] = std::move(certs);

    ordered_json forms = ordered_json::array();
    for (std::size_t i = 0; i < rep.forms.forms.size(); ++i)
        forms.push_back({{"relator", rep.pr.relator_text[rep.forms.forms[i].relator]},
                         {"degree", rep.forms.degrees[i]},
                         {"form", rep.forms.forms[i].form.to_string()}});
    j["initial_forms"] = std::move(forms);

    if (!rep.comparisons_run) {
        j["note"] = rep.note;
    } else {
        const QuadraticReport& q = rep.quadratic;
        j["quadratic"] = {{"verdict", verdict_string(q.verdict)},
                          {"summary", quadratic_summary(q, N)},
                          {"forms_quadratic", q.quadratic},
                          {"form_degrees", q.degrees},
                          {"hilbert",
                           {{"kind", hilbert_kind_name(q.hilbert.kind)},
                            {"computed", q.hilbert.computed},
                            {"target", q.hilbert.target},
                            {"detail_degree", q.hilbert.detail_degree}}},
                          {"ideal_dims", q.ideal_dims},
                          {"induced_dims", q.induced_dims},
                          {"mismatch_degree", q.mismatch_degree}};

        ordered_json steps = ordered_json::array();
        for (std::size_t i = 0; i < rep.chain_dims.size(); ++i)
            steps.push_back({{"n", (int)i + 1}, {"dims", rep.chain_dims[i]}});
        j["induced_chain"] = {{"steps", std::move(steps)}, {"group_layer_dims", rep.group_dims}};

        ordered_json cmps = ordered_json::array();
        for (const StepComparison& cmp : rep.equality.steps)
            cmps.push_back({{"n", cmp.n},
                            {"chain_dims", cmp.step_dims},
                            {"intersection_dims", cmp.cap_dims},
                            {"gap_degree", cmp.gap_degree}});
        j["equality"] = {{"equal_to_truncation", rep.equality.equal_to_truncation},
                         {"summary", equality_summary(rep.equality, N)},
                         {"steps", std::move(cmps)},
                         {"first_gap_step", rep.equality.first_gap_step},
                         {"first_gap_degree", rep.equality.first_gap_degree}};
    }

    j["obstructions"] = rep.comparisons_run ? rep.equality.obstructions
                                            : std::vector<std::string>{};
    j["realizability"] = rep.realizability;
    return j;
}

inline std::string analysis_text(const AnalysisReport& rep) {
    const int N = rep.pr.ctx.N;
    std::ostringstream out;
    out << "presentation: p = " << rep.pr.ctx.p << ", generators [";
    for (std::size_t i = 0; i < rep.pr.generators.size(); ++i)
        out << (i ? " " : "") << rep.pr.generators[i];
    out << "], truncation N = " << N << "\n";
    if (rep.pr.relator_text.empty()) out << "relators: none\n";
    for (std::size_t i = 0; i < rep.pr.relator_text.size(); ++i)
        out << "relator " << i + 1 << ": " << rep.pr.relator_text[i] << "\n";
    out << "note: " << truncation_disclaimer(N) << "\n";
    for (const std::string& w : rep.warnings) out << "warning: " << w << "\n";

    out << "minimality: " << (rep.minimality.passed ? "passed" : "FAILED")
        << " (weights: " << detail::join(rep.minimality.weights) << ")\n";
    if (!rep.minimality.shallow.empty())
        out << "  weight-one relators: " << detail::join(rep.minimality.shallow) << "\n";
    if (!rep.minimality.dependent.empty())
        out << "  dependent relators: " << detail::join(rep.minimality.dependent) << "\n";

    for (const RelatorStatus& st : rep.certification)
        out << "relator " << st.index + 1 << " ["
            << rep.pr.relator_text[st.index] << "]: "
            << (st.essential ? "essential (unconditional)"
                             : "redundant (modulo weight > " + std::to_string(N) + ")")
            << "\n";

    for (std::size_t i = 0; i < rep.forms.forms.size(); ++i)
        out << "initial form of " << rep.pr.relator_text[rep.forms.forms[i].relator] << ": "
            << rep.forms.forms[i].form.to_string() << " (degree " << rep.forms.degrees[i]
            << ")\n";

    if (!rep.comparisons_run) {
        out << "note: " << rep.note << "\n";
        out << "realizability: " << rep.realizability << "\n";
        return out.str();
    }

    const QuadraticReport& q = rep.quadratic;
    out << "quadratic verdict: " << verdict_string(q.verdict) << "\n";
    out << "  " << quadratic_summary(q, N) << "\n";
    out << "  hilbert " << hilbert_kind_name(q.hilbert.kind)
        << ", computed: " << detail::join64(q.hilbert.computed)
        << ", target: " << detail::join64(q.hilbert.target) << "\n";
    if (!q.ideal_dims.empty())
        out << "  quadratic ideal dims: " << detail::join(q.ideal_dims)
            << ", induced filtration dims: " << detail::join(q.induced_dims) << "\n";

    for (std::size_t i = 0; i < rep.chain_dims.size(); ++i)
        out << "chain step " << i + 1 << " layer dims: " << detail::join(rep.chain_dims[i])
            << "\n";
    out << "group layer dims: " << detail::join(rep.group_dims) << "\n";

    for (const StepComparison& cmp : rep.equality.steps) {
        out << "step " << cmp.n << " vs R cap S^(" << cmp.n + 1 << "): ";
        if (cmp.gap_degree == 0)
            out << "equal to degree " << N << "\n";
        else
            out << "gap at degree " << cmp.gap_degree << " (chain "
                << detail::join(cmp.step_dims) << " / intersection " << detail::join(cmp.cap_dims)
                << ")\n";
    }
    out << "equality: " << equality_summary(rep.equality, N) << "\n";
    for (const std::string& o : rep.equality.obstructions) out << "obstruction: " << o << "\n";
    out << "realizability: " << rep.realizability << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// finite-field symbol reports

struct MilnorReport {
    i64 q = 0;
    i64 p = 0;
    int n = 1;
    std::string field_label;
    std::string generator; // representative of the unit-class line
    std::vector<i64> dims; // k_1 .. k_n
    std::vector<SteinbergReport> identities; // degrees 2..n
};

namespace detail {

inline std::string poly_string(const Poly& m) {
    std::ostringstream out;
    bool first = true;
    for (int i = (int)m.size() - 1; i >= 0; --i) {
        if (m[i] == 0) continue;
        if (!first) out << "+";
        first = false;
        if (i == 0 || m[i] != 1) out << m[i];
        if (i == 1) out << "t";
        if (i > 1) out << "t^" << i;
    }
    return out.str();
}

} // namespace detail

inline std::string field_label(const FiniteField& F) {
    if (F.k == 1) return "F_" + std::to_string(F.q);
    return "F_" + std::to_string(F.q) + " = F_" + std::to_string(F.p0) + "[t]/(" +
           detail::poly_string(F.modulus) + ")";
}

inline MilnorReport milnor_report(const FieldAdapter& f, int n) {
    if (n < 1) fail(errc::degree_out_of_range, "symbol degree must be >= 1");
    MilnorReport rep;
    rep.q = f.q();
    rep.p = f.p();
    rep.n = n;
    rep.field_label = field_label(f.field());
    rep.generator = f.field().to_string(f.generator());
    for (int m = 1; m <= n; ++m) rep.dims.push_back(milnor_dims(f, m));
    for (int m = 2; m <= n; ++m) rep.identities.push_back(steinberg_suite(f, m));
    return rep;
}

inline ordered_json milnor_json(const MilnorReport& rep) {
    ordered_json j;
    j["field"] = rep.field_label;
    j["q"] = rep.q;
    j["p"] = rep.p;
    j["n"] = rep.n;
    j["unit_class_generator"] = rep.generator;
    j["dims"] = rep.dims;
    ordered_json ids = ordered_json::array();
    for (const SteinbergReport& s : rep.identities)
        ids.push_back({{"degree", s.n},
                       {"sum_one_ok", s.sum_one_ok},
                       {"minus_ok", s.minus_ok},
                       {"antisym_ok", s.antisym_ok},
                       {"checked", s.checked},
                       {"witnesses", s.witnesses},
                       {"passed", s.passed}});
    j["identities"] = std::move(ids);
    return j;
}

inline std::string milnor_text(const MilnorReport& rep) {
    std::ostringstream out;
    out << "field " << rep.field_label << ", p = " << rep.p << ", symbols to degree " << rep.n
        << "\n";
    out << "unit-class generator: " << rep.generator << "\n";
    for (std::size_t i = 0; i < rep.dims.size(); ++i)
        out << "k_" << i + 1 << " = " << rep.dims[i] << "\n";
    for (const SteinbergReport& s : rep.identities) {
        out << "identities at degree " << s.n << ": sum-one "
            << (s.sum_one_ok ? "pass" : "FAIL") << ", minus " << (s.minus_ok ? "pass" : "FAIL")
            << ", antisymmetry " << (s.antisym_ok ? "pass" : "FAIL") << " (" << s.checked
            << " checks)\n";
        for (const std::string& w : s.witnesses) out << "  counterexample: " << w << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// built-in fixtures

struct Fixture {
    const char* name;
    const char* text; // presentation document, analyze-ready
};

inline const std::vector<Fixture>& builtin_fixtures() {
    static const std::vector<Fixture> table = {
        {"cyclic-p2-mod2",
         R"({"p": 2, "generators": ["s1"], "relators": ["s1^4"], "truncation": 4})"},
        {"cyclic-p2-mod3",
         R"({"p": 3, "generators": ["s1"], "relators": ["s1^9"], "truncation": 4})"},
        {"triple-commutator-mod2",
         R"({"p": 2, "generators": ["s1", "s2", "s3"], "relators": ["[[s1,s2],s3]"], "truncation": 4})"},
        {"triple-commutator-mod3",
         R"({"p": 3, "generators": ["s1", "s2", "s3"], "relators": ["[[s1,s2],s3]"], "truncation": 4})"},
        {"demushkin-mod2",
         R"({"p": 2, "generators": ["s1", "s2"], "relators": ["s1^2 [s1,s2]"], "truncation": 5})"},
        {"demushkin-mod3",
         R"({"p": 3, "generators": ["s1", "s2"], "relators": ["s1^3 [s1,s2]"], "truncation": 5})"},
        {"demushkin-mod5",
         R"({"p": 5, "generators": ["s1", "s2"], "relators": ["s1^5 [s1,s2]"], "truncation": 5})"},
        {"cyclic-p-mod3",
         R"({"p": 3, "generators": ["s1"], "relators": ["s1^3"], "truncation": 5})"},
        {"free-mod2",
         R"({"p": 2, "generators": ["s1", "s2"], "relators": [], "truncation": 5})"},
    };
    return table;
}

inline ordered_json fixture_reports_json() {
    ordered_json arr = ordered_json::array();
    for (const Fixture& fx : builtin_fixtures()) {
        Presentation pr = parse_presentation(fx.text);
        arr.push_back({{"name", fx.name}, {"report", analysis_json(analyze_presentation(pr))}});
    }
    return arr;
}

} // namespace procp

#pragma once

// Presentation files and the cheap minimality checks.
//
// Input schema (UTF-8 JSON, field order irrelevant):
//   {"p": int, "generators": [string], "relators": [string],
//    "truncation": int, "assert_minimal": bool?}
//
// A presentation is minimal only if every relator lies in S^(2), i.e. has
// weight >= 2; that necessary condition is checked here, together with
// linear independence of the relator initial forms degree by degree.  Full
// relator-set minimality (independence modulo R^p[R,S]) needs the layered
// machinery and is certified separately, relator by relator.

#include <string>
#include <vector>

#include "json.hpp"

#include "procp/context.hpp"
#include "procp/errors.hpp"
#include "procp/fp.hpp"
#include "procp/magnus.hpp"
#include "procp/word.hpp"

namespace procp {

struct Presentation {
    TruncationContext ctx;
    std::vector<std::string> generators;
    std::vector<std::string> relator_text; // as written in the input
    std::vector<GroupWord> relators;
    bool assert_minimal = false;
};

namespace detail {

inline bool valid_ident(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha((unsigned char)s[0]) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum((unsigned char)c) && c != '_') return false;
    return true;
}

inline i64 require_int(const nlohmann::ordered_json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        fail(errc::syntax_error, std::string("missing or non-integer field \"") + key + "\"");
    return j[key].get<i64>();
}

} // namespace detail

inline Presentation parse_presentation(const std::string& text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(errc::syntax_error, std::string("input is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) fail(errc::syntax_error, "input must be a JSON object");

    i64 p = detail::require_int(j, "p");
    i64 N = detail::require_int(j, "truncation");
    if (!j.contains("generators") || !j["generators"].is_array())
        fail(errc::syntax_error, "missing or non-array field \"generators\"");
    if (!j.contains("relators") || !j["relators"].is_array())
        fail(errc::syntax_error, "missing or non-array field \"relators\"");

    Presentation pr;
    for (const auto& g : j["generators"]) {
        if (!g.is_string()) fail(errc::syntax_error, "generator names must be strings");
        std::string name = g.get<std::string>();
        if (!detail::valid_ident(name))
            fail(errc::syntax_error, "generator name '" + name + "' is not an identifier");
        for (const std::string& seen : pr.generators)
            if (seen == name) fail(errc::syntax_error, "duplicate generator name '" + name + "'");
        pr.generators.push_back(name);
    }
    if (pr.generators.empty()) fail(errc::syntax_error, "at least one generator is required");
    if (N < 2) fail(errc::truncation_too_small, "truncation degree must be >= 2");
    pr.ctx = TruncationContext(p, (int)pr.generators.size(), (int)N);

    for (const auto& r : j["relators"]) {
        if (!r.is_string()) fail(errc::syntax_error, "relators must be strings");
        std::string w = r.get<std::string>();
        pr.relator_text.push_back(w);
        pr.relators.push_back(parse_word(w, pr.generators));
    }
    if (j.contains("assert_minimal")) {
        if (!j["assert_minimal"].is_boolean())
            fail(errc::syntax_error, "\"assert_minimal\" must be a boolean");
        pr.assert_minimal = j["assert_minimal"].get<bool>();
    }
    return pr;
}

inline std::string serialize_presentation(const Presentation& pr) {
    nlohmann::ordered_json j;
    j["p"] = pr.ctx.p;
    j["generators"] = pr.generators;
    j["relators"] = pr.relator_text;
    j["truncation"] = pr.ctx.N;
    j["assert_minimal"] = pr.assert_minimal;
    return j.dump(2);
}

// evaluate all relators once, pooling exponent-reduction warnings
inline std::vector<GroupElement> evaluate_relators(const Presentation& pr,
                                                   std::vector<std::string>* warnings = nullptr) {
    std::vector<GroupElement> out;
    for (const GroupWord& r : pr.relators) out.push_back(evaluate_word(pr.ctx, r, warnings));
    return out;
}

struct MinimalityReport {
    bool weight_ok = true;         // every relator has weight >= 2
    std::vector<int> shallow;      // relator indices of weight < 2 (redundant generator)
    bool forms_independent = true; // nonzero initial forms, independent per degree
    std::vector<int> dependent;    // indices whose form is zero or in the span of earlier ones
    std::vector<int> weights;      // weight per relator (weight_top() for trivial relators)
    bool passed = false;           // weight_ok && forms_independent
};

inline MinimalityReport minimality_check(const Presentation& pr) {
    MinimalityReport rep;
    std::vector<GroupElement> rel = evaluate_relators(pr);
    std::vector<EchelonBasis> per_degree(pr.ctx.N + 1,
                                         EchelonBasis(pr.ctx.p, 1)); // resized on use
    std::vector<bool> started(pr.ctx.N + 1, false);
    for (int i = 0; i < (int)rel.size(); ++i) {
        int w = weight(rel[i]);
        rep.weights.push_back(w);
        if (w < 2) {
            rep.weight_ok = false;
            rep.shallow.push_back(i);
            continue;
        }
        if (w > pr.ctx.N) {
            // trivial modulo the truncation: contributes nothing
            rep.forms_independent = false;
            rep.dependent.push_back(i);
            continue;
        }
        if (!started[w]) {
            per_degree[w] = EchelonBasis(pr.ctx.p, (std::size_t)u_dim(pr.ctx, w));
            started[w] = true;
        }
        if (!per_degree[w].insert(initial_form(rel[i]).coeffs())) {
            rep.forms_independent = false;
            rep.dependent.push_back(i);
        }
    }
    rep.passed = rep.weight_ok && rep.forms_independent;
    return rep;
}

} // namespace procp

#pragma once

// Truncated Magnus series: the free pro-p group on s_1..s_d embeds in the
// units of Z/p^N<x_1..x_d> via s_i -> 1 + x_i.  With weight(p) = weight(x_i)
// = 1 and everything of weight > N cut, an element g lies in the n-th term
// of the lower p-central series iff weight(g - 1) >= n, so filtration
// questions become valuation questions on honest arithmetic.  All verdicts
// derived from this representation hold modulo S^(N+1).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "procp/context.hpp"
#include "procp/errors.hpp"
#include "procp/fp.hpp"
#include "procp/graded.hpp"
#include "procp/word.hpp"

namespace procp {

struct ShortlexLess {
    bool operator()(const Letters& a, const Letters& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

class TruncatedSeries {
  public:
    using TermMap = std::map<Letters, i64, ShortlexLess>;

    explicit TruncatedSeries(const TruncationContext& ctx) : ctx_(ctx) {}

    static TruncatedSeries one(const TruncationContext& ctx) {
        TruncatedSeries s(ctx);
        s.add(Letters(), 1);
        return s;
    }
    // 1 + x_i, 1-based
    static TruncatedSeries unit_generator(const TruncationContext& ctx, int i) {
        if (i < 1 || i > ctx.d)
            fail(errc::unknown_generator, "generator index " + std::to_string(i) + " out of range");
        TruncatedSeries s = one(ctx);
        s.add(Letters(1, (char)(i - 1)), 1);
        return s;
    }

    const TruncationContext& ctx() const { return ctx_; }
    const TermMap& terms() const { return terms_; }

    i64 coeff(const Letters& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? 0 : it->second;
    }

    // accumulate c on word w, applying the canonical truncation
    void add(const Letters& w, i64 c) {
        if ((int)w.size() > ctx_.N) return;
        i64 m = ctx_.coeff_modulus((int)w.size());
        auto it = terms_.find(w);
        i64 cur = it == terms_.end() ? 0 : it->second;
        i64 next = mod_reduce(cur + mod_reduce(c, m), m);
        if (next == 0) {
            if (it != terms_.end()) terms_.erase(it);
        } else if (it != terms_.end()) {
            it->second = next;
        } else {
            terms_.emplace(w, next);
        }
    }

    TruncatedSeries operator*(const TruncatedSeries& o) const {
        require_same_context(ctx_, o.ctx_);
        TruncatedSeries out(ctx_);
        for (const auto& [wa, ca] : terms_) {
            for (const auto& [wb, cb] : o.terms_) {
                if ((int)(wa.size() + wb.size()) > ctx_.N) continue;
                out.add(wa + wb, (i64)((i128)ca * cb % ctx_.coeff_modulus((int)(wa.size() + wb.size()))));
            }
        }
        return out;
    }

    TruncatedSeries operator+(const TruncatedSeries& o) const {
        require_same_context(ctx_, o.ctx_);
        TruncatedSeries out = *this;
        for (const auto& [w, c] : o.terms_) out.add(w, c);
        return out;
    }

    TruncatedSeries negated() const {
        TruncatedSeries out(ctx_);
        for (const auto& [w, c] : terms_) out.add(w, -c);
        return out;
    }

    bool operator==(const TruncatedSeries& o) const {
        return ctx_ == o.ctx_ && terms_ == o.terms_;
    }

  private:
    TruncationContext ctx_;
    TermMap terms_;
};

// A unit of the truncated series ring with constant term 1; the image of a
// group element.  weight() and initial_form() read the filtration off it.
class GroupElement {
  public:
    explicit GroupElement(TruncatedSeries s) : s_(std::move(s)) {
        if (s_.coeff(Letters()) != 1)
            fail(errc::internal_invariant, "group element must have constant term 1");
    }

    static GroupElement identity(const TruncationContext& ctx) {
        return GroupElement(TruncatedSeries::one(ctx));
    }
    static GroupElement generator(const TruncationContext& ctx, int i) {
        return GroupElement(TruncatedSeries::unit_generator(ctx, i));
    }

    const TruncationContext& ctx() const { return s_.ctx(); }
    const TruncatedSeries& series() const { return s_; }
    bool is_identity() const { return s_.terms().size() == 1; }

    GroupElement operator*(const GroupElement& o) const { return GroupElement(s_ * o.s_); }

    // geometric series on g - 1: (1+u)^-1 = 1 - u + u^2 - ...
    GroupElement inverse() const {
        const TruncationContext& ctx = s_.ctx();
        TruncatedSeries u = s_ + TruncatedSeries::one(ctx).negated(); // g - 1
        TruncatedSeries acc = TruncatedSeries::one(ctx);
        TruncatedSeries pw = TruncatedSeries::one(ctx);
        for (int k = 1; k <= ctx.N; ++k) {
            pw = pw * u;
            if (pw.terms().empty()) break;
            acc = acc + (k % 2 ? pw.negated() : pw);
        }
        return GroupElement(acc);
    }

    // g^e, with e reduced mod p^N (valid: the quotient has exponent dividing
    // p^N).  |e| > p^N is flagged through *warnings.
    GroupElement pow(i64 e, std::vector<std::string>* warnings = nullptr) const {
        const TruncationContext& ctx = s_.ctx();
        i64 m = ctx.ppow[ctx.N];
        if (e > m || e < -m) {
            if (warnings)
                warnings->push_back("exponent " + std::to_string(e) + " reduced mod p^N = " +
                                    std::to_string(m));
            e = mod_reduce(e, m);
        } else if (e < 0) {
            e = mod_reduce(e, m);
        }
        GroupElement base = *this;
        GroupElement acc = identity(ctx);
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    bool operator==(const GroupElement& o) const { return s_ == o.s_; }

  private:
    TruncatedSeries s_;
};

// [g,h] = g^-1 h^-1 g h
inline GroupElement commutator(const GroupElement& g, const GroupElement& h) {
    return g.inverse() * h.inverse() * g * h;
}

// min over the terms of g - 1 of v_p(coeff) + |word|; weight_top() if g = 1
// in the truncation.  Terms are kept canonically reduced, so every stored
// term already has weight <= N.
inline int weight(const GroupElement& g) {
    const TruncationContext& ctx = g.ctx();
    int best = ctx.weight_top();
    for (const auto& [w, c] : g.series().terms()) {
        if (w.empty()) continue;
        int wt = valuation(c, ctx.p) + (int)w.size();
        if (wt < best) best = wt;
    }
    return best;
}

// Homogeneous weight-n part of g - 1 as an element of U_n, where n =
// weight(g): the term c * w with v_p(c) + |w| = n contributes
// (c / p^(n-|w|) mod p) pi^(n-|w|) w.
inline GradedElement initial_form(const GroupElement& g) {
    const TruncationContext& ctx = g.ctx();
    int n = weight(g);
    if (n > ctx.N) fail(errc::identity_element, "initial form of the identity");
    GradedElement out(ctx, n);
    for (const auto& [w, c] : g.series().terms()) {
        if (w.empty()) continue;
        int v = valuation(c, ctx.p);
        if (v + (int)w.size() != n) continue;
        out.set_term(v, w, (c / ctx.ppow[v]) % ctx.p);
    }
    return out;
}

inline GroupElement evaluate_word(const TruncationContext& ctx, const GroupWord& w,
                                  std::vector<std::string>* warnings = nullptr) {
    switch (w.kind) {
    case GroupWord::Kind::letter:
        if (w.letter < 1 || w.letter > ctx.d)
            fail(errc::unknown_generator, "generator index " + std::to_string(w.letter) +
                                              " exceeds declared rank " + std::to_string(ctx.d));
        return GroupElement::generator(ctx, w.letter);
    case GroupWord::Kind::product: {
        GroupElement acc = GroupElement::identity(ctx);
        for (const GroupWord& c : w.children) acc = acc * evaluate_word(ctx, c, warnings);
        return acc;
    }
    case GroupWord::Kind::power:
        return evaluate_word(ctx, w.children[0], warnings).pow(w.exponent, warnings);
    case GroupWord::Kind::commutator:
        return commutator(evaluate_word(ctx, w.children[0], warnings),
                          evaluate_word(ctx, w.children[1], warnings));
    }
    fail(errc::internal_invariant, "unreachable word kind");
}

inline GroupElement evaluate_word(const TruncationContext& ctx, const std::string& text,
                                  std::vector<std::string>* warnings = nullptr) {
    return evaluate_word(ctx, parse_word(text, default_generator_names(ctx.d)), warnings);
}

} // namespace procp

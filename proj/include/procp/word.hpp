#pragma once

// Group words over a declared generator set.
//
// Grammar (whitespace-insensitive):
//   word   := term*                    (juxtaposition = product, empty = identity)
//   term   := atom ('^' integer)*
//   atom   := ident | '[' word ',' word ']' | '(' word ')'
//   ident  := [A-Za-z_][A-Za-z0-9_]*
//
// [u,v] denotes u^-1 v^-1 u v.  Exponents are signed 64-bit literals.

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "procp/errors.hpp"

namespace procp {

struct GroupWord {
    enum class Kind { letter, product, power, commutator };

    Kind kind = Kind::product;
    int letter = 0;                  // 1-based generator index (kind == letter)
    std::int64_t exponent = 1;       // kind == power
    std::vector<GroupWord> children; // product: n-ary; power: 1; commutator: 2

    static GroupWord make_letter(int i) {
        GroupWord w;
        w.kind = Kind::letter;
        w.letter = i;
        return w;
    }
    static GroupWord make_product(std::vector<GroupWord> ws) {
        if (ws.size() == 1) return ws[0];
        GroupWord w;
        w.kind = Kind::product;
        w.children = std::move(ws);
        return w;
    }
    static GroupWord make_power(GroupWord base, std::int64_t e) {
        GroupWord w;
        w.kind = Kind::power;
        w.exponent = e;
        w.children.push_back(std::move(base));
        return w;
    }
    static GroupWord make_commutator(GroupWord u, GroupWord v) {
        GroupWord w;
        w.kind = Kind::commutator;
        w.children.push_back(std::move(u));
        w.children.push_back(std::move(v));
        return w;
    }

    bool operator==(const GroupWord& o) const {
        if (kind != o.kind) return false;
        switch (kind) {
        case Kind::letter: return letter == o.letter;
        case Kind::power: return exponent == o.exponent && children == o.children;
        default: return children == o.children;
        }
    }
};

namespace detail {

class WordParser {
  public:
    WordParser(const std::string& text, const std::vector<std::string>& names)
        : text_(text), names_(names) {}

    GroupWord parse() {
        GroupWord w = parse_word();
        skip_ws();
        if (pos_ != text_.size()) err("unexpected character");
        return w;
    }

  private:
    const std::string& text_;
    const std::vector<std::string>& names_;
    std::size_t pos_ = 0;

    [[noreturn]] void err(const std::string& what) {
        fail(errc::syntax_error, what + " at position " + std::to_string(pos_));
    }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    void expect(char c) {
        if (!peek(c)) err(std::string("expected '") + c + "'");
        ++pos_;
    }

    GroupWord parse_word() {
        std::vector<GroupWord> terms;
        for (;;) {
            skip_ws();
            if (pos_ == text_.size()) break;
            char c = text_[pos_];
            if (c == ')' || c == ']' || c == ',') break;
            terms.push_back(parse_term());
        }
        return GroupWord::make_product(std::move(terms));
    }

    GroupWord parse_term() {
        GroupWord w = parse_atom();
        while (peek('^')) {
            ++pos_;
            w = GroupWord::make_power(std::move(w), parse_int());
        }
        return w;
    }

    GroupWord parse_atom() {
        skip_ws();
        if (pos_ == text_.size()) err("unexpected end of word");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            GroupWord w = parse_word();
            expect(')');
            return w;
        }
        if (c == '[') {
            ++pos_;
            GroupWord u = parse_word();
            expect(',');
            GroupWord v = parse_word();
            expect(']');
            return GroupWord::make_commutator(std::move(u), std::move(v));
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum((unsigned char)text_[pos_]) || text_[pos_] == '_'))
                ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            for (std::size_t i = 0; i < names_.size(); ++i)
                if (names_[i] == name) return GroupWord::make_letter((int)i + 1);
            pos_ = start;
            fail(errc::unknown_generator,
                 "unknown generator '" + name + "' at position " + std::to_string(start));
        }
        err("unexpected character");
    }

    std::int64_t parse_int() {
        skip_ws();
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        skip_ws();
        if (pos_ == text_.size() || !std::isdigit((unsigned char)text_[pos_])) err("expected integer");
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) ++pos_;
        std::string digits = text_.substr(start, pos_ - start);
        if (digits.size() > 18) err("exponent literal too large");
        std::int64_t v = std::stoll(digits);
        return neg ? -v : v;
    }
};

} // namespace detail

inline GroupWord parse_word(const std::string& text, const std::vector<std::string>& generator_names) {
    return detail::WordParser(text, generator_names).parse();
}

// Default generator names s1..sd.
inline std::vector<std::string> default_generator_names(int d) {
    std::vector<std::string> names;
    for (int i = 1; i <= d; ++i) names.push_back("s" + std::to_string(i));
    return names;
}

inline std::string serialize_word(const GroupWord& w, const std::vector<std::string>& names) {
    switch (w.kind) {
    case GroupWord::Kind::letter: {
        if (w.letter < 1 || w.letter > (int)names.size())
            fail(errc::unknown_generator, "letter index " + std::to_string(w.letter) + " out of range");
        return names[w.letter - 1];
    }
    case GroupWord::Kind::power: {
        const GroupWord& b = w.children[0];
        std::string base = serialize_word(b, names);
        if (b.kind == GroupWord::Kind::product || b.kind == GroupWord::Kind::power)
            base = "(" + base + ")";
        return base + "^" + std::to_string(w.exponent);
    }
    case GroupWord::Kind::commutator:
        return "[" + serialize_word(w.children[0], names) + ", " +
               serialize_word(w.children[1], names) + "]";
    case GroupWord::Kind::product: {
        std::string out;
        for (std::size_t i = 0; i < w.children.size(); ++i) {
            if (i) out += " ";
            const GroupWord& c = w.children[i];
            std::string s = serialize_word(c, names);
            if (c.kind == GroupWord::Kind::product && !c.children.empty()) s = "(" + s + ")";
            out += s;
        }
        return out;
    }
    }
    fail(errc::internal_invariant, "unreachable word kind");
}

} // namespace procp

#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "singlab/polynomial.hpp"

namespace singlab {

// Grammar (whitespace ignored):
//   poly    := ['-'] term (('+'|'-') term)*
//   term    := coeff | coeff '*' factors | factors
//   factors := varpow ('*' varpow)*
//   varpow  := 'x' nat ('^' nat)?
//   coeff   := nat                      (reduced mod p)

namespace detail {

struct RawFactor {
    std::size_t var;
    unsigned exp;
    std::size_t offset;
};

struct RawTerm {
    bool negative = false;
    Coeff coeff = 1;
    std::vector<RawFactor> factors;
};

class PolyLexer {
public:
    PolyLexer(std::string_view text, std::uint64_t modulus) : text_(text), modulus_(modulus) {}

    std::vector<RawTerm> parse() {
        std::vector<RawTerm> terms;
        skip_ws();
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        terms.push_back(parse_term(negative));
        while (true) {
            skip_ws();
            if (at_end()) break;
            const char c = peek();
            if (c != '+' && c != '-') throw ParseError("expected '+' or '-'", pos_);
            ++pos_;
            terms.push_back(parse_term(c == '-'));
        }
        return terms;
    }

private:
    RawTerm parse_term(bool negative) {
        RawTerm t;
        t.negative = negative;
        skip_ws();
        if (at_end()) throw ParseError("expected a term", pos_);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            t.coeff = parse_nat_mod();
            skip_ws();
            if (at_end() || peek() != '*') return t;
            ++pos_;
        }
        t.factors.push_back(parse_varpow());
        while (true) {
            skip_ws();
            if (at_end() || peek() != '*') break;
            ++pos_;
            t.factors.push_back(parse_varpow());
        }
        return t;
    }

    RawFactor parse_varpow() {
        skip_ws();
        const std::size_t start = pos_;
        if (at_end() || peek() != 'x') throw ParseError("expected variable 'x<index>'", pos_);
        ++pos_;
        skip_ws();
        const auto index = parse_small_nat("variable index");
        unsigned exp = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            exp = static_cast<unsigned>(parse_small_nat("exponent"));
            if (exp > 0xFFFF) throw ParseError("exponent too large", pos_);
        }
        return {static_cast<std::size_t>(index), exp, start};
    }

    std::uint64_t parse_small_nat(const char* what) {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            throw ParseError(std::string("expected ") + what, pos_);
        }
        std::uint64_t v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (v > 1'000'000) throw ParseError(std::string(what) + " too large", pos_);
            ++pos_;
        }
        return v;
    }

    Coeff parse_nat_mod() {
        unsigned __int128 v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = (v * 10 + static_cast<unsigned>(peek() - '0')) % modulus_;
            ++pos_;
        }
        return static_cast<Coeff>(v);
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
    [[nodiscard]] char peek() const { return text_[pos_]; }

    std::string_view text_;
    std::uint64_t modulus_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Number of variables implied by the text: highest index mentioned plus one.
inline std::size_t infer_num_vars(std::string_view text) {
    // Modulus is irrelevant for index discovery.
    const auto terms = detail::PolyLexer(text, 2).parse();
    std::size_t n = 0;
    for (const auto& t : terms) {
        for (const auto& f : t.factors) n = std::max(n, f.var + 1);
    }
    return n;
}

inline Polynomial parse_poly(std::string_view text, std::size_t num_vars, const PrimeField& field) {
    const auto raw = detail::PolyLexer(text, field.characteristic()).parse();
    std::vector<Term> terms;
    terms.reserve(raw.size());
    for (const auto& t : raw) {
        Monomial m(num_vars);
        for (const auto& f : t.factors) {
            if (f.var >= num_vars) {
                throw ParseError("variable x" + std::to_string(f.var) + " out of range for " +
                                     std::to_string(num_vars) + " variables",
                                 f.offset);
            }
            m.set(f.var, m[f.var] + f.exp);
        }
        const Coeff c = t.negative ? field.neg(t.coeff) : t.coeff;
        terms.push_back({m, c});
    }
    return Polynomial::from_terms(field, num_vars, std::move(terms));
}

/// Canonical text form: descending grevlex, coefficient 1 omitted on
/// non-constant terms. parse_poly(format_poly(f)) == f.
inline std::string format_poly(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& t : f.terms()) {
        if (!out.empty()) out += " + ";
        if (t.mono.is_one()) {
            out += std::to_string(t.coeff);
        } else if (t.coeff == 1) {
            out += t.mono.to_string();
        } else {
            out += std::to_string(t.coeff) + '*' + t.mono.to_string();
        }
    }
    return out;
}

}  // namespace singlab

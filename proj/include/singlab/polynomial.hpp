#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "singlab/monomial.hpp"
#include "singlab/prime_field.hpp"

namespace singlab {

struct Term {
    Monomial mono;
    Coeff coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial over a prime field. Terms are kept in
/// strictly descending grevlex order with nonzero coefficients, so equal
/// polynomials have identical term vectors.
class Polynomial {
public:
    Polynomial(const PrimeField& field, std::size_t nvars) : field_(field), nvars_(nvars) {
        detail::require(nvars <= kMaxVars, "too many variables");
    }

    static Polynomial constant(const PrimeField& field, std::size_t nvars, Coeff c) {
        Polynomial p(field, nvars);
        c = field.reduce(c);
        if (c != 0) p.terms_.push_back({Monomial(nvars), c});
        return p;
    }

    static Polynomial variable(const PrimeField& field, std::size_t nvars, std::size_t i) {
        detail::require(i < nvars, "variable index out of range");
        return term(field, Monomial::variable(nvars, i), 1);
    }

    static Polynomial term(const PrimeField& field, const Monomial& m, Coeff c) {
        Polynomial p(field, m.nvars());
        c = field.reduce(c);
        if (c != 0) p.terms_.push_back({m, c});
        return p;
    }

    /// Builds from arbitrary terms: combines duplicates, drops zeros, sorts.
    static Polynomial from_terms(const PrimeField& field, std::size_t nvars, std::vector<Term> terms) {
        Polynomial p(field, nvars);
        std::unordered_map<Monomial, Coeff, MonomialHash> acc;
        acc.reserve(terms.size());
        for (auto& t : terms) {
            detail::require(t.mono.nvars() == nvars, "term has wrong number of variables");
            auto [it, inserted] = acc.try_emplace(t.mono, field.reduce(t.coeff));
            if (!inserted) it->second = field.add(it->second, field.reduce(t.coeff));
        }
        p.terms_.reserve(acc.size());
        for (auto& [m, c] : acc) {
            if (c != 0) p.terms_.push_back({m, c});
        }
        p.sort_terms();
        return p;
    }

    [[nodiscard]] const PrimeField& field() const noexcept { return field_; }
    [[nodiscard]] std::size_t nvars() const noexcept { return nvars_; }
    [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }

    [[nodiscard]] bool is_constant() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
    }

    /// Total degree; -1 for the zero polynomial.
    [[nodiscard]] int total_degree() const noexcept {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
        return d;
    }

    [[nodiscard]] bool is_homogeneous(unsigned degree) const noexcept {
        return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono.degree() == degree; });
    }

    /// Homogeneous of some degree (the zero polynomial counts).
    [[nodiscard]] bool is_homogeneous() const noexcept {
        return terms_.empty() || is_homogeneous(terms_.front().mono.degree());
    }

    [[nodiscard]] Coeff coefficient(const Monomial& m) const noexcept {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& key) { return grevlex_cmp(t.mono, key) > 0; });
        if (it != terms_.end() && it->mono == m) return it->coeff;
        return 0;
    }

    [[nodiscard]] Coeff evaluate(std::span<const Coeff> point) const {
        detail::require(point.size() == nvars_, "evaluation point has wrong dimension");
        Coeff acc = 0;
        for (const auto& t : terms_) {
            Coeff v = t.coeff;
            for (std::size_t i = 0; i < nvars_ && v != 0; ++i) {
                if (t.mono[i] != 0) v = field_.mul(v, field_.pow(field_.reduce(point[i]), t.mono[i]));
            }
            acc = field_.add(acc, v);
        }
        return acc;
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& t : r.terms_) t.coeff = field_.neg(t.coeff);
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_compatible(a, b);
        if (a.is_zero() || b.is_zero()) return Polynomial(a.field_, a.nvars_);
        if (b.size() == 1) return a.mul_term(b.terms_[0].mono, b.terms_[0].coeff);
        if (a.size() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coeff);
        std::unordered_map<Monomial, Coeff, MonomialHash> acc;
        acc.reserve(a.size() * b.size());
        const PrimeField& f = a.field_;
        for (const auto& s : a.terms_) {
            for (const auto& t : b.terms_) {
                auto [it, inserted] = acc.try_emplace(s.mono * t.mono, 0);
                it->second = f.add(it->second, f.mul(s.coeff, t.coeff));
            }
        }
        Polynomial r(f, a.nvars_);
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc) {
            if (c != 0) r.terms_.push_back({m, c});
        }
        r.sort_terms();
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    [[nodiscard]] Polynomial scale(Coeff c) const {
        c = field_.reduce(c);
        Polynomial r(field_, nvars_);
        if (c == 0) return r;
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.coeff = field_.mul(t.coeff, c);
        return r;
    }

    /// Multiplication by a single term c * m. Order is preserved by monotonicity.
    [[nodiscard]] Polynomial mul_term(const Monomial& m, Coeff c) const {
        c = field_.reduce(c);
        Polynomial r(field_, nvars_);
        if (c == 0) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field_.mul(t.coeff, c)});
        return r;
    }

    [[nodiscard]] Polynomial pow(unsigned e) const {
        Polynomial result = constant(field_, nvars_, 1);
        Polynomial base = *this;
        while (e != 0) {
            if (e & 1U) result = result * base;
            e >>= 1U;
            if (e != 0) base = base * base;
        }
        return result;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    /// Same polynomial viewed in a ring with more variables; indices are kept.
    [[nodiscard]] Polynomial extend_vars(std::size_t new_nvars) const {
        detail::require(new_nvars >= nvars_, "extend_vars cannot drop variables");
        Polynomial r(field_, new_nvars);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            Monomial m(new_nvars);
            for (std::size_t i = 0; i < nvars_; ++i) m.set(i, t.mono[i]);
            r.terms_.push_back({m, t.coeff});
        }
        r.sort_terms();
        return r;
    }

    /// Substitutes a polynomial for each variable. All images share a ring.
    [[nodiscard]] Polynomial compose(std::span<const Polynomial> images) const {
        detail::require(images.size() == nvars_, "compose needs one image per variable");
        detail::require(!images.empty() || terms_.empty() || nvars_ == 0, "empty substitution");
        const std::size_t target_nvars = images.empty() ? 0 : images[0].nvars();
        Polynomial result(field_, target_nvars);
        std::vector<std::vector<Polynomial>> powers(nvars_);
        auto power_of = [&](std::size_t i, unsigned e) -> const Polynomial& {
            auto& cache = powers[i];
            if (cache.empty()) cache.push_back(constant(field_, target_nvars, 1));
            while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
            return cache[e];
        };
        for (const auto& t : terms_) {
            Polynomial prod = constant(field_, target_nvars, t.coeff);
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (t.mono[i] != 0) prod = prod * power_of(i, t.mono[i]);
            }
            result += prod;
        }
        return result;
    }

    /// Formal partial derivative in characteristic p.
    [[nodiscard]] Polynomial partial_derivative(std::size_t i) const {
        detail::require(i < nvars_, "derivative variable index out of range");
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            const unsigned e = t.mono[i];
            if (e == 0) continue;
            const Coeff c = field_.mul(t.coeff, field_.reduce(e));
            if (c == 0) continue;
            Monomial m = t.mono;
            m.set(i, e - 1);
            out.push_back({m, c});
        }
        Polynomial r(field_, nvars_);
        r.terms_ = std::move(out);
        r.sort_terms();
        return r;
    }

    /// Pads every term with powers of a new variable (inserted at index
    /// `hidden`, default last) up to total degree `degree`.
    [[nodiscard]] Polynomial homogenize_to_degree(unsigned degree, std::optional<std::size_t> hidden = {}) const {
        const std::size_t h = hidden.value_or(nvars_);
        detail::require(h <= nvars_, "homogenization variable index out of range");
        detail::require(total_degree() <= static_cast<int>(degree),
                        "cannot homogenize a polynomial of degree " + std::to_string(total_degree()) +
                            " to degree " + std::to_string(degree));
        Polynomial r(field_, nvars_ + 1);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            Monomial m(nvars_ + 1);
            for (std::size_t i = 0, j = 0; i < nvars_ + 1; ++i) {
                if (i == h) {
                    m.set(i, degree - t.mono.degree());
                } else {
                    m.set(i, t.mono[j++]);
                }
            }
            r.terms_.push_back({m, t.coeff});
        }
        r.sort_terms();
        return r;
    }

    /// Sets x_i := 1 and renumbers the remaining variables in ascending order.
    [[nodiscard]] Polynomial dehomogenize(std::size_t i) const {
        detail::require(i < nvars_, "dehomogenization variable index out of range");
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            Monomial m(nvars_ - 1);
            for (std::size_t k = 0, j = 0; k < nvars_; ++k) {
                if (k != i) m.set(j++, t.mono[k]);
            }
            out.push_back({m, t.coeff});
        }
        return from_terms(field_, nvars_ - 1, std::move(out));
    }

private:
    void sort_terms() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return grevlex_cmp(a.mono, b.mono) > 0; });
    }

    static void check_compatible(const Polynomial& a, const Polynomial& b) {
        if (!(a.field_ == b.field_)) throw ValidationError("polynomials over different fields");
        if (a.nvars_ != b.nvars_) throw ValidationError("polynomials in different numbers of variables");
    }

    static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
        check_compatible(a, b);
        const PrimeField& f = a.field_;
        Polynomial r(f, a.nvars_);
        r.terms_.reserve(a.size() + b.size());
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            int c;
            if (ia == a.terms_.end()) {
                c = -1;
            } else if (ib == b.terms_.end()) {
                c = 1;
            } else {
                c = grevlex_cmp(ia->mono, ib->mono);
            }
            if (c > 0) {
                r.terms_.push_back(*ia++);
            } else if (c < 0) {
                r.terms_.push_back({ib->mono, subtract ? f.neg(ib->coeff) : ib->coeff});
                ++ib;
            } else {
                const Coeff v = subtract ? f.sub(ia->coeff, ib->coeff) : f.add(ia->coeff, ib->coeff);
                if (v != 0) r.terms_.push_back({ia->mono, v});
                ++ia;
                ++ib;
            }
        }
        return r;
    }

    PrimeField field_;
    std::size_t nvars_;
    std::vector<Term> terms_;
};

/// Free-function spellings matching the operation names used in the docs.
inline Polynomial partial_derivative(const Polynomial& f, std::size_t i) { return f.partial_derivative(i); }

inline Polynomial homogenize_to_degree(const Polynomial& f, unsigned degree, std::optional<std::size_t> hidden = {}) {
    return f.homogenize_to_degree(degree, hidden);
}

inline Polynomial dehomogenize(const Polynomial& f, std::size_t i) {
    detail::require(f.is_homogeneous(), "dehomogenize expects a homogeneous polynomial");
    return f.dehomogenize(i);
}

}  // namespace singlab

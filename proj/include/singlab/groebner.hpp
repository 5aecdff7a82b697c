#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "singlab/polynomial.hpp"

namespace singlab {

enum class OrderKind { grevlex, lex, elimination };

/// Term order on monomials in a fixed number of variables. `elimination`
/// is a block order: grevlex on the first `block` variables, ties broken by
/// grevlex on the rest, so every leading term involving the first block
/// dominates every monomial free of it.
class MonomialOrder {
public:
    static MonomialOrder grevlex(std::size_t nvars) { return {OrderKind::grevlex, nvars, 0}; }
    static MonomialOrder lex(std::size_t nvars) { return {OrderKind::lex, nvars, 0}; }
    static MonomialOrder elimination(std::size_t nvars, std::size_t block) {
        detail::require(block <= nvars, "elimination block larger than the variable count");
        return {OrderKind::elimination, nvars, block};
    }

    [[nodiscard]] OrderKind kind() const noexcept { return kind_; }
    [[nodiscard]] std::size_t nvars() const noexcept { return nvars_; }
    [[nodiscard]] std::size_t block() const noexcept { return block_; }

    [[nodiscard]] int cmp(const Monomial& a, const Monomial& b) const noexcept {
        switch (kind_) {
            case OrderKind::grevlex:
                return grevlex_cmp(a, b);
            case OrderKind::lex:
                return lex_cmp(a, b);
            case OrderKind::elimination: {
                int c = range_grevlex(a, b, 0, block_);
                return c != 0 ? c : range_grevlex(a, b, block_, nvars_);
            }
        }
        return 0;
    }

    [[nodiscard]] bool greater(const Monomial& a, const Monomial& b) const noexcept { return cmp(a, b) > 0; }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
    MonomialOrder(OrderKind kind, std::size_t nvars, std::size_t block) : kind_(kind), nvars_(nvars), block_(block) {}

    static int range_grevlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) noexcept {
        unsigned da = 0;
        unsigned db = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t i = hi; i-- > lo;) {
            if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        }
        return 0;
    }

    OrderKind kind_;
    std::size_t nvars_;
    std::size_t block_;
};

namespace detail {

/// Term list sorted descending in some MonomialOrder.
using TermList = std::vector<Term>;

inline TermList sorted_terms(const Polynomial& f, const MonomialOrder& order) {
    TermList t = f.terms();
    if (order.kind() != OrderKind::grevlex) {
        std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
    }
    return t;
}

/// a - c * m * b, all in descending `order`.
inline TermList sub_mul(const TermList& a, std::size_t a_start, const TermList& b, const Monomial& m, Coeff c,
                        const MonomialOrder& order, const PrimeField& field) {
    TermList r;
    r.reserve(a.size() - a_start + b.size());
    std::size_t i = a_start;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size()) {
            r.push_back(a[i++]);
            continue;
        }
        Monomial bm = b[j].mono * m;
        int cmp = i == a.size() ? -1 : order.cmp(a[i].mono, bm);
        if (cmp > 0) {
            r.push_back(a[i++]);
        } else if (cmp < 0) {
            r.push_back({bm, field.neg(field.mul(c, b[j].coeff))});
            ++j;
        } else {
            const Coeff v = field.sub(a[i].coeff, field.mul(c, b[j].coeff));
            if (v != 0) r.push_back({a[i].mono, v});
            ++i;
            ++j;
        }
    }
    return r;
}

inline void make_monic(TermList& f, const PrimeField& field) {
    if (f.empty() || f.front().coeff == 1) return;
    const Coeff inv = field.inv(f.front().coeff);
    for (auto& t : f) t.coeff = field.mul(t.coeff, inv);
}

/// Full reduction of `f` modulo the monic polynomials in `basis` (only the
/// indices in `active` are used).
inline TermList reduce_terms(TermList f, const std::vector<TermList>& basis, std::span<const std::size_t> active,
                             const MonomialOrder& order, const PrimeField& field) {
    TermList rem;
    std::size_t start = 0;
    while (start < f.size()) {
        const Term lead = f[start];
        const TermList* divisor = nullptr;
        for (std::size_t idx : active) {
            const auto& g = basis[idx];
            if (g.front().mono.divides(lead.mono)) {
                divisor = &g;
                break;
            }
        }
        if (divisor == nullptr) {
            rem.push_back(lead);
            ++start;
            continue;
        }
        const Monomial q = lead.mono / divisor->front().mono;
        // The leading terms cancel; sub_mul drops them.
        f = sub_mul(f, start, *divisor, q, lead.coeff, order, field);
        start = 0;
    }
    return rem;
}

}  // namespace detail

/// Reduced Groebner basis of an ideal, with the queries built on it.
class GroebnerBasis {
public:
    GroebnerBasis(const PrimeField& field, std::size_t nvars, MonomialOrder order, std::vector<detail::TermList> gens)
        : field_(field), nvars_(nvars), order_(order), gens_(std::move(gens)) {}

    [[nodiscard]] const PrimeField& field() const noexcept { return field_; }
    [[nodiscard]] std::size_t nvars() const noexcept { return nvars_; }
    [[nodiscard]] const MonomialOrder& order() const noexcept { return order_; }
    [[nodiscard]] std::size_t size() const noexcept { return gens_.size(); }
    [[nodiscard]] bool reduced() const noexcept { return true; }

    [[nodiscard]] bool is_zero_ideal() const noexcept { return gens_.empty(); }
    [[nodiscard]] bool is_unit_ideal() const noexcept {
        return gens_.size() == 1 && gens_[0].size() == 1 && gens_[0][0].mono.is_one();
    }

    [[nodiscard]] std::vector<Polynomial> generators() const {
        std::vector<Polynomial> out;
        out.reserve(gens_.size());
        for (const auto& g : gens_) out.push_back(Polynomial::from_terms(field_, nvars_, g));
        return out;
    }

    [[nodiscard]] std::vector<Monomial> leading_monomials() const {
        std::vector<Monomial> out;
        out.reserve(gens_.size());
        for (const auto& g : gens_) out.push_back(g.front().mono);
        return out;
    }

    [[nodiscard]] const std::vector<detail::TermList>& term_lists() const noexcept { return gens_; }

    [[nodiscard]] Polynomial normal_form(const Polynomial& f) const {
        check(f);
        auto rem = detail::reduce_terms(detail::sorted_terms(f, order_), gens_, all_indices(), order_, field_);
        return Polynomial::from_terms(field_, nvars_, std::move(rem));
    }

    [[nodiscard]] bool contains(const Polynomial& f) const {
        check(f);
        return detail::reduce_terms(detail::sorted_terms(f, order_), gens_, all_indices(), order_, field_).empty();
    }

    /// Number of standard monomials (not in the leading-term ideal) of
    /// exactly the given degree, i.e. dim (S/I)_degree for homogeneous I.
    [[nodiscard]] std::size_t count_standard_monomials(unsigned degree) const {
        const auto lts = leading_monomials();
        std::size_t count = 0;
        for (const auto& m : monomials_of_degree(nvars_, degree)) {
            const bool in_ideal =
                std::any_of(lts.begin(), lts.end(), [&](const Monomial& lt) { return lt.divides(m); });
            if (!in_ideal) ++count;
        }
        return count;
    }

    /// Checks that every S-polynomial reduces to zero.
    [[nodiscard]] bool satisfies_buchberger_criterion() const {
        const auto idx = all_indices();
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            for (std::size_t j = i + 1; j < gens_.size(); ++j) {
                const auto& f = gens_[i];
                const auto& g = gens_[j];
                const Monomial l = lcm(f.front().mono, g.front().mono);
                auto s = multiply(f, l / f.front().mono);
                s = detail::sub_mul(s, 0, g, l / g.front().mono, 1, order_, field_);
                if (!detail::reduce_terms(std::move(s), gens_, idx, order_, field_).empty()) return false;
            }
        }
        return true;
    }

    /// Leading coefficients are one and no term of any generator is
    /// divisible by another generator's leading term.
    [[nodiscard]] bool is_reduced() const {
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (gens_[i].empty() || gens_[i].front().coeff != 1) return false;
            for (std::size_t j = 0; j < gens_.size(); ++j) {
                if (i == j) continue;
                for (const auto& t : gens_[i]) {
                    if (gens_[j].front().mono.divides(t.mono)) return false;
                }
            }
        }
        return true;
    }

private:
    [[nodiscard]] std::vector<std::size_t> all_indices() const {
        std::vector<std::size_t> idx(gens_.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        return idx;
    }

    [[nodiscard]] detail::TermList multiply(const detail::TermList& f, const Monomial& m) const {
        detail::TermList r = f;
        for (auto& t : r) t.mono = t.mono * m;
        return r;
    }

    void check(const Polynomial& f) const {
        detail::require(f.nvars() == nvars_ && f.field() == field_, "polynomial does not belong to the basis ring");
    }

    PrimeField field_;
    std::size_t nvars_;
    MonomialOrder order_;
    std::vector<detail::TermList> gens_;
};

namespace detail {

struct CriticalPair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
};

/// Buchberger driver with the Gebauer-Moeller installation of new elements.
class BuchbergerEngine {
public:
    BuchbergerEngine(const PrimeField& field, std::size_t nvars, MonomialOrder order)
        : field_(field), nvars_(nvars), order_(order) {}

    void add_generator(TermList f) {
        make_monic(f, field_);
        f = reduce_terms(std::move(f), polys_, active_, order_, field_);
        if (f.empty()) return;
        make_monic(f, field_);
        install(std::move(f));
    }

    void run() {
        while (!pairs_.empty()) {
            // Normal selection strategy: smallest lcm first.
            std::size_t best = 0;
            for (std::size_t k = 1; k < pairs_.size(); ++k) {
                if (order_.greater(pairs_[best].lcm, pairs_[k].lcm)) best = k;
            }
            const CriticalPair pair = pairs_[best];
            pairs_[best] = pairs_.back();
            pairs_.pop_back();

            const auto& f = polys_[pair.i];
            const auto& g = polys_[pair.j];
            TermList s = f;
            const Monomial mf = pair.lcm / f.front().mono;
            for (auto& t : s) t.mono = t.mono * mf;
            s = sub_mul(s, 0, g, pair.lcm / g.front().mono, 1, order_, field_);
            s = reduce_terms(std::move(s), polys_, active_, order_, field_);
            if (s.empty()) continue;
            make_monic(s, field_);
            install(std::move(s));
            if (is_unit()) {
                pairs_.clear();
                break;
            }
        }
    }

    GroebnerBasis finish() {
        std::vector<TermList> basis;
        if (is_unit()) {
            basis.push_back({Term{Monomial(nvars_), 1}});
            return {field_, nvars_, order_, std::move(basis)};
        }
        // Active elements form a minimal basis; interreduce tails.
        std::vector<TermList> minimal;
        for (std::size_t idx : active_) minimal.push_back(polys_[idx]);
        std::vector<std::size_t> all(minimal.size());
        for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
        for (std::size_t k = 0; k < minimal.size(); ++k) {
            TermList head{minimal[k].front()};
            TermList tail(minimal[k].begin() + 1, minimal[k].end());
            std::vector<std::size_t> others;
            for (std::size_t o : all) {
                if (o != k) others.push_back(o);
            }
            TermList reduced_tail = reduce_terms(std::move(tail), minimal, others, order_, field_);
            head.insert(head.end(), reduced_tail.begin(), reduced_tail.end());
            minimal[k] = std::move(head);
        }
        std::sort(minimal.begin(), minimal.end(),
                  [&](const TermList& a, const TermList& b) { return order_.greater(a.front().mono, b.front().mono); });
        return {field_, nvars_, order_, std::move(minimal)};
    }

private:
    [[nodiscard]] bool is_unit() const {
        return std::any_of(active_.begin(), active_.end(),
                           [&](std::size_t idx) { return polys_[idx].front().mono.is_one(); });
    }

    void install(TermList h) {
        const std::size_t hi = polys_.size();
        const Monomial lth = h.front().mono;
        polys_.push_back(std::move(h));

        // Pairs (g, h) for active g, pruned by the chain and product criteria.
        std::vector<CriticalPair> candidates;
        for (std::size_t g : active_) candidates.push_back({g, hi, lcm(polys_[g].front().mono, lth)});
        std::vector<CriticalPair> kept;
        for (std::size_t a = 0; a < candidates.size(); ++a) {
            const auto& c = candidates[a];
            const Monomial& ltg = polys_[c.i].front().mono;
            if (coprime(ltg, lth)) {
                kept.push_back(c);
                continue;
            }
            bool dominated = false;
            for (std::size_t b = 0; b < candidates.size() && !dominated; ++b) {
                if (b == a) continue;
                const auto& o = candidates[b];
                if (!o.lcm.divides(c.lcm)) continue;
                // Among pairs with equal lcm keep the first one.
                if (o.lcm == c.lcm && b > a) continue;
                dominated = true;
            }
            if (!dominated) kept.push_back(c);
        }
        std::vector<CriticalPair> fresh;
        for (const auto& c : kept) {
            if (!coprime(polys_[c.i].front().mono, lth)) fresh.push_back(c);
        }

        // Drop old pairs that the new leading term makes redundant.
        std::vector<CriticalPair> survivors;
        survivors.reserve(pairs_.size() + fresh.size());
        for (const auto& p : pairs_) {
            const bool redundant = lth.divides(p.lcm) && lcm(polys_[p.i].front().mono, lth) != p.lcm &&
                                   lcm(polys_[p.j].front().mono, lth) != p.lcm;
            if (!redundant) survivors.push_back(p);
        }
        survivors.insert(survivors.end(), fresh.begin(), fresh.end());
        pairs_ = std::move(survivors);

        std::vector<std::size_t> next_active;
        for (std::size_t g : active_) {
            if (!lth.divides(polys_[g].front().mono)) next_active.push_back(g);
        }
        next_active.push_back(hi);
        active_ = std::move(next_active);
    }

    PrimeField field_;
    std::size_t nvars_;
    MonomialOrder order_;
    std::vector<TermList> polys_;
    std::vector<std::size_t> active_;
    std::vector<CriticalPair> pairs_;
};

}  // namespace detail

/// Reduced Groebner basis of the ideal generated by `gens`. An empty list
/// (or a list of zeros) gives the zero ideal.
inline GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order) {
    detail::require(!gens.empty(), "cannot infer the field of an empty generator list");
    const PrimeField& field = gens[0].field();
    const std::size_t nvars = gens[0].nvars();
    detail::require(order.nvars() == nvars, "monomial order and polynomials disagree on the variable count");
    for (const auto& g : gens) {
        detail::require(g.field() == field, "generators over different fields");
        detail::require(g.nvars() == nvars, "generators in different numbers of variables");
    }
    detail::BuchbergerEngine engine(field, nvars, order);
    for (const auto& g : gens) {
        if (!g.is_zero()) engine.add_generator(detail::sorted_terms(g, order));
    }
    engine.run();
    return engine.finish();
}

inline GroebnerBasis buchberger(std::span<const Polynomial> gens) {
    detail::require(!gens.empty(), "cannot infer the ring of an empty generator list");
    return buchberger(gens, MonomialOrder::grevlex(gens[0].nvars()));
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) { return gb.normal_form(f); }

inline bool ideal_membership(const Polynomial& f, const GroebnerBasis& gb) { return gb.contains(f); }

/// Krull dimension of k[x]/I: the largest set S of variables such that no
/// leading monomial is supported inside S. -1 for the unit ideal.
inline int affine_dimension(const GroebnerBasis& gb) {
    const std::size_t n = gb.nvars();
    std::vector<std::uint32_t> supports;
    for (const auto& m : gb.leading_monomials()) supports.push_back(m.support());
    int best = -1;
    const std::uint32_t full = n == 32 ? ~0U : ((1U << n) - 1U);
    for (std::uint32_t s = 0;; ++s) {
        const int size = std::popcount(s);
        if (size > best) {
            const bool independent =
                std::none_of(supports.begin(), supports.end(), [&](std::uint32_t sup) { return (sup & ~s) == 0; });
            if (independent) best = size;
        }
        if (s == full) break;
    }
    return best;
}

/// Hilbert series of k[x_0..x_{n-1}]/M for a monomial ideal M, stored as
/// numerator N(t) over (1-t)^n.
class HilbertSeries {
public:
    HilbertSeries(std::vector<std::int64_t> numerator, std::size_t nvars)
        : numerator_(std::move(numerator)), nvars_(nvars) {
        trim(numerator_);
    }

    [[nodiscard]] const std::vector<std::int64_t>& numerator() const noexcept { return numerator_; }
    [[nodiscard]] std::size_t nvars() const noexcept { return nvars_; }

    /// Cancels factors of (1-t): returns (Q, pole order) with Q(1) != 0.
    /// The zero series gives ({}, -1).
    [[nodiscard]] std::pair<std::vector<std::int64_t>, int> reduced() const {
        std::vector<std::int64_t> q = numerator_;
        int pole = static_cast<int>(nvars_);
        if (q.empty()) return {q, -1};
        while (pole > 0 && eval_at_one(q) == 0) {
            // Synthetic division by (1 - t) = -(t - 1).
            std::vector<std::int64_t> quotient(q.size() - 1, 0);
            std::int64_t carry = 0;
            for (std::size_t i = q.size() - 1; i > 0; --i) {
                carry += q[i];
                quotient[i - 1] = -carry;
            }
            q = std::move(quotient);
            trim(q);
            --pole;
        }
        return {q, pole};
    }

    [[nodiscard]] int dimension() const { return reduced().second; }

    /// Q(1) after cancellation: the multiplicity of the top-dimensional part.
    [[nodiscard]] std::int64_t degree() const {
        auto [q, pole] = reduced();
        return pole < 0 ? 0 : eval_at_one(q);
    }

    /// Value of the Hilbert function at k (coefficient of t^k).
    [[nodiscard]] std::int64_t hilbert_function(unsigned k) const {
        std::int64_t total = 0;
        for (std::size_t i = 0; i < numerator_.size() && i <= k; ++i) {
            if (numerator_[i] == 0) continue;
            total += numerator_[i] * multichoose(nvars_, k - static_cast<unsigned>(i));
        }
        return total;
    }

    static std::int64_t eval_at_one(const std::vector<std::int64_t>& p) {
        std::int64_t s = 0;
        for (auto c : p) s += c;
        return s;
    }

private:
    static void trim(std::vector<std::int64_t>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    }

    /// Number of monomials of degree k in n variables.
    static std::int64_t multichoose(std::size_t n, unsigned k) {
        if (n == 0) return k == 0 ? 1 : 0;
        std::int64_t r = 1;
        for (unsigned i = 1; i <= k; ++i) r = r * static_cast<std::int64_t>(n - 1 + i) / i;
        return r;
    }

    std::vector<std::int64_t> numerator_;
    std::size_t nvars_;
};

namespace detail {

inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
    std::vector<Monomial> out;
    for (const auto& g : gens) {
        if (std::none_of(out.begin(), out.end(), [&](const Monomial& o) { return o.divides(g); })) out.push_back(g);
    }
    return out;
}

inline std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::int64_t> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

/// Numerator of the Hilbert series of S/(gens) for a monomial ideal,
/// via pivoting: N(M) = N(M + (p)) + t^deg(p) N(M : p).
inline std::vector<std::int64_t> hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return {1};
    for (const auto& g : gens) {
        if (g.is_one()) return {};
    }
    bool pairwise_coprime = true;
    std::uint32_t seen = 0;
    for (const auto& g : gens) {
        if (g.support() & seen) {
            pairwise_coprime = false;
            break;
        }
        seen |= g.support();
    }
    if (pairwise_coprime) {
        std::vector<std::int64_t> r{1};
        for (const auto& g : gens) {
            std::vector<std::int64_t> factor(g.degree() + 1, 0);
            factor[0] = 1;
            factor[g.degree()] -= 1;
            r = poly_mul(r, factor);
        }
        return r;
    }
    // Pivot on the variable occurring in the most generators.
    std::size_t var = 0;
    std::size_t best_count = 0;
    for (std::size_t v = 0; v < nvars; ++v) {
        std::size_t count = 0;
        for (const auto& g : gens) count += g[v] != 0;
        if (count > best_count) {
            best_count = count;
            var = v;
        }
    }
    // Only mixed generators: a pure power of var dividing the pivot would
    // put the pivot inside the ideal and stall the recursion.
    std::vector<unsigned> exps;
    for (const auto& g : gens) {
        if (g[var] != 0 && g.degree() != g[var]) exps.push_back(g[var]);
    }
    std::nth_element(exps.begin(), exps.begin() + static_cast<std::ptrdiff_t>(exps.size() / 2), exps.end());
    const unsigned e = std::max(1U, exps[exps.size() / 2]);
    const Monomial pivot = Monomial::variable(nvars, var, e);

    std::vector<Monomial> with_pivot = gens;
    with_pivot.push_back(pivot);
    std::vector<Monomial> quotient;
    quotient.reserve(gens.size());
    for (const auto& g : gens) quotient.push_back(colon(g, pivot));

    auto a = hilbert_numerator(std::move(with_pivot), nvars);
    auto b = hilbert_numerator(std::move(quotient), nvars);
    std::vector<std::int64_t> r(std::max(a.size(), b.size() + e), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i + e] += b[i];
    return r;
}

}  // namespace detail

inline HilbertSeries hilbert_series(std::span<const Monomial> monomial_gens, std::size_t nvars) {
    return {detail::hilbert_numerator({monomial_gens.begin(), monomial_gens.end()}, nvars), nvars};
}

inline HilbertSeries hilbert_series(const GroebnerBasis& gb) {
    const auto lts = gb.leading_monomials();
    return hilbert_series(lts, gb.nvars());
}

struct DimensionDegree {
    int affine_dim = -1;
    int projective_dim = -1;
    std::int64_t degree = 0;

    friend bool operator==(const DimensionDegree&, const DimensionDegree&) = default;
};

inline DimensionDegree dimension_degree(const GroebnerBasis& gb) {
    DimensionDegree out;
    const auto hs = hilbert_series(gb);
    auto [q, pole] = hs.reduced();
    out.affine_dim = pole;
    out.projective_dim = std::max(-1, pole - 1);
    out.degree = out.projective_dim >= 0 ? HilbertSeries::eval_at_one(q) : 0;
    return out;
}

/// Projective dimension and top-dimensional degree of V(gens) in P^{n}.
inline DimensionDegree projective_dimension_degree(std::span<const Polynomial> gens) {
    detail::require(!gens.empty(), "empty generator list");
    for (const auto& g : gens) {
        detail::require(g.is_homogeneous(), "projective_dimension_degree needs homogeneous generators");
    }
    return dimension_degree(buchberger(gens));
}

/// {F, dF/dx_0, ..., dF/dx_n}, zero derivatives included.
inline std::vector<Polynomial> singular_locus_ideal(const Polynomial& f) {
    detail::require(!f.is_zero(), "the singular locus is only defined for F != 0");
    detail::require(f.is_homogeneous() && f.total_degree() >= 1,
                    "singular locus needs a homogeneous polynomial of degree >= 1");
    std::vector<Polynomial> gens;
    gens.reserve(f.nvars() + 1);
    gens.push_back(f);
    for (std::size_t i = 0; i < f.nvars(); ++i) gens.push_back(f.partial_derivative(i));
    return gens;
}

inline DimensionDegree sing_dim_deg(const Polynomial& f) {
    const auto gens = singular_locus_ideal(f);
    return projective_dimension_degree(gens);
}

/// I cap J by eliminating t from t*I + (1-t)*J. Result is reduced grevlex.
inline GroebnerBasis ideal_intersection(std::span<const Polynomial> a, std::span<const Polynomial> b) {
    detail::require(!a.empty() && !b.empty(), "intersection needs nonempty generator lists");
    const PrimeField& field = a[0].field();
    const std::size_t n = a[0].nvars();
    detail::require(n + 1 <= kMaxVars, "too many variables for an elimination");
    // t becomes variable 0; x_i becomes variable i+1.
    auto shift = [&](const Polynomial& f) {
        std::vector<Term> terms;
        for (const auto& t : f.terms()) {
            Monomial m(n + 1);
            for (std::size_t i = 0; i < n; ++i) m.set(i + 1, t.mono[i]);
            terms.push_back({m, t.coeff});
        }
        return Polynomial::from_terms(field, n + 1, std::move(terms));
    };
    const Polynomial t = Polynomial::variable(field, n + 1, 0);
    const Polynomial one_minus_t = Polynomial::constant(field, n + 1, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : a) gens.push_back(t * shift(f));
    for (const auto& g : b) gens.push_back(one_minus_t * shift(g));
    const auto gb = buchberger(gens, MonomialOrder::elimination(n + 1, 1));
    std::vector<Polynomial> eliminated;
    for (const auto& g : gb.generators()) {
        bool has_t = std::any_of(g.terms().begin(), g.terms().end(), [](const Term& tt) { return tt.mono[0] != 0; });
        if (has_t) continue;
        std::vector<Term> terms;
        for (const auto& tt : g.terms()) {
            Monomial m(n);
            for (std::size_t i = 0; i < n; ++i) m.set(i, tt.mono[i + 1]);
            terms.push_back({m, tt.coeff});
        }
        eliminated.push_back(Polynomial::from_terms(field, n, std::move(terms)));
    }
    if (eliminated.empty()) return {field, n, MonomialOrder::grevlex(n), {}};
    return buchberger(eliminated, MonomialOrder::grevlex(n));
}

}  // namespace singlab

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "singlab/bounds.hpp"
#include "singlab/graded.hpp"
#include "singlab/groebner.hpp"

namespace singlab {

/// F = F0 + sum_{i<n} G_i^p x_i in the affine chart x_n = 1, and its
/// homogenization to degree l in n+1 variables.
struct SmartSample {
    Polynomial F0;
    std::vector<Polynomial> Gs;
    Polynomial F;
    Polynomial F_hom;
};

inline SmartSample smart_construct(const Polynomial& F0, const std::vector<Polynomial>& Gs, unsigned p, unsigned l) {
    const PrimeField& field = F0.field();
    const std::size_t n = F0.nvars();
    detail::require(field.characteristic() == p, "the construction needs q = p (prime fields only)");
    detail::require(n >= 1, "at least one affine variable required");
    detail::require(Gs.size() == n, "exactly n polynomials G_i required");
    detail::require(l >= 1, "l ≥ 1 required");
    detail::require(F0.total_degree() <= static_cast<int>(l), "deg F0 exceeds l");
    const auto t = static_cast<int>(tau(l, p));
    Polynomial F = F0;
    std::vector<Polynomial> powers;
    for (std::size_t i = 0; i < n; ++i) {
        detail::require(Gs[i].nvars() == n && Gs[i].field() == field, "G_i lives in the wrong ring");
        detail::require(Gs[i].total_degree() <= t, "deg G_" + std::to_string(i) + " exceeds tau = " + std::to_string(t));
        powers.push_back(Gs[i].pow(p));
        F += powers.back() * Polynomial::variable(field, n, i);
    }
    SmartSample s{F0, Gs, F, F.homogenize_to_degree(l)};
    for (std::size_t i = 0; i < n; ++i) {
        const Polynomial dF = F.partial_derivative(i);
        detail::ensure(dF == F0.partial_derivative(i) + powers[i], "derivative identity failed");
        detail::ensure(s.F_hom.partial_derivative(i) == dF.homogenize_to_degree(l - 1),
                       "homogenization does not commute with the derivative");
    }
    return s;
}

/// F0 uniform in degree <= l, each G_i uniform in degree <= tau.
inline SmartSample sample_smart(const PrimeField& field, std::size_t n, unsigned l, Rng& rng) {
    const unsigned p = static_cast<unsigned>(field.characteristic());
    const auto t = static_cast<unsigned>(tau(l, p));
    const auto f0_space = GradedSpace::at_most(field, n, l);
    const auto g_space = GradedSpace::at_most(field, n, t);
    Polynomial F0 = f0_space.sample(rng);
    std::vector<Polynomial> Gs;
    for (std::size_t i = 0; i < n; ++i) Gs.push_back(g_space.sample(rng));
    return smart_construct(F0, Gs, p, l);
}

struct UniformityReport {
    std::uint64_t pairs = 0;
    std::uint64_t image_size = 0;
    std::uint64_t target_size = 0;
    std::uint64_t min_fiber = 0;
    std::uint64_t max_fiber = 0;
    bool uniform = false;
    bool surjective = false;
};

/// Exhaustive fiber count of (F0, G_0..G_{n-1}) -> F over a tiny case.
inline UniformityReport uniformity_of_smart(std::size_t n, unsigned l, unsigned p, unsigned q,
                                            std::uint64_t cap = kDefaultEnumerationCap) {
    detail::require(q == p, "the construction needs q = p (prime fields only)");
    const PrimeField field(q);
    const auto t = static_cast<unsigned>(tau(l, p));
    const auto f0_space = GradedSpace::at_most(field, n, l);
    const auto g_space = GradedSpace::at_most(field, n, t);
    const auto f0_count = f0_space.cardinality();
    const auto g_count = g_space.cardinality();
    std::optional<std::uint64_t> total = f0_count;
    for (std::size_t i = 0; i < n; ++i) {
        if (!total || !g_count || *total > UINT64_MAX / *g_count) {
            total.reset();
            break;
        }
        *total *= *g_count;
    }
    check_cap(total, cap, "fiber enumeration");
    std::unordered_map<std::uint64_t, std::uint64_t> fibers;
    std::vector<std::uint64_t> gidx(n, 0);
    std::vector<Polynomial> gpow;
    for (std::uint64_t gi = 0; gi < *g_count; ++gi) gpow.push_back(g_space.element(gi).pow(p));
    UniformityReport r;
    r.target_size = *f0_count;
    for (;;) {
        Polynomial shift(field, n);
        for (std::size_t i = 0; i < n; ++i) shift += gpow[gidx[i]] * Polynomial::variable(field, n, i);
        for (std::uint64_t fi = 0; fi < *f0_count; ++fi) {
            ++fibers[f0_space.index(f0_space.element(fi) + shift)];
            ++r.pairs;
        }
        std::size_t k = 0;
        while (k < n && ++gidx[k] == *g_count) gidx[k++] = 0;
        if (k == n) break;
    }
    r.image_size = fibers.size();
    r.min_fiber = UINT64_MAX;
    for (const auto& [idx, count] : fibers) {
        r.min_fiber = std::min(r.min_fiber, count);
        r.max_fiber = std::max(r.max_fiber, count);
    }
    r.uniform = r.min_fiber == r.max_fiber;
    r.surjective = r.image_size == r.target_size;
    return r;
}

/// The two computable proxies for the good event. bullet1[i] is exact: the
/// locus of i+1 derivatives in the chart x_n = 1 has every component of
/// dimension >= n-i-1, so the bound is equidimensionality. bullet2_strong
/// asks the last adjoined derivative to cut everything down to dim <= b-1,
/// which is stronger than the degree-d condition it stands in for.
struct EnProxy {
    std::vector<int> chart_dims;  // affine dimension after the first i+1 derivatives
    std::vector<bool> bullet1_per_i;
    bool bullet1 = false;
    int bullet2_dim = -1;
    bool bullet2_strong = false;
};

inline EnProxy event_En_proxy(const SmartSample& s, std::size_t n, std::size_t b) {
    detail::require(s.F_hom.nvars() == n + 1, "sample has the wrong number of variables");
    detail::require(b >= 1 && b + 1 <= n, "1 ≤ b ≤ n−1 required");
    std::vector<Polynomial> chart;
    for (std::size_t i = 0; i <= n; ++i) {
        const Polynomial d = s.F_hom.partial_derivative(i);
        chart.push_back(d.dehomogenize(n));
    }
    EnProxy e;
    e.bullet1 = true;
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i + b < n; ++i) {
        gens.push_back(chart[i]);
        const int dim = affine_dimension(buchberger(gens));
        e.chart_dims.push_back(dim);
        const bool ok = dim <= static_cast<int>(n - i - 1);
        e.bullet1_per_i.push_back(ok);
        e.bullet1 = e.bullet1 && ok;
    }
    gens.push_back(chart[n - 1]);
    e.bullet2_dim = affine_dimension(buchberger(gens));
    e.bullet2_strong = e.bullet2_dim <= static_cast<int>(b) - 1;
    return e;
}

}  // namespace singlab

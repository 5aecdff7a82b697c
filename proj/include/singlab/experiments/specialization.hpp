#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "singlab/bounds.hpp"
#include "singlab/graded.hpp"
#include "singlab/groebner.hpp"
#include "singlab/linalg.hpp"
#include "singlab/poly_io.hpp"
#include "singlab/random.hpp"

namespace singlab {

/// A union of d b-planes in P^n through a common (b-1)-plane. Each plane is
/// stored by its n-b linear generators. Configurations built from points
/// use the normal form L_i = V(x_j - p_j x_0 : j > b), through the common
/// plane V(x_0, x_{b+1}, ..., x_n), and keep the points for the fast path.
class LinearConfig {
public:
    static LinearConfig from_points(const PrimeField& field, std::size_t n, std::size_t b,
                                    std::vector<std::vector<Coeff>> points) {
        check_nb(n, b);
        detail::require(!points.empty(), "a configuration needs at least one plane");
        std::set<std::vector<Coeff>> seen;
        for (auto& pt : points) {
            detail::require(pt.size() == n - b, "each point needs n-b coordinates");
            for (auto& c : pt) c = field.reduce(c);
            detail::require(seen.insert(pt).second, "planes must be pairwise distinct");
        }
        LinearConfig cfg(field, n, b);
        for (const auto& pt : points) {
            std::vector<Polynomial> gens;
            for (std::size_t j = 0; j < n - b; ++j) {
                auto g = Polynomial::variable(field, n + 1, b + 1 + j);
                g -= Polynomial::variable(field, n + 1, 0).scale(pt[j]);
                gens.push_back(std::move(g));
            }
            cfg.planes_.push_back(std::move(gens));
        }
        cfg.points_ = std::move(points);
        return cfg;
    }

    /// Planes given by explicit homogeneous linear generators.
    static LinearConfig from_planes(const PrimeField& field, std::size_t n, std::size_t b,
                                    std::vector<std::vector<Polynomial>> planes) {
        check_nb(n, b);
        detail::require(!planes.empty(), "a configuration needs at least one plane");
        LinearConfig cfg(field, n, b);
        std::set<std::vector<Coeff>> seen;
        std::vector<std::vector<Coeff>> all_rows;
        for (auto& gens : planes) {
            Matrix m = coefficient_matrix(field, n, gens);
            detail::require(m.rank() == n - b, "each plane needs n-b independent linear generators");
            Matrix canon = m;
            const auto piv = canon.rref();
            std::vector<Coeff> key;
            for (std::size_t r = 0; r < piv.size(); ++r) {
                for (std::size_t c = 0; c <= n; ++c) key.push_back(canon(r, c));
            }
            detail::require(seen.insert(key).second, "planes must be pairwise distinct");
            for (std::size_t r = 0; r < m.rows(); ++r) {
                all_rows.emplace_back(m.row(r).begin(), m.row(r).end());
            }
            cfg.planes_.push_back(std::move(gens));
        }
        Matrix all(field, all_rows.size(), n + 1);
        for (std::size_t r = 0; r < all_rows.size(); ++r) {
            for (std::size_t c = 0; c <= n; ++c) all(r, c) = all_rows[r][c];
        }
        detail::require(all.rank() <= n - b + 1, "planes must share a common (b-1)-plane");
        return cfg;
    }

    /// d distinct normal-form points drawn uniformly. With include_base the
    /// plane V(x_{b+1}, ..., x_n) (the zero tuple) is always present.
    static LinearConfig random(const PrimeField& field, std::size_t n, std::size_t b, std::size_t d, Rng& rng,
                               bool include_base = false) {
        check_nb(n, b);
        detail::require(d >= 1, "d ≥ 1 required");
        const auto total = point_count(field, n - b);
        detail::require(!total || d <= *total, "d exceeds the number of distinct planes over this field");
        std::set<std::vector<Coeff>> seen;
        std::vector<std::vector<Coeff>> points;
        if (include_base) {
            points.emplace_back(n - b, 0);
            seen.insert(points.back());
        }
        while (points.size() < d) {
            std::vector<Coeff> pt(n - b);
            for (auto& c : pt) c = rng.below(field.characteristic());
            if (seen.insert(pt).second) points.push_back(std::move(pt));
        }
        return from_points(field, n, b, std::move(points));
    }

    [[nodiscard]] const PrimeField& field() const noexcept { return field_; }
    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] std::size_t b() const noexcept { return b_; }
    [[nodiscard]] std::size_t size() const noexcept { return planes_.size(); }
    [[nodiscard]] const std::vector<std::vector<Polynomial>>& planes() const noexcept { return planes_; }
    [[nodiscard]] bool is_normal_form() const noexcept { return !points_.empty(); }
    [[nodiscard]] const std::vector<std::vector<Coeff>>& points() const noexcept { return points_; }

    static Matrix coefficient_matrix(const PrimeField& field, std::size_t n, const std::vector<Polynomial>& gens) {
        Matrix m(field, gens.size(), n + 1);
        for (std::size_t r = 0; r < gens.size(); ++r) {
            detail::require(gens[r].nvars() == n + 1 && gens[r].field() == field, "plane generator in the wrong ring");
            detail::require(!gens[r].is_zero() && gens[r].is_homogeneous(1), "plane generators must be linear forms");
            for (const auto& t : gens[r].terms()) {
                for (std::size_t c = 0; c <= n; ++c) {
                    if (t.mono[c] != 0) m(r, c) = t.coeff;
                }
            }
        }
        return m;
    }

    /// q^k, or nullopt on overflow.
    static std::optional<std::uint64_t> point_count(const PrimeField& field, std::size_t k) {
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < k; ++i) {
            if (total > UINT64_MAX / field.characteristic()) return std::nullopt;
            total *= field.characteristic();
        }
        return total;
    }

private:
    LinearConfig(const PrimeField& field, std::size_t n, std::size_t b) : field_(field), n_(n), b_(b) {}

    static void check_nb(std::size_t n, std::size_t b) {
        detail::require(n >= 2 && n + 1 <= kMaxVars, "n out of range");
        detail::require(b >= 1 && b + 1 <= n, "1 ≤ b ≤ n−1 required");
    }

    PrimeField field_;
    std::size_t n_;
    std::size_t b_;
    std::vector<std::vector<Polynomial>> planes_;
    std::vector<std::vector<Coeff>> points_;
};

struct SpecializationReport {
    unsigned l = 0;
    std::size_t d = 0;
    std::size_t dim_S_l = 0;
    std::vector<std::size_t> mu_sequence;  // mu_m = dim (S / I_1 cap ... cap I_m)_l
    std::size_t codim = 0;
    BigInt bound;  // A_b(l, min(d, l+1))
    std::vector<Monomial> vanishing_monomials;  // monomials of S_l vanishing on every plane
    std::vector<Polynomial> vanishing_basis;    // basis of the degree-l part of the intersection, on request
};

enum class CodimRoute { automatic, substitution, groebner };

namespace detail {

inline void finish_report(SpecializationReport& r, const LinearConfig& cfg) {
    r.d = cfg.size();
    r.codim = r.mu_sequence.back();
    r.bound = A_b(r.l, std::min<std::int64_t>(static_cast<std::int64_t>(r.d), r.l + 1),
                  static_cast<std::int64_t>(cfg.b()));
}

/// Normal-form fast path. Substituting x_j = p_j x_0 (j > b) sends x^alpha
/// to p^tail * x_0^(alpha_0 + |tail|) x_1^alpha_1 ... x_b^alpha_b, so the
/// system splits into blocks indexed by the image monomial; the block with
/// x_0-exponent e evaluates the monomials of degree <= e in n-b variables at
/// the points, and there are C(l-e+b-1, b-1) such blocks.
inline std::vector<std::size_t> mu_normal_form(const LinearConfig& cfg, unsigned l) {
    const PrimeField& f = cfg.field();
    const std::size_t k = cfg.n() - cfg.b();
    const std::size_t b = cfg.b();
    std::vector<std::size_t> mu(cfg.size(), 0);
    for (unsigned e = 0; e <= l; ++e) {
        const auto mult = binomial(l - e + b - 1, static_cast<std::int64_t>(b) - 1).get_ui();
        const auto tails = monomials_up_to_degree(k, e);
        IncrementalRowSpace space(f, tails.size());
        for (std::size_t i = 0; i < cfg.size(); ++i) {
            const auto& pt = cfg.points()[i];
            std::vector<Coeff> row(tails.size());
            for (std::size_t c = 0; c < tails.size(); ++c) {
                Coeff v = 1;
                for (std::size_t j = 0; j < k && v != 0; ++j) {
                    if (tails[c][j] != 0) v = f.mul(v, f.pow(pt[j], tails[c][j]));
                }
                row[c] = v;
            }
            space.insert(std::move(row));
            mu[i] += mult * space.rank();
        }
    }
    return mu;
}

/// Basis of the plane as b+1 vectors in k^{n+1}.
inline std::vector<std::vector<Coeff>> plane_parametrization(const LinearConfig& cfg, std::size_t i) {
    return LinearConfig::coefficient_matrix(cfg.field(), cfg.n(), cfg.planes()[i]).kernel();
}

/// Generic substitution: G restricted to each plane must vanish as a form in
/// b+1 parameters. Returns the stacked row space, with ranks per plane.
inline IncrementalRowSpace substitution_rows(const LinearConfig& cfg, unsigned l, const GradedSpace& space,
                                             std::vector<std::size_t>& mu) {
    const PrimeField& f = cfg.field();
    const std::size_t n = cfg.n();
    const std::size_t npar = cfg.b() + 1;
    const auto targets = GradedSpace::forms(f, npar, l);
    IncrementalRowSpace rows(f, space.dimension());
    for (std::size_t i = 0; i < cfg.size(); ++i) {
        const auto basis = plane_parametrization(cfg, i);
        detail::ensure(basis.size() == npar, "plane has the wrong dimension");
        // powers[j][e] = (sum_k basis[k][j] t_k)^e
        std::vector<std::vector<Polynomial>> powers(n + 1);
        for (std::size_t j = 0; j <= n; ++j) {
            Polynomial lin(f, npar);
            for (std::size_t kk = 0; kk < npar; ++kk) {
                lin += Polynomial::term(f, Monomial::variable(npar, kk), basis[kk][j]);
            }
            powers[j].push_back(Polynomial::constant(f, npar, 1));
            for (unsigned e = 1; e <= l; ++e) powers[j].push_back(powers[j].back() * lin);
        }
        Matrix block(f, targets.dimension(), space.dimension());
        for (std::size_t c = 0; c < space.dimension(); ++c) {
            const auto& alpha = space.basis()[c];
            Polynomial img = Polynomial::constant(f, npar, 1);
            for (std::size_t j = 0; j <= n && !img.is_zero(); ++j) {
                if (alpha[j] != 0) img = img * powers[j][alpha[j]];
            }
            for (const auto& t : img.terms()) block(*targets.index_of(t.mono), c) = t.coeff;
        }
        for (std::size_t r = 0; r < block.rows(); ++r) rows.insert({block.row(r).begin(), block.row(r).end()});
        mu.push_back(rows.rank());
    }
    return rows;
}

inline std::vector<Monomial> vanishing_monomials(const LinearConfig& cfg, const GradedSpace& space) {
    // A monomial vanishes on a plane iff it involves a coordinate that is
    // identically zero there, i.e. a unit vector lying in the generators' span.
    std::vector<std::vector<bool>> zero_coord(cfg.size(), std::vector<bool>(cfg.n() + 1, false));
    for (std::size_t i = 0; i < cfg.size(); ++i) {
        const auto basis = plane_parametrization(cfg, i);
        for (std::size_t j = 0; j <= cfg.n(); ++j) {
            zero_coord[i][j] = std::all_of(basis.begin(), basis.end(), [&](const auto& v) { return v[j] == 0; });
        }
    }
    std::vector<Monomial> out;
    for (const auto& m : space.basis()) {
        bool all = true;
        for (std::size_t i = 0; i < cfg.size() && all; ++i) {
            bool hit = false;
            for (std::size_t j = 0; j <= cfg.n(); ++j) hit = hit || (m[j] != 0 && zero_coord[i][j]);
            all = hit;
        }
        if (all) out.push_back(m);
    }
    return out;
}

}  // namespace detail

/// Codimension in S_l of the forms vanishing on every plane of the
/// configuration, with the incremental sequence mu_1..mu_d.
inline SpecializationReport union_vanishing_codim(const LinearConfig& cfg, unsigned l,
                                                  CodimRoute route = CodimRoute::automatic,
                                                  bool want_basis = false) {
    detail::require(l >= 1, "l ≥ 1 required");
    const auto space = GradedSpace::forms(cfg.field(), cfg.n() + 1, l);
    SpecializationReport r;
    r.l = l;
    r.dim_S_l = space.dimension();
    if (route == CodimRoute::groebner) {
        GroebnerBasis gb = buchberger(cfg.planes()[0]);
        r.mu_sequence.push_back(gb.count_standard_monomials(l));
        for (std::size_t i = 1; i < cfg.size(); ++i) {
            gb = ideal_intersection(gb.generators(), cfg.planes()[i]);
            r.mu_sequence.push_back(gb.count_standard_monomials(l));
        }
    } else if (route == CodimRoute::automatic && cfg.is_normal_form() && !want_basis) {
        r.mu_sequence = detail::mu_normal_form(cfg, l);
    } else {
        auto rows = detail::substitution_rows(cfg, l, space, r.mu_sequence);
        if (want_basis) {
            for (const auto& v : rows.orthogonal_complement()) r.vanishing_basis.push_back(space.from_coefficients(v));
        }
    }
    r.vanishing_monomials = detail::vanishing_monomials(cfg, space);
    detail::finish_report(r, cfg);
    return r;
}

/// mu_m - mu_{m-1} for m = 2..d.
inline std::vector<std::size_t> mu_increments(const SpecializationReport& r) {
    std::vector<std::size_t> out;
    for (std::size_t m = 1; m < r.mu_sequence.size(); ++m) out.push_back(r.mu_sequence[m] - r.mu_sequence[m - 1]);
    return out;
}

}  // namespace singlab

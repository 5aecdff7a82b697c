#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "singlab/bounds.hpp"
#include "singlab/graded.hpp"
#include "singlab/groebner.hpp"

namespace singlab {

struct DhCount {
    std::uint64_t count_lhs = 0;  // #{G : Z in V((F0 + G^p)~)}
    std::uint64_t count_rhs = 0;  // #{G' : Z in V((G')~)}
    std::uint64_t space_size = 0;
    bool dichotomy = false;       // count_lhs is 0 or count_rhs
};

/// Exhaustive count over G of degree <= tau in x_0..x_{n-1}. Z is given by
/// homogeneous generators in n+1 variables and is assumed prime; membership
/// of the homogenized polynomial in its ideal decides Z in V(.). The first
/// homogenization goes to `hom_degree` (default max(deg F0, p*tau)).
inline DhCount dh_counting(const Polynomial& F0, std::span<const Polynomial> z_gens, unsigned tau_value,
                           std::optional<unsigned> hom_degree = {}, std::uint64_t cap = kDefaultEnumerationCap) {
    const PrimeField& field = F0.field();
    const std::size_t n = F0.nvars();
    const auto p = static_cast<unsigned>(field.characteristic());
    detail::require(!z_gens.empty(), "Z needs at least one generator");
    for (const auto& g : z_gens) {
        detail::require(g.nvars() == n + 1 && g.field() == field, "Z generators must live in n+1 variables");
        detail::require(g.is_homogeneous(), "Z generators must be homogeneous");
    }
    const GroebnerBasis gb = buchberger(z_gens);
    detail::require(!gb.contains(Polynomial::variable(field, n + 1, n)), "Z must not lie in the hyperplane V(x_n)");
    const unsigned top = std::max<unsigned>(static_cast<unsigned>(std::max(F0.total_degree(), 0)), p * tau_value);
    const unsigned lhs_degree = hom_degree.value_or(top);
    detail::require(lhs_degree >= top, "homogenization degree below deg(F0 + G^p)");

    const auto space = GradedSpace::at_most(field, n, tau_value);
    const auto size = space.cardinality();
    check_cap(size, cap, "G enumeration");
    DhCount r;
    r.space_size = *size;
    for (std::uint64_t i = 0; i < *size; ++i) {
        const Polynomial G = space.element(i);
        if (gb.contains((F0 + G.pow(p)).homogenize_to_degree(lhs_degree))) ++r.count_lhs;
        if (gb.contains(G.homogenize_to_degree(tau_value))) ++r.count_rhs;
    }
    r.dichotomy = r.count_lhs == 0 || r.count_lhs == r.count_rhs;
    return r;
}

}  // namespace singlab

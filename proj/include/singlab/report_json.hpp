#pragma once

#include <json.hpp>

#include <climits>
#include <string>

#include "singlab/bounds.hpp"
#include "singlab/experiments/census.hpp"
#include "singlab/experiments/counting.hpp"
#include "singlab/experiments/smart.hpp"
#include "singlab/experiments/specialization.hpp"
#include "singlab/experiments/witness.hpp"
#include "singlab/groebner.hpp"
#include "singlab/poly_io.hpp"

namespace singlab {

using Json = nlohmann::ordered_json;

/// Integers that fit in int64 stay numbers; larger ones become decimal strings.
inline Json big_json(const BigInt& v) {
    if (v.fits_slong_p() && sizeof(long) == 8) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

/// Exact fractions as a pair of decimal strings.
inline Json rational_json(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return Json{{"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}};
}

inline Json matrix_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json to_json(const DimensionDegree& d) {
    return Json{{"affine_dim", d.affine_dim}, {"projective_dim", d.projective_dim}, {"degree", d.degree}};
}

inline Json to_json(const L0Result& r) {
    return Json{{"large_d_l0", r.l0}, {"window", r.window}, {"probes", r.probes}};
}

inline Json to_json(const NoneffectiveParams& p) {
    return Json{{"B", big_json(p.B)},
                {"m", big_json(p.m)},
                {"lhs", rational_json(p.lhs)},
                {"rhs", rational_json(p.rhs)},
                {"dominates", p.dominates}};
}

inline Json to_json(const BoundsReport& r) {
    Json A = Json::object();
    for (const auto& [m, v] : r.A_table) A[std::to_string(m)] = big_json(v);
    Json Al = Json::object();
    for (const auto& [m, v] : r.A_table_l) Al[std::to_string(m)] = big_json(v);
    return Json{{"n", r.n},
                {"b", r.b},
                {"l", r.l},
                {"p", r.p},
                {"q", r.q},
                {"tau", r.tau},
                {"m", r.m},
                {"m_prime", r.m_prime},
                {"a_nb", big_json(r.a_nb)},
                {"dim_X1", big_json(r.dim_X1)},
                {"A_table", A},
                {"A_table_l", Al},
                {"bezout", big_json(r.bezout)},
                {"prob_En_lower", rational_json(r.prob_En_lower)},
                {"hypothesis_ok", r.hypothesis_ok},
                {"notes", r.notes}};
}

inline Json to_json(const CensusRecord& r) {
    return Json{{"seed", r.seed},         {"trial", r.trial},       {"q", r.q},
                {"n", r.n},               {"b", r.b},               {"l", r.l},
                {"sing_dim", r.sing_dim}, {"sing_deg", r.sing_deg}, {"elapsed_ms", r.elapsed_ms}};
}

inline Json to_json(const CensusSummary& s) {
    Json hist = Json::object();
    for (const auto& [dim, count] : s.histogram) hist[std::to_string(dim)] = count;
    return Json{{"trials", s.trials},
                {"histogram", hist},
                {"count_ge_b", s.count_ge_b},
                {"prob_ge_b", rational_json(s.prob_ge_b)}};
}

inline Json to_json(const SquarefreeReport& r) {
    Json by_d = Json::object();
    for (const auto& [d, c] : r.image_by_d) by_d[std::to_string(d)] = c;
    return Json{{"pairs", r.pairs},
                {"image_size", r.image_size},
                {"image_by_d", by_d},
                {"max_fiber", r.max_fiber},
                {"member_violations", r.member_violations},
                {"checked", r.checked},
                {"in_image", r.in_image},
                {"sing_dim_ge_n_minus_1", r.sing_ge},
                {"exceptions", r.exceptions}};
}

inline Json to_json(const SpecializationReport& r) {
    Json mons = Json::array();
    for (const auto& m : r.vanishing_monomials) mons.push_back(m.to_string());
    return Json{{"l", r.l},
                {"d", r.d},
                {"dim_S_l", r.dim_S_l},
                {"mu_sequence", r.mu_sequence},
                {"mu_increments", mu_increments(r)},
                {"codim", r.codim},
                {"bound", big_json(r.bound)},
                {"bound_holds", BigInt(static_cast<unsigned long>(r.codim)) >= r.bound},
                {"vanishing_monomials", mons}};
}

inline Json to_json(const DhCount& r) {
    return Json{{"count_lhs", r.count_lhs},
                {"count_rhs", r.count_rhs},
                {"space_size", r.space_size},
                {"dichotomy", r.dichotomy},
                {"lhs_le_rhs", r.count_lhs <= r.count_rhs}};
}

inline Json to_json(const WitnessReport& r) {
    return Json{{"char_case", r.char_case == CharCase::two ? "two" : "odd"},
                {"F", format_poly(r.F)},
                {"J", matrix_json(r.J)},
                {"rank", r.rank},
                {"minor", matrix_json(r.minor)},
                {"minor_det", r.minor_det},
                {"tangent_dim", r.tangent_dim},
                {"in_W", r.in_W}};
}

inline Json to_json(const DegreeAudit& a) {
    return Json{{"sing_dim", a.sing_dim}, {"sing_deg", a.sing_deg}, {"bound", big_json(a.bound)}, {"ok", a.ok}};
}

inline Json to_json(const UniformityReport& r) {
    return Json{{"pairs", r.pairs},           {"image_size", r.image_size}, {"target_size", r.target_size},
                {"min_fiber", r.min_fiber},   {"max_fiber", r.max_fiber},   {"uniform", r.uniform},
                {"surjective", r.surjective}};
}

}  // namespace singlab

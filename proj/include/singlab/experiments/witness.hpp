#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "singlab/bounds.hpp"
#include "singlab/groebner.hpp"
#include "singlab/linalg.hpp"

namespace singlab {

enum class CharCase { odd, two };

struct WitnessReport {
    CharCase char_case = CharCase::odd;
    Polynomial F;
    Matrix J;               // (n+2) x (n+1): gradient row, then the Hessian
    std::size_t rank = 0;
    Matrix minor;           // Hessian block on x_{b+1}..x_n
    Coeff minor_det = 0;
    std::size_t tangent_dim = 0;  // n - rank
    bool in_W = false;
};

namespace detail {

inline Matrix jacobian_at(const Polynomial& F, std::span<const Coeff> P) {
    const std::size_t N = F.nvars();
    Matrix J(F.field(), N + 1, N);
    for (std::size_t j = 0; j < N; ++j) {
        const Polynomial dj = F.partial_derivative(j);
        J(0, j) = dj.evaluate(P);
        for (std::size_t i = 0; i < N; ++i) J(i + 1, j) = dj.partial_derivative(i).evaluate(P);
    }
    return J;
}

inline bool depends_only_on_prefix(const Polynomial& f, std::size_t k) {
    for (const auto& t : f.terms()) {
        for (std::size_t i = k; i < f.nvars(); ++i) {
            if (t.mono[i] != 0) return false;
        }
    }
    return true;
}

}  // namespace detail

/// Explicit hypersurface singular along a b-dimensional cone over V(f),
/// with the rank of J(P) certified by its bottom-right (n-b)x(n-b) minor.
/// f is homogeneous of degree d in x_0..x_{b+1} (stored in n+1 variables).
inline WitnessReport jacobian_witness(std::size_t n, std::size_t b, unsigned l, unsigned d, const Polynomial& f,
                                      std::span<const Coeff> P) {
    validate_nb(static_cast<std::int64_t>(n), static_cast<std::int64_t>(b));
    const PrimeField& field = f.field();
    const std::size_t N = n + 1;
    detail::require(f.nvars() == N, "f must live in n+1 variables");
    detail::require(P.size() == N, "P must have n+1 coordinates");
    for (Coeff c : P) detail::require(c < field.characteristic(), "coordinates of P must be reduced mod p");
    detail::require(l >= 2 && d >= 1 && l >= 2 * d, "l ≥ 2d required");
    detail::require(!f.is_zero() && f.is_homogeneous(d), "f must be homogeneous of degree d");
    detail::require(detail::depends_only_on_prefix(f, b + 2), "f may only involve x_0..x_{b+1}");

    const Polynomial x0 = Polynomial::variable(field, N, 0);
    auto x = [&](std::size_t i) { return Polynomial::variable(field, N, i); };
    Polynomial F(field, N);
    CharCase cc = CharCase::odd;
    if (field.characteristic() == 2) {
        cc = CharCase::two;
        detail::require((n - b) % 2 == 0, "char 2 needs n−b even");
        detail::require(d == 1, "char 2 needs f linear");
        detail::require(f.terms().size() == 1 && f.terms().front().mono == x(b + 1).terms().front().mono,
                        "char 2 needs f a multiple of x_{b+1}");
        detail::require(P[0] == 1, "char 2 needs P = [1,0,...,0]");
        for (std::size_t i = 1; i < N; ++i) detail::require(P[i] == 0, "char 2 needs P = [1,0,...,0]");
        for (std::size_t i = 1; 2 * i <= n - b; ++i) {
            F += x(b + 2 * i - 1) * x(b + 2 * i) * x0.pow(l - 2);
        }
    } else {
        std::size_t nonzero = 0;
        for (Coeff c : P) nonzero += c != 0;
        detail::require(nonzero >= 2, "P needs at least two nonzero coordinates");
        detail::require(P[0] != 0, "P needs p_0 ≠ 0");
        for (std::size_t i = b + 2; i < N; ++i) detail::require(P[i] == 0, "P needs p_{b+2} = … = p_n = 0");
        detail::require(f.evaluate(P) == 0, "P must lie on V(f)");
        detail::require(f.partial_derivative(b + 1).evaluate(P) != 0, "needs ∂f/∂x_{b+1}(P) ≠ 0");
        F = x0.pow(l - 2 * d) * f.pow(2);
        for (std::size_t i = b + 2; i < N; ++i) F += x0.pow(l - 2) * x(i).pow(2);
    }

    WitnessReport r{cc, F, detail::jacobian_at(F, P), 0, Matrix(field, n - b, n - b), 0, 0, false};
    r.rank = r.J.rank();
    r.minor = r.J.submatrix(r.J.rows() - (n - b), b + 1, n - b, n - b);
    r.minor_det = r.minor.determinant();
    r.tangent_dim = n - r.rank;

    std::vector<Polynomial> lin{f};
    for (std::size_t i = b + 2; i < N; ++i) lin.push_back(x(i));
    std::vector<Polynomial> square;
    for (std::size_t i = 0; i < lin.size(); ++i) {
        for (std::size_t j = i; j < lin.size(); ++j) square.push_back(lin[i] * lin[j]);
    }
    r.in_W = F.is_homogeneous(l) && buchberger(square).contains(F);

    detail::ensure(r.minor_det != 0, "witness minor vanished");
    detail::ensure(r.rank >= n - b, "witness rank below n−b");
    return r;
}

struct DegreeAudit {
    int sing_dim = -1;
    std::int64_t sing_deg = 0;
    BigInt bound;
    bool ok = false;
};

/// Necessary condition: the top-dimensional degree of V(F)_sing is at most
/// l(l-1)^{n+1}. Vacuous when the locus is empty.
inline DegreeAudit degree_bound_audit(const Polynomial& F, std::size_t n, unsigned l) {
    detail::require(!F.is_zero(), "F must be nonzero");
    detail::require(F.nvars() == n + 1, "F must live in n+1 variables");
    detail::require(F.is_homogeneous(l), "F must be homogeneous of degree l");
    const auto dd = sing_dim_deg(F);
    DegreeAudit a{dd.projective_dim, dd.degree, bezout_bound(static_cast<std::int64_t>(n), l), false};
    a.ok = dd.projective_dim < 0 || BigInt(dd.degree) <= a.bound;
    return a;
}

}  // namespace singlab

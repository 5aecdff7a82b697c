#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "singlab/error.hpp"
#include "singlab/prime_field.hpp"

namespace singlab {

using BigInt = mpz_class;
using Rational = mpq_class;

/// C(n, k); zero outside 0 <= k <= n.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
    BigInt r;
    if (n < 0 || k < 0 || k > n) return r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline void validate_nb(std::int64_t n, std::int64_t b) {
    detail::require(n >= 3, "n ≥ 3 required");
    detail::require(b >= 1 && b <= n - 1, "1 ≤ b ≤ n−1 required");
}

inline void validate_prime(std::int64_t p, const char* name = "p") {
    detail::require(p >= 2 && is_prime(static_cast<std::uint64_t>(p)), std::string(name) + " must be prime");
}

/// Codimension of the locus of degree-l hypersurfaces singular along some
/// b-plane. Negative for a few l = 1 cases, hence signed.
inline BigInt a_nb(std::int64_t n, std::int64_t b, std::int64_t l) {
    validate_nb(n, b);
    detail::require(l >= 1, "l ≥ 1 required");
    return binomial(l + b, b) + (n - b) * binomial(l - 1 + b, b) + 1 - (b + 1) * (n - b);
}

inline BigInt dim_X1(std::int64_t n, std::int64_t b, std::int64_t l) {
    return binomial(l + n, n) - a_nb(n, b, l);
}

/// Sum over e = 1..m of C(l-e+1+b, b).
inline BigInt A_b(std::int64_t l, std::int64_t m, std::int64_t b) {
    detail::require(b >= 1, "b ≥ 1 required");
    detail::require(l >= 0, "l ≥ 0 required");
    detail::require(m >= 1 && m <= l + 1, "1 ≤ m ≤ l+1 required");
    BigInt total;
    for (std::int64_t e = 1; e <= m; ++e) total += binomial(l - e + 1 + b, b);
    return total;
}

inline std::int64_t tau(std::int64_t l, std::int64_t p) {
    detail::require(l >= 1, "l ≥ 1 required");
    validate_prime(p);
    return (l - 1) / p;
}

inline std::int64_t m_of(std::int64_t l) {
    detail::require(l >= 1, "l ≥ 1 required");
    return (l + 2) / 2;
}

inline std::int64_t m_prime(std::int64_t l, std::int64_t p) { return std::min(m_of(l), tau(l, p) + 1); }

inline BigInt bezout_bound(std::int64_t n, std::int64_t l) {
    detail::require(n >= 1, "n ≥ 1 required");
    detail::require(l >= 2, "l ≥ 2 required");
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(l - 1), static_cast<unsigned long>(n + 1));
    return r * l;
}

/// Both strict inequalities of the large-degree hypothesis, with
/// tau = tau(l, p) and m' = min(m, tau + 1).
inline bool check_hypothesis(std::int64_t l, std::int64_t m, const BigInt& a, std::int64_t p, std::int64_t b) {
    detail::require(m >= 1, "m ≥ 1 required");
    detail::require(b >= 1, "b ≥ 1 required");
    const std::int64_t t = tau(l, p);
    const std::int64_t mp = std::min(m, t + 1);
    const BigInt rhs = a - 1;
    return binomial(t + b + 1, b + 1) > rhs && A_b(t, mp, b) > rhs;
}

inline constexpr std::int64_t kDefaultL0Window = 50;
inline constexpr std::int64_t kDefaultL0Ceiling = 10000;

struct L0Result {
    std::int64_t l0 = 0;
    std::int64_t window = 0;
    std::int64_t probes = 0;
};

namespace detail {

inline bool hypothesis_at(std::int64_t n, std::int64_t b, std::int64_t p, std::int64_t l, int slack) {
    const std::int64_t t = tau(l, p);
    const std::int64_t mp = std::min(m_of(l), t + 1);
    const BigInt rhs = slack * a_nb(n, b, l);
    return binomial(t + b + 1, b + 1) > rhs && A_b(t, mp, b) > rhs;
}

}  // namespace detail

/// Smallest l >= 2 such that the hypothesis holds on [l, l + window].
/// The left sides have degree b+1 in l against degree b on the right, so
/// doubling l should at least double the margin: the hypothesis must also
/// hold with twice the right-hand side at 2(l + window).
inline L0Result find_l0(std::int64_t n, std::int64_t b, std::int64_t p, std::int64_t window = kDefaultL0Window,
                        std::int64_t ceiling = kDefaultL0Ceiling) {
    validate_nb(n, b);
    validate_prime(p);
    detail::require(window >= 1, "window ≥ 1 required");
    std::vector<char> ok;  // ok[l] for l probed so far
    auto holds = [&](std::int64_t l) {
        if (static_cast<std::int64_t>(ok.size()) <= l) ok.resize(static_cast<std::size_t>(l) + 1, -1);
        auto& slot = ok[static_cast<std::size_t>(l)];
        if (slot < 0) slot = check_hypothesis(l, m_of(l), a_nb(n, b, l) + 1, p, b) ? 1 : 0;
        return slot == 1;
    };
    std::int64_t probes = 0;
    std::int64_t l = 2;
    while (l <= ceiling) {
        std::int64_t bad = -1;
        for (std::int64_t k = l; k <= l + window; ++k) {
            ++probes;
            if (!holds(k)) bad = k;
        }
        if (bad >= 0) {
            l = bad + 1;
            continue;
        }
        if (!detail::hypothesis_at(n, b, p, 2 * (l + window), 2)) {
            ++l;
            continue;
        }
        for (std::int64_t k = l; k <= l + window; ++k) {
            detail::ensure(check_hypothesis(k, m_of(k), a_nb(n, b, k) + 1, p, b), "find_l0 post-check failed");
        }
        return {l, window, probes};
    }
    throw ValidationError("no l0 found below the ceiling " + std::to_string(ceiling));
}

/// The subtracted fractions of the product bound, in factor order: n-b
/// terms (l-1)^i / q^C(tau+b+1, b+1), then (l-1)^(n-b) / q^A_b(tau, m').
inline constexpr std::uint64_t kMaxProbBits = std::uint64_t{1} << 24;

inline std::vector<Rational> prob_En_epsilons(std::int64_t n, std::int64_t b, std::int64_t l, std::int64_t p,
                                              std::int64_t q) {
    validate_nb(n, b);
    detail::require(l >= 2, "l ≥ 2 required");
    validate_prime(q, "q");
    const std::int64_t t = tau(l, p);
    const std::int64_t mp = std::min(m_of(l), t + 1);
    const BigInt e1 = binomial(t + b + 1, b + 1);
    const BigInt e2 = A_b(t, mp, b);
    const std::uint64_t qbits = static_cast<std::uint64_t>(mpz_sizeinbase(BigInt(q).get_mpz_t(), 2));
    for (const BigInt* e : {&e1, &e2}) {
        if (!e->fits_ulong_p() || e->get_ui() > kMaxProbBits / qbits) {
            throw CapExceeded("q^" + e->get_str() + " exceeds the exact-rational size cap; use smaller l");
        }
    }
    auto qpow = [&](const BigInt& e) {
        BigInt r;
        mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(q), e.get_ui());
        return r;
    };
    auto lpow = [&](std::int64_t i) {
        BigInt r;
        mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(l - 1), static_cast<unsigned long>(i));
        return r;
    };
    std::vector<Rational> eps;
    const BigInt d1 = qpow(e1);
    for (std::int64_t i = 0; i < n - b; ++i) {
        Rational r(lpow(i), d1);
        r.canonicalize();
        eps.push_back(r);
    }
    Rational last(lpow(n - b), qpow(e2));
    last.canonicalize();
    eps.push_back(last);
    return eps;
}

inline Rational prob_En_lower(std::int64_t n, std::int64_t b, std::int64_t l, std::int64_t p, std::int64_t q) {
    Rational prod = 1;
    for (const auto& e : prob_En_epsilons(n, b, l, p, q)) prod *= 1 - e;
    return prod;
}

inline BigInt dim_im_phi(std::int64_t n, std::int64_t d, std::int64_t l) {
    detail::require(n >= 1, "n ≥ 1 required");
    detail::require(d >= 1 && 2 * d <= l, "1 ≤ d ≤ ⌊l/2⌋ required");
    return binomial(d + n, n) + binomial(l - 2 * d + n, n) - 2;
}

struct NoneffectiveParams {
    BigInt B;
    BigInt m;
    Rational lhs;  // m / (p^b b!)
    Rational rhs;  // (n-b+1) / b!
    bool dominates = false;
};

inline NoneffectiveParams noneffective_params(std::int64_t n, std::int64_t b, std::int64_t p) {
    validate_nb(n, b);
    validate_prime(p);
    NoneffectiveParams out;
    BigInt pb;
    mpz_ui_pow_ui(pb.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(b));
    BigInt fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(b));
    out.B = pb * (n - b + 1);
    out.m = out.B + 1;
    out.lhs = Rational(out.m, pb * fact);
    out.lhs.canonicalize();
    out.rhs = Rational(BigInt(n - b + 1), fact);
    out.rhs.canonicalize();
    out.dominates = out.lhs > out.rhs;
    return out;
}

/// Growth check for A_b(l, l+1): the first ceil((l+1)/2) summands are each
/// at least C(floor(l/2)+b, b), so their sum is at least (l+1)/2 times it.
inline bool growth_bound_holds(std::int64_t l, std::int64_t b) {
    detail::require(l >= 1 && b >= 1, "l ≥ 1 and b ≥ 1 required");
    const std::int64_t kept = (l + 2) / 2;
    const BigInt partial = A_b(l, kept, b);
    const BigInt floor_term = binomial(l / 2 + b, b);
    return 2 * partial >= (l + 1) * floor_term && A_b(l, l + 1, b) >= partial;
}

/// Advisory for p = 2 and n-b odd: the uniqueness argument needs p = 3 there.
inline std::optional<std::string> l0_parity_advisory(std::int64_t n, std::int64_t b, std::int64_t p) {
    if (p == 2 && (n - b) % 2 == 1) {
        return std::string("n-b is odd: with p = 2 this l0 only shows X1 is a component of maximal dimension; "
                           "uniqueness uses l0(n,b,3)");
    }
    return std::nullopt;
}

struct BoundsReport {
    std::int64_t n = 0, b = 0, l = 0, p = 0, q = 0;
    std::int64_t tau = 0, m = 0, m_prime = 0;
    BigInt a_nb, dim_X1;
    std::map<std::int64_t, BigInt> A_table;    // m -> A_b(tau, m), m = 1..tau+1
    std::map<std::int64_t, BigInt> A_table_l;  // m -> A_b(l, m), m = 1..l+1
    BigInt bezout;
    Rational prob_En_lower;
    bool hypothesis_ok = false;
    std::vector<std::string> notes;
};

inline BoundsReport bounds_report(std::int64_t n, std::int64_t b, std::int64_t l, std::int64_t p, std::int64_t q) {
    validate_nb(n, b);
    detail::require(l >= 2, "l ≥ 2 required");
    validate_prime(p);
    validate_prime(q, "q");
    BoundsReport r;
    r.n = n;
    r.b = b;
    r.l = l;
    r.p = p;
    r.q = q;
    r.tau = tau(l, p);
    r.m = m_of(l);
    r.m_prime = std::min(r.m, r.tau + 1);
    r.a_nb = a_nb(n, b, l);
    r.dim_X1 = dim_X1(n, b, l);
    for (std::int64_t k = 1; k <= r.tau + 1; ++k) r.A_table[k] = A_b(r.tau, k, b);
    for (std::int64_t k = 1; k <= l + 1; ++k) r.A_table_l[k] = A_b(l, k, b);
    r.bezout = bezout_bound(n, l);
    r.prob_En_lower = prob_En_lower(n, b, l, p, q);
    r.hypothesis_ok = check_hypothesis(l, r.m, r.a_nb + 1, p, b);
    if (auto note = l0_parity_advisory(n, b, p)) r.notes.push_back(*note);
    return r;
}

}  // namespace singlab

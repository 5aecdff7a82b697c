#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "singlab/error.hpp"

namespace singlab {

/// Upper bound on the number of variables a monomial can carry.
inline constexpr std::size_t kMaxVars = 12;

using Exponent = std::uint16_t;

/// Exponent vector with inline storage. Unused slots are kept at zero so that
/// comparisons and hashing can treat the whole array uniformly.
class Monomial {
public:
    Monomial() = default;

    explicit Monomial(std::size_t nvars) : nvars_(check_nvars(nvars)) {}

    Monomial(std::initializer_list<unsigned> exps) : nvars_(check_nvars(exps.size())) {
        std::size_t i = 0;
        for (unsigned e : exps) set(i++, e);
    }

    static Monomial from_span(std::span<const unsigned> exps) {
        Monomial m(exps.size());
        for (std::size_t i = 0; i < exps.size(); ++i) m.set(i, exps[i]);
        return m;
    }

    static Monomial variable(std::size_t nvars, std::size_t i, unsigned power = 1) {
        Monomial m(nvars);
        m.set(i, power);
        return m;
    }

    [[nodiscard]] std::size_t nvars() const noexcept { return nvars_; }
    [[nodiscard]] unsigned degree() const noexcept { return degree_; }
    [[nodiscard]] unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }
    [[nodiscard]] bool is_one() const noexcept { return degree_ == 0; }

    void set(std::size_t i, unsigned e) {
        detail::require(i < nvars_, "variable index out of range");
        detail::require(e <= 0xFFFF, "exponent overflow");
        degree_ = degree_ - exps_[i] + e;
        exps_[i] = static_cast<Exponent>(e);
    }

    /// Support as a bitmask over variable indices.
    [[nodiscard]] std::uint32_t support() const noexcept {
        std::uint32_t mask = 0;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (exps_[i] != 0) mask |= (std::uint32_t{1} << i);
        }
        return mask;
    }

    [[nodiscard]] bool divides(const Monomial& other) const noexcept {
        if (degree_ > other.degree_) return false;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (exps_[i] > other.exps_[i]) return false;
        }
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) noexcept {
        Monomial r(a);
        for (std::size_t i = 0; i < a.nvars_; ++i) r.exps_[i] = static_cast<Exponent>(a.exps_[i] + b.exps_[i]);
        r.degree_ = a.degree_ + b.degree_;
        return r;
    }

    /// a / b; caller guarantees b divides a.
    friend Monomial operator/(const Monomial& a, const Monomial& b) noexcept {
        Monomial r(a);
        for (std::size_t i = 0; i < a.nvars_; ++i) r.exps_[i] = static_cast<Exponent>(a.exps_[i] - b.exps_[i]);
        r.degree_ = a.degree_ - b.degree_;
        return r;
    }

    [[nodiscard]] Monomial pow(unsigned k) const {
        Monomial r(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) r.set(i, exps_[i] * k);
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
        Monomial r(a.nvars_);
        unsigned deg = 0;
        for (std::size_t i = 0; i < a.nvars_; ++i) {
            r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
            deg += r.exps_[i];
        }
        r.degree_ = deg;
        return r;
    }

    /// Monomial quotient a : b, i.e. a / gcd(a, b).
    friend Monomial colon(const Monomial& a, const Monomial& b) noexcept {
        Monomial r(a.nvars_);
        unsigned deg = 0;
        for (std::size_t i = 0; i < a.nvars_; ++i) {
            r.exps_[i] = a.exps_[i] > b.exps_[i] ? static_cast<Exponent>(a.exps_[i] - b.exps_[i]) : Exponent{0};
            deg += r.exps_[i];
        }
        r.degree_ = deg;
        return r;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) noexcept { return (a.support() & b.support()) == 0; }

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
        return a.nvars_ == b.nvars_ && a.exps_ == b.exps_;
    }

    /// Graded reverse lexicographic comparison; returns <0, 0, >0.
    friend int grevlex_cmp(const Monomial& a, const Monomial& b) noexcept {
        if (a.degree_ != b.degree_) return a.degree_ < b.degree_ ? -1 : 1;
        for (std::size_t i = a.nvars_; i-- > 0;) {
            if (a.exps_[i] != b.exps_[i]) return a.exps_[i] > b.exps_[i] ? -1 : 1;
        }
        return 0;
    }

    friend int lex_cmp(const Monomial& a, const Monomial& b) noexcept {
        for (std::size_t i = 0; i < a.nvars_; ++i) {
            if (a.exps_[i] != b.exps_[i]) return a.exps_[i] < b.exps_[i] ? -1 : 1;
        }
        return 0;
    }

    [[nodiscard]] std::size_t hash() const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (std::size_t i = 0; i < nvars_; ++i) {
            h ^= exps_[i];
            h *= 1099511628211ULL;
        }
        return h;
    }

    [[nodiscard]] std::string to_string() const {
        if (degree_ == 0) return "1";
        std::string s;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (exps_[i] == 0) continue;
            if (!s.empty()) s += '*';
            s += 'x' + std::to_string(i);
            if (exps_[i] > 1) s += '^' + std::to_string(exps_[i]);
        }
        return s;
    }

private:
    static std::size_t check_nvars(std::size_t n) {
        detail::require(n <= kMaxVars, "at most " + std::to_string(kMaxVars) + " variables are supported");
        return n;
    }

    std::array<Exponent, kMaxVars> exps_{};
    std::uint16_t nvars_ = 0;
    unsigned degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// All monomials of total degree exactly `degree` in `nvars` variables,
/// in descending grevlex order.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (degree == 0) out.emplace_back(0);
        return out;
    }
    std::vector<unsigned> exps(nvars, 0);
    // Enumerate compositions of `degree` into nvars parts.
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i + 1 == nvars) {
            exps[i] = left;
            out.push_back(Monomial::from_span(exps));
            return;
        }
        for (unsigned e = 0; e <= left; ++e) {
            exps[i] = e;
            rec(i + 1, left - e);
        }
        exps[i] = 0;
    };
    rec(0, degree);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grevlex_cmp(a, b) > 0; });
    return out;
}

/// All monomials of total degree at most `degree`, descending grevlex.
inline std::vector<Monomial> monomials_up_to_degree(std::size_t nvars, unsigned degree) {
    std::vector<Monomial> out;
    for (unsigned d = degree + 1; d-- > 0;) {
        auto part = monomials_of_degree(nvars, d);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace singlab

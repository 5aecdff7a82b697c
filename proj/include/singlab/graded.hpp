#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "singlab/polynomial.hpp"
#include "singlab/random.hpp"

namespace singlab {

enum class GradedMode { homogeneous, at_most };

/// Either S_l (forms of degree exactly l) or the space of polynomials of
/// total degree at most l. Over n+1 resp. n variables the two have the same
/// basis size C(l+n, n), matched by homogenize_to_degree.
class GradedSpace {
public:
    GradedSpace(const PrimeField& field, std::size_t nvars, unsigned degree, GradedMode mode)
        : field_(field), nvars_(nvars), degree_(degree), mode_(mode),
          basis_(mode == GradedMode::homogeneous ? monomials_of_degree(nvars, degree)
                                                 : monomials_up_to_degree(nvars, degree)) {
        index_.reserve(basis_.size());
        for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
    }

    static GradedSpace forms(const PrimeField& field, std::size_t nvars, unsigned degree) {
        return {field, nvars, degree, GradedMode::homogeneous};
    }
    static GradedSpace at_most(const PrimeField& field, std::size_t nvars, unsigned degree) {
        return {field, nvars, degree, GradedMode::at_most};
    }

    [[nodiscard]] const PrimeField& field() const noexcept { return field_; }
    [[nodiscard]] std::size_t nvars() const noexcept { return nvars_; }
    [[nodiscard]] unsigned degree() const noexcept { return degree_; }
    [[nodiscard]] GradedMode mode() const noexcept { return mode_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return basis_.size(); }
    [[nodiscard]] const std::vector<Monomial>& basis() const noexcept { return basis_; }

    [[nodiscard]] std::optional<std::size_t> index_of(const Monomial& m) const {
        auto it = index_.find(m);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    [[nodiscard]] bool contains(const Polynomial& f) const {
        if (f.nvars() != nvars_ || !(f.field() == field_)) return false;
        for (const auto& t : f.terms()) {
            if (!index_.contains(t.mono)) return false;
        }
        return true;
    }

    [[nodiscard]] Polynomial from_coefficients(std::span<const Coeff> coeffs) const {
        detail::require(coeffs.size() == basis_.size(), "coefficient vector has wrong length");
        std::vector<Term> terms;
        terms.reserve(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            const Coeff c = field_.reduce(coeffs[i]);
            if (c != 0) terms.push_back({basis_[i], c});
        }
        return Polynomial::from_terms(field_, nvars_, std::move(terms));
    }

    [[nodiscard]] std::vector<Coeff> coefficients(const Polynomial& f) const {
        std::vector<Coeff> out(basis_.size(), 0);
        for (const auto& t : f.terms()) {
            auto idx = index_of(t.mono);
            detail::require(idx.has_value(), "polynomial is not in this graded space");
            out[*idx] = t.coeff;
        }
        return out;
    }

    /// Uniform draw over the whole coefficient space, zero included.
    [[nodiscard]] Polynomial sample(Rng& rng) const {
        std::vector<Coeff> coeffs(basis_.size());
        for (auto& c : coeffs) c = rng.below(field_.characteristic());
        return from_coefficients(coeffs);
    }

    /// q^dimension, or nullopt when it does not fit in 64 bits.
    [[nodiscard]] std::optional<std::uint64_t> cardinality() const noexcept {
        std::uint64_t total = 1;
        const std::uint64_t q = field_.characteristic();
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (total > UINT64_MAX / q) return std::nullopt;
            total *= q;
        }
        return total;
    }

    /// Mixed-radix decoding: element number `index` in [0, q^dim).
    [[nodiscard]] Polynomial element(std::uint64_t index) const {
        std::vector<Coeff> coeffs(basis_.size());
        const std::uint64_t q = field_.characteristic();
        for (auto& c : coeffs) {
            c = index % q;
            index /= q;
        }
        return from_coefficients(coeffs);
    }

    /// Inverse of element().
    [[nodiscard]] std::uint64_t index(const Polynomial& f) const {
        const auto coeffs = coefficients(f);
        const std::uint64_t q = field_.characteristic();
        std::uint64_t idx = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) idx = idx * q + coeffs[i];
        return idx;
    }

private:
    PrimeField field_;
    std::size_t nvars_;
    unsigned degree_;
    GradedMode mode_;
    std::vector<Monomial> basis_;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

inline Polynomial sample_graded(const GradedSpace& space, Rng& rng) { return space.sample(rng); }

/// Default cap on exhaustive enumerations; SINGCENSUS_CAP overrides it.
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 25;

inline void check_cap(std::optional<std::uint64_t> count, std::uint64_t cap, const std::string& what) {
    if (!count || *count > cap) {
        throw CapExceeded(what + " needs " + (count ? std::to_string(*count) : std::string("more than 2^64")) +
                          " items, above the enumeration cap " + std::to_string(cap) +
                          "; use smaller parameters or sampling mode");
    }
}

}  // namespace singlab

#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "singlab/error.hpp"

namespace singlab {

using Coeff = std::uint64_t;

/// Trial division; adequate for the moduli this library is used with.
constexpr bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d <= n / d; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

/// The prime field F_p. Raw arithmetic works on canonical residues in [0, p).
class PrimeField {
public:
    static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 61;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        detail::require(p < kMaxModulus, "modulus must be below 2^61");
        detail::require(is_prime(p), "field characteristic " + std::to_string(p) + " is not prime");
    }

    [[nodiscard]] std::uint64_t characteristic() const noexcept { return p_; }

    [[nodiscard]] Coeff reduce(std::uint64_t v) const noexcept { return v % p_; }

    [[nodiscard]] Coeff reduce_signed(std::int64_t v) const noexcept {
        const auto p = static_cast<std::int64_t>(p_);
        std::int64_t r = v % p;
        if (r < 0) r += p;
        return static_cast<Coeff>(r);
    }

    [[nodiscard]] Coeff add(Coeff a, Coeff b) const noexcept {
        Coeff s = a + b;
        return s >= p_ ? s - p_ : s;
    }

    [[nodiscard]] Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }

    [[nodiscard]] Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }

    [[nodiscard]] Coeff mul(Coeff a, Coeff b) const noexcept {
        return static_cast<Coeff>((static_cast<unsigned __int128>(a) * b) % p_);
    }

    [[nodiscard]] Coeff pow(Coeff a, std::uint64_t e) const noexcept {
        Coeff result = 1 % p_;
        Coeff base = a;
        while (e != 0) {
            if (e & 1U) result = mul(result, base);
            base = mul(base, base);
            e >>= 1U;
        }
        return result;
    }

    [[nodiscard]] Coeff inv(Coeff a) const {
        if (a == 0) throw ValidationError("inverse of zero in F_" + std::to_string(p_));
        return pow(a, p_ - 2);
    }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint64_t p_;
};

/// An element of a prime field. Always holds the canonical residue.
class FieldElement {
public:
    FieldElement(const PrimeField& field, std::uint64_t value) : field_(field), value_(field.reduce(value)) {}

    static FieldElement from_signed(const PrimeField& field, std::int64_t value) {
        return FieldElement(field, field.reduce_signed(value));
    }

    [[nodiscard]] const PrimeField& field() const noexcept { return field_; }
    [[nodiscard]] Coeff value() const noexcept { return value_; }
    [[nodiscard]] bool is_zero() const noexcept { return value_ == 0; }

    [[nodiscard]] FieldElement inv() const { return {field_, field_.inv(value_)}; }
    [[nodiscard]] FieldElement pow(std::uint64_t e) const { return {field_, field_.pow(value_, e)}; }

    FieldElement operator-() const { return {field_, field_.neg(value_)}; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.field_.add(a.value_, b.value_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.field_.sub(a.value_, b.value_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.field_.mul(a.value_, b.value_)};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        if (b.is_zero()) throw ValidationError("division by zero");
        return {a.field_, a.field_.mul(a.value_, a.field_.inv(b.value_))};
    }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }

    friend std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.value_; }

private:
    static void check_same(const FieldElement& a, const FieldElement& b) {
        if (!(a.field_ == b.field_)) {
            throw ValidationError("field mismatch: F_" + std::to_string(a.field_.characteristic()) + " vs F_" +
                                  std::to_string(b.field_.characteristic()));
        }
    }

    PrimeField field_;
    Coeff value_;
};

}  // namespace singlab

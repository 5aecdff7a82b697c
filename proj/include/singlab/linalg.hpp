#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "singlab/prime_field.hpp"

namespace singlab {

/// Dense matrix over F_p, row-major.
class Matrix {
public:
    Matrix(const PrimeField& field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    [[nodiscard]] const PrimeField& field() const noexcept { return field_; }
    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    Coeff& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    Coeff operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    [[nodiscard]] std::span<const Coeff> row(std::size_t r) const noexcept {
        return {data_.data() + r * cols_, cols_};
    }

    [[nodiscard]] Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        detail::require(r0 + nr <= rows_ && c0 + nc <= cols_, "submatrix out of range");
        Matrix m(field_, nr, nc);
        for (std::size_t i = 0; i < nr; ++i) {
            for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
        }
        return m;
    }

    /// In-place reduced row echelon form; returns pivot columns.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t piv = r;
            while (piv < rows_ && (*this)(piv, c) == 0) ++piv;
            if (piv == rows_) continue;
            swap_rows(piv, r);
            const Coeff inv = field_.inv((*this)(r, c));
            for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = field_.mul((*this)(r, j), inv);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || (*this)(i, c) == 0) continue;
                const Coeff factor = (*this)(i, c);
                for (std::size_t j = c; j < cols_; ++j) {
                    (*this)(i, j) = field_.sub((*this)(i, j), field_.mul(factor, (*this)(r, j)));
                }
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    [[nodiscard]] std::size_t rank() const {
        Matrix copy(*this);
        return copy.rref().size();
    }

    /// Basis of the right kernel {v : M v = 0}.
    [[nodiscard]] std::vector<std::vector<Coeff>> kernel() const {
        Matrix copy(*this);
        const auto pivots = copy.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots) is_pivot[c] = true;
        std::vector<std::vector<Coeff>> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<Coeff> v(cols_, 0);
            v[free] = 1;
            for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = field_.neg(copy(i, free));
            basis.push_back(std::move(v));
        }
        return basis;
    }

    [[nodiscard]] Coeff determinant() const {
        detail::require(rows_ == cols_, "determinant of a non-square matrix");
        Matrix a(*this);
        Coeff det = 1;
        for (std::size_t c = 0; c < cols_; ++c) {
            std::size_t piv = c;
            while (piv < rows_ && a(piv, c) == 0) ++piv;
            if (piv == rows_) return 0;
            if (piv != c) {
                a.swap_rows(piv, c);
                det = field_.neg(det);
            }
            det = field_.mul(det, a(c, c));
            const Coeff inv = field_.inv(a(c, c));
            for (std::size_t i = c + 1; i < rows_; ++i) {
                if (a(i, c) == 0) continue;
                const Coeff factor = field_.mul(a(i, c), inv);
                for (std::size_t j = c; j < cols_; ++j) a(i, j) = field_.sub(a(i, j), field_.mul(factor, a(c, j)));
            }
        }
        return det;
    }

private:
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Coeff> data_;
};

/// Row space built one vector at a time. Keeps rows reduced against each
/// other's pivots, so rank queries after every insertion are O(1).
class IncrementalRowSpace {
public:
    IncrementalRowSpace(const PrimeField& field, std::size_t cols) : field_(field), cols_(cols) {}

    /// Returns true if `v` was independent of the rows already present.
    bool insert(std::vector<Coeff> v) {
        detail::require(v.size() == cols_, "row has wrong length");
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const Coeff c = v[pivots_[k]];
            if (c == 0) continue;
            const auto& r = rows_[k];
            for (std::size_t j = pivots_[k]; j < cols_; ++j) {
                if (r[j] != 0) v[j] = field_.sub(v[j], field_.mul(c, r[j]));
            }
        }
        std::size_t piv = 0;
        while (piv < cols_ && v[piv] == 0) ++piv;
        if (piv == cols_) return false;
        const Coeff inv = field_.inv(v[piv]);
        for (std::size_t j = piv; j < cols_; ++j) v[j] = field_.mul(v[j], inv);
        // Clear the new pivot column from existing rows.
        for (auto& r : rows_) {
            const Coeff c = r[piv];
            if (c == 0) continue;
            for (std::size_t j = piv; j < cols_; ++j) {
                if (v[j] != 0) r[j] = field_.sub(r[j], field_.mul(c, v[j]));
            }
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(piv);
        return true;
    }

    [[nodiscard]] std::size_t rank() const noexcept { return rows_.size(); }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// Basis of {v : r . v = 0 for every stored row r}.
    [[nodiscard]] std::vector<std::vector<Coeff>> orthogonal_complement() const {
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots_) is_pivot[c] = true;
        std::vector<std::vector<Coeff>> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<Coeff> v(cols_, 0);
            v[free] = 1;
            for (std::size_t k = 0; k < rows_.size(); ++k) v[pivots_[k]] = field_.neg(rows_[k][free]);
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    PrimeField field_;
    std::size_t cols_;
    std::vector<std::vector<Coeff>> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace singlab

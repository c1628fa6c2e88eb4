#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "folia/scalar.hpp"

namespace folia {

/// Dense row-major matrix of exact scalars.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::vector<Scalar> row_vector(std::size_t r) const;
    void append_row(std::span<const Scalar> values);
    void swap_rows(std::size_t a, std::size_t b);
    /// Rows of `other` appended below; column counts must agree.
    void append_rows(const Matrix& other);

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Reduced row echelon form with zero rows removed: leading entries are one,
/// pivot columns strictly increase, and each pivot column is zero elsewhere.
/// This is a canonical form of the row space.
struct EchelonForm {
    Matrix rref;
    std::vector<std::size_t> pivots;

    std::size_t rank() const noexcept { return pivots.size(); }
};

/// Row-reduces `m` with fraction-free (Bareiss) elimination over the Gaussian
/// integers after clearing row denominators, then normalizes to reduced form.
EchelonForm reduced_echelon(const Matrix& m);

/// Basis of {v : m v = 0} as the rows of a matrix, one row per free column
/// (free column set to one, other free columns zero).
Matrix nullspace(const EchelonForm& e);
Matrix nullspace(const Matrix& m);

/// Whether `v` lies in the row space of the canonical form `e`.
bool in_row_space(const EchelonForm& e, std::span<const Scalar> v);

} // namespace folia

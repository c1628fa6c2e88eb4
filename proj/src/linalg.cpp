#include "folia/linalg.hpp"

#include <utility>

#include "folia/error.hpp"

namespace folia {

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
    Matrix m(0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

std::vector<Scalar> Matrix::row_vector(std::size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
}

void Matrix::append_row(std::span<const Scalar> values) {
    if (values.size() != cols_) throw DimensionMismatch("row length does not match column count");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void Matrix::append_rows(const Matrix& other) {
    if (other.cols_ != cols_) throw DimensionMismatch("stacked matrices differ in column count");
    data_.insert(data_.end(), other.data_.begin(), other.data_.end());
    rows_ += other.rows_;
}

namespace {

// Multiplies every row by the lcm of its entry denominators so that all
// entries become Gaussian integers.
void clear_denominators(Matrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Scalar& v = m(r, c);
            if (v.is_zero()) continue;
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.denominator_lcm().get_mpz_t());
        }
        if (l == 1) continue;
        const Scalar factor{mpq_class(l)};
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) *= factor;
    }
}

} // namespace

EchelonForm reduced_echelon(const Matrix& input) {
    Matrix m = input;
    clear_denominators(m);

    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivots;
    Scalar previous(1);
    std::size_t r = 0;

    // Fraction-free forward elimination: after processing pivot k every entry
    // below is a (k+1)-minor of the input, so the division by the previous
    // pivot is exact in Z[i].
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c).is_zero()) ++p;
        if (p == rows) continue;
        m.swap_rows(p, r);
        const Scalar pivot = m(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Scalar lead = m(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                Scalar v = pivot * m(i, j);
                if (!lead.is_zero()) v -= lead * m(r, j);
                if (!previous.is_one()) v /= previous;
                m(i, j) = std::move(v);
            }
            m(i, c) = Scalar();
        }
        previous = pivot;
        pivots.push_back(c);
        ++r;
    }

    // Normalize pivots to one and clear the entries above them.
    Matrix reduced(0, cols);
    for (std::size_t k = 0; k < pivots.size(); ++k) reduced.append_row(m.row(k));
    for (std::size_t k = pivots.size(); k-- > 0;) {
        const std::size_t pc = pivots[k];
        const Scalar inv = reduced(k, pc).inverse();
        for (std::size_t j = pc; j < cols; ++j) {
            if (!reduced(k, j).is_zero()) reduced(k, j) *= inv;
        }
        for (std::size_t i = 0; i < k; ++i) {
            const Scalar factor = reduced(i, pc);
            if (factor.is_zero()) continue;
            for (std::size_t j = pc; j < cols; ++j) {
                if (!reduced(k, j).is_zero()) reduced(i, j) -= factor * reduced(k, j);
            }
        }
    }
    return {std::move(reduced), std::move(pivots)};
}

Matrix nullspace(const EchelonForm& e) {
    const std::size_t cols = e.rref.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;

    Matrix basis(0, cols);
    std::vector<Scalar> v(cols);
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::fill(v.begin(), v.end(), Scalar());
        v[f] = Scalar(1);
        for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.rref(k, f);
        basis.append_row(v);
    }
    return basis;
}

Matrix nullspace(const Matrix& m) { return nullspace(reduced_echelon(m)); }

bool in_row_space(const EchelonForm& e, std::span<const Scalar> v) {
    if (v.size() != e.rref.cols()) throw DimensionMismatch("vector length does not match column count");
    std::vector<Scalar> rest(v.begin(), v.end());
    for (std::size_t k = 0; k < e.pivots.size(); ++k) {
        const Scalar factor = rest[e.pivots[k]];
        if (factor.is_zero()) continue;
        for (std::size_t j = 0; j < rest.size(); ++j) {
            if (!e.rref(k, j).is_zero()) rest[j] -= factor * e.rref(k, j);
        }
    }
    for (const auto& s : rest) {
        if (!s.is_zero()) return false;
    }
    return true;
}

} // namespace folia

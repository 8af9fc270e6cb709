#include "hopfforge/matrix.hpp"

#include <stdexcept>

namespace hopfforge {

Matrix Matrix::identity(size_t n, const FieldMode& m) {
    Matrix I(n, n, m);
    for (size_t i = 0; i < n; ++i) I.at(i, i) = Scalar::one(m);
    return I;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
    Matrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
    Matrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
    Matrix r(rows_, o.cols_, mode_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Scalar& x = at(i, k);
            if (x.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += x * o.at(k, j);
            }
        }
    return r;
}

Matrix Matrix::operator*(const Scalar& c) const {
    Matrix r = *this;
    for (auto& x : r.a_) x *= c;
    return r;
}

Matrix Matrix::transposed() const {
    Matrix r(cols_, rows_, mode_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::kronecker(const Matrix& o) const {
    Matrix r(rows_ * o.rows_, cols_ * o.cols_, mode_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero()) continue;
            for (size_t p = 0; p < o.rows_; ++p)
                for (size_t s = 0; s < o.cols_; ++s)
                    r.at(i * o.rows_ + p, j * o.cols_ + s) = at(i, j) * o.at(p, s);
        }
    return r;
}

Matrix Matrix::pow(unsigned e) const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix::pow: square matrix required");
    Matrix r = identity(rows_, mode_);
    Matrix b = *this;
    while (e > 0) {
        if (e & 1u) r = r * b;
        b = b * b;
        e >>= 1u;
    }
    return r;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix::inverse: square matrix required");
    size_t n = rows_;
    Matrix aug(n, 2 * n, mode_);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, n + i) = Scalar::one(mode_);
    }
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && aug.at(piv, col).is_zero()) ++piv;
        if (piv == n) throw std::domain_error("Matrix::inverse: singular matrix");
        if (piv != col)
            for (size_t j = 0; j < 2 * n; ++j) std::swap(aug.at(piv, j), aug.at(col, j));
        Scalar inv = aug.at(col, col).inverse();
        for (size_t j = 0; j < 2 * n; ++j) aug.at(col, j) *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || aug.at(i, col).is_zero()) continue;
            Scalar f = aug.at(i, col);
            for (size_t j = 0; j < 2 * n; ++j) aug.at(i, j) -= f * aug.at(col, j);
        }
    }
    Matrix r(n, n, mode_);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
    return r;
}

namespace {

// Exact row echelon reduction in place: canonical gcd-reduced fractions,
// first-nonzero pivoting, no tolerances. Returns the pivot columns.
std::vector<size_t> echelonize(Matrix& M) {
    std::vector<size_t> pivots;
    const FieldMode& m = M.mode();
    size_t row = 0;
    for (size_t col = 0; col < M.cols() && row < M.rows(); ++col) {
        size_t piv = row;
        while (piv < M.rows() && M.at(piv, col).is_zero()) ++piv;
        if (piv == M.rows()) continue;
        if (piv != row)
            for (size_t j = 0; j < M.cols(); ++j) std::swap(M.at(piv, j), M.at(row, j));
        const Scalar pinv = M.at(row, col).inverse();
        for (size_t i = row + 1; i < M.rows(); ++i) {
            if (M.at(i, col).is_zero()) continue;
            const Scalar f = M.at(i, col) * pinv;
            M.at(i, col) = Scalar::zero(m);
            for (size_t j = col + 1; j < M.cols(); ++j) {
                if (M.at(row, j).is_zero()) continue;
                M.at(i, j) -= f * M.at(row, j);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

size_t Matrix::rank() const {
    Matrix M = *this;
    return echelonize(M).size();
}

std::vector<std::vector<Scalar>> Matrix::kernel() const {
    Matrix M = *this;
    std::vector<size_t> pivots = echelonize(M);
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(cols_, Scalar::zero(mode_));
        v[free] = Scalar::one(mode_);
        // back-substitute through the pivot rows
        for (size_t r = pivots.size(); r-- > 0;) {
            size_t pc = pivots[r];
            Scalar s = Scalar::zero(mode_);
            for (size_t j = pc + 1; j < cols_; ++j) {
                if (!M.at(r, j).is_zero() && !v[j].is_zero()) s += M.at(r, j) * v[j];
            }
            v[pc] = -s / M.at(r, pc);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: size mismatch");
    std::vector<Scalar> r(rows_, Scalar::zero(mode_));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero() || v[j].is_zero()) continue;
            r[i] += at(i, j) * v[j];
        }
    return r;
}

bool Matrix::is_diagonal() const {
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

size_t span_rank(const std::vector<std::vector<Scalar>>& rows, const FieldMode& m) {
    if (rows.empty()) return 0;
    Matrix M(rows.size(), rows[0].size(), m);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) M.at(i, j) = rows[i][j];
    return M.rank();
}

}  // namespace hopfforge

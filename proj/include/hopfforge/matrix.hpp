// Dense matrices over the exact coefficient field. Elimination is exact
// Gaussian reduction on canonical gcd-reduced fractions with first-nonzero
// pivoting; no tolerances exist anywhere.
#pragma once

#include "hopfforge/field.hpp"

#include <vector>

namespace hopfforge {

class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols, const FieldMode& m)
        : rows_(rows), cols_(cols), mode_(m), a_(rows * cols, Scalar::zero(m)) {}

    static Matrix identity(size_t n, const FieldMode& m);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const FieldMode& mode() const { return mode_; }

    Scalar& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const;
    bool is_zero() const;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(const Scalar& c) const;

    Matrix transposed() const;
    Matrix kronecker(const Matrix& o) const;
    Matrix pow(unsigned e) const;

    // Gauss-Jordan inverse; throws std::domain_error when singular.
    Matrix inverse() const;

    size_t rank() const;
    // Basis of the right null space (vectors as columns-of-coefficients).
    std::vector<std::vector<Scalar>> kernel() const;

    // Apply to a coordinate vector.
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

    bool is_diagonal() const;

private:
    size_t rows_ = 0, cols_ = 0;
    FieldMode mode_;
    std::vector<Scalar> a_;
};

// Rank of a set of row vectors (used for span dimensions).
size_t span_rank(const std::vector<std::vector<Scalar>>& rows, const FieldMode& m);

}  // namespace hopfforge

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "steiner/field.hpp"

namespace steiner {

using Vector = std::vector<FieldElement>;

/// Dense row-major matrix over a Field.
class ScalarMatrix {
public:
    ScalarMatrix() = default;
    /// Zero matrix.
    ScalarMatrix(const Field& field, std::size_t rows, std::size_t cols);
    /// Entries are coerced into `field`; the count must equal rows * cols.
    ScalarMatrix(const Field& field, std::size_t rows, std::size_t cols,
                 std::vector<FieldElement> entries);

    static ScalarMatrix identity(const Field& field, std::size_t n);
    static ScalarMatrix from_ints(const Field& field, std::size_t rows, std::size_t cols,
                                  const std::vector<long long>& values);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<FieldElement>& entries() const { return entries_; }

    const FieldElement& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    FieldElement& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    ScalarMatrix transpose() const;
    /// Rows of `top` followed by rows of `bottom`.
    static ScalarMatrix stack(const ScalarMatrix& top, const ScalarMatrix& bottom);
    ScalarMatrix coerce(const Field& target) const;

    friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
    friend bool operator==(const ScalarMatrix&, const ScalarMatrix&) = default;

    std::string to_string() const;

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<FieldElement> entries_;
};

Vector operator*(const ScalarMatrix& m, const Vector& v);

/// Exact rank by fraction-free elimination, pivoting on the first nonzero
/// entry of each column.
std::size_t rank(const ScalarMatrix& m);

/// Basis of the right null space, one vector per non-pivot column. Over Q the
/// vectors are primitive integer vectors.
std::vector<Vector> kernel_basis(const ScalarMatrix& m);

/// Some solution of m * v = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const ScalarMatrix& m, const Vector& b);

bool is_invertible(const ScalarMatrix& m);

/// Univariate polynomial with coefficients in a Field, lowest degree first,
/// without trailing zero coefficients (the zero polynomial is empty).
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const Field& field, std::vector<FieldElement> coeffs);
    /// a + b*t
    static UniPoly linear(const FieldElement& a, const FieldElement& b);

    const Field& field() const { return field_; }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    FieldElement evaluate(const FieldElement& t) const;

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    Field field_;
    std::vector<FieldElement> coeffs_;
};

class UniPolyMatrix {
public:
    UniPolyMatrix(const Field& field, std::size_t rows, std::size_t cols);
    UniPolyMatrix(const Field& field, std::size_t rows, std::size_t cols,
                  std::vector<UniPoly> entries);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const UniPoly& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    UniPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    ScalarMatrix evaluate(const FieldElement& t) const;

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<UniPoly> entries_;
};

/// Rank over the rational function field K(t), by fraction-free elimination
/// on the polynomial entries.
std::size_t poly_rank(const UniPolyMatrix& m);

}  // namespace steiner

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "steiner/field.hpp"
#include "steiner/matrix.hpp"

namespace steiner {

/// Homogeneous coordinates of a point of P^n.
using Point = std::vector<FieldElement>;

Point make_point(const Field& field, const std::vector<long long>& coords);

/// A linear form sum_i coeffs[i] * x_i in the variables x_0 ... x_n.
class LinearForm {
public:
    LinearForm() = default;
    /// The zero form in n+1 variables.
    LinearForm(const Field& field, std::size_t num_vars);
    LinearForm(const Field& field, std::vector<FieldElement> coeffs);

    /// The coordinate form x_i.
    static LinearForm variable(const Field& field, std::size_t num_vars, std::size_t i);

    const Field& field() const { return field_; }
    std::size_t num_vars() const { return coeffs_.size(); }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    const FieldElement& operator[](std::size_t i) const { return coeffs_[i]; }
    bool is_zero() const;

    FieldElement evaluate(std::span<const FieldElement> point) const;
    LinearForm coerce(const Field& target) const;

    LinearForm& operator+=(const LinearForm& rhs);
    friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
    friend LinearForm operator*(const FieldElement& s, const LinearForm& f);
    LinearForm operator-() const;

    friend bool operator==(const LinearForm&, const LinearForm&) = default;

private:
    Field field_;
    std::vector<FieldElement> coeffs_;
};

/// A c x x matrix of linear forms on P^n: the presentation O^x -> O(1)^c of a
/// Steiner kernel.
class LinFormMatrix {
public:
    LinFormMatrix() = default;
    /// Zero matrix.
    LinFormMatrix(const Field& field, std::size_t n, std::size_t rows, std::size_t cols);
    LinFormMatrix(const Field& field, std::size_t n, std::size_t rows, std::size_t cols,
                  std::vector<LinearForm> entries);

    const Field& field() const { return field_; }
    /// Ambient projective dimension.
    std::size_t n() const { return n_; }
    /// c, the number of rows (minus the first Chern class of the kernel).
    std::size_t rows() const { return rows_; }
    /// x, the number of columns.
    std::size_t cols() const { return cols_; }
    /// x - c; the kernel rank when the matrix is pointwise surjective.
    std::size_t kernel_rank() const { return cols_ >= rows_ ? cols_ - rows_ : 0; }

    const LinearForm& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    void set(std::size_t i, std::size_t j, LinearForm form);
    /// Adds a_v * x_v to entry (i, j).
    void add_term(std::size_t i, std::size_t j, std::size_t var, const FieldElement& coeff);

    const std::vector<LinearForm>& entries() const { return entries_; }
    std::vector<LinearForm> column(std::size_t j) const;

    LinFormMatrix coerce(const Field& target) const;

    friend bool operator==(const LinFormMatrix&, const LinFormMatrix&) = default;

private:
    Field field_;
    std::size_t n_ = 0;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<LinearForm> entries_;
};

/// A line of P^n through two points, stored as the parametrization s*p + u*q.
class Line {
public:
    /// Throws std::invalid_argument unless p and q are independent.
    Line(Point p, Point q);

    std::size_t n() const { return p_.size() - 1; }
    const Field& field() const { return p_.front().field(); }
    const Point& p() const { return p_; }
    const Point& q() const { return q_; }

    friend bool operator==(const Line&, const Line&) = default;

private:
    Point p_;
    Point q_;
};

/// A(pt); rejects the zero point and dimension mismatches.
ScalarMatrix evaluate(const LinFormMatrix& a, std::span<const FieldElement> point);

/// R * A * C for invertible scalar R (c x c) and C (x x x).
LinFormMatrix row_col_transform(const LinFormMatrix& a, const ScalarMatrix& r,
                                const ScalarMatrix& c);

/// Removes the listed (distinct, 0-based) columns.
LinFormMatrix delete_columns(const LinFormMatrix& a, std::vector<std::size_t> idxs);

/// Appends columns; each column is a list of c linear forms.
LinFormMatrix append_columns(const LinFormMatrix& a,
                             const std::vector<std::vector<LinearForm>>& columns);

/// All points of P^n(F_p), each normalized so that its first nonzero
/// coordinate is 1, in lexicographic order.
std::vector<Point> enumerate_points(std::size_t n, std::uint32_t p);

struct SurjectivityResult {
    bool surjective = true;
    std::optional<Point> witness;
};

/// Checks rank A(pt) = c at every point of P^n(F_p), with A coerced to F_p.
SurjectivityResult pointwise_surjective(const LinFormMatrix& a, std::uint32_t p);

}  // namespace steiner

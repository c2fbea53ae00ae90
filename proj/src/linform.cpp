#include "steiner/linform.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace steiner {

Point make_point(const Field& field, const std::vector<long long>& coords) {
    Point pt;
    pt.reserve(coords.size());
    for (long long v : coords) pt.emplace_back(field, v);
    return pt;
}

LinearForm::LinearForm(const Field& field, std::size_t num_vars)
    : field_(field), coeffs_(num_vars, FieldElement::zero(field)) {}

LinearForm::LinearForm(const Field& field, std::vector<FieldElement> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c = c.coerce(field_);
}

LinearForm LinearForm::variable(const Field& field, std::size_t num_vars, std::size_t i) {
    if (i >= num_vars) throw std::out_of_range("variable index out of range");
    LinearForm f(field, num_vars);
    f.coeffs_[i] = FieldElement::one(field);
    return f;
}

bool LinearForm::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return c.is_zero(); });
}

FieldElement LinearForm::evaluate(std::span<const FieldElement> point) const {
    if (point.size() != coeffs_.size()) {
        throw std::invalid_argument("point has " + std::to_string(point.size()) +
                                    " coordinates, form expects " +
                                    std::to_string(coeffs_.size()));
    }
    FieldElement acc = FieldElement::zero(field_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) acc += coeffs_[i] * point[i];
    }
    return acc;
}

LinearForm LinearForm::coerce(const Field& target) const {
    return LinearForm(target, coeffs_);
}

LinearForm& LinearForm::operator+=(const LinearForm& rhs) {
    if (rhs.coeffs_.size() != coeffs_.size()) {
        throw std::invalid_argument("linear forms in different numbers of variables");
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

LinearForm operator*(const FieldElement& s, const LinearForm& f) {
    LinearForm out = f;
    for (auto& c : out.coeffs_) c = s * c;
    return out;
}

LinearForm LinearForm::operator-() const {
    return -FieldElement::one(field_) * *this;
}

LinFormMatrix::LinFormMatrix(const Field& field, std::size_t n, std::size_t rows,
                             std::size_t cols)
    : field_(field), n_(n), rows_(rows), cols_(cols),
      entries_(rows * cols, LinearForm(field, n + 1)) {}

LinFormMatrix::LinFormMatrix(const Field& field, std::size_t n, std::size_t rows,
                             std::size_t cols, std::vector<LinearForm> entries)
    : field_(field), n_(n), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) {
        throw std::invalid_argument("linear-form matrix entry count does not match shape");
    }
    for (auto& e : entries_) {
        if (e.num_vars() != n + 1) {
            throw std::invalid_argument("entry has " + std::to_string(e.num_vars()) +
                                        " coefficients, expected " + std::to_string(n + 1));
        }
        e = e.coerce(field_);
    }
}

void LinFormMatrix::set(std::size_t i, std::size_t j, LinearForm form) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("entry index out of range");
    if (form.num_vars() != n_ + 1) throw std::invalid_argument("entry has wrong variable count");
    entries_[i * cols_ + j] = form.coerce(field_);
}

void LinFormMatrix::add_term(std::size_t i, std::size_t j, std::size_t var,
                             const FieldElement& coeff) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("entry index out of range");
    LinearForm term = LinearForm::variable(field_, n_ + 1, var);
    entries_[i * cols_ + j] += coeff.coerce(field_) * term;
}

std::vector<LinearForm> LinFormMatrix::column(std::size_t j) const {
    if (j >= cols_) throw std::out_of_range("column index out of range");
    std::vector<LinearForm> col;
    col.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) col.push_back((*this)(i, j));
    return col;
}

LinFormMatrix LinFormMatrix::coerce(const Field& target) const {
    return LinFormMatrix(target, n_, rows_, cols_, entries_);
}

Line::Line(Point p, Point q) : p_(std::move(p)), q_(std::move(q)) {
    if (p_.size() < 2 || p_.size() != q_.size()) {
        throw std::invalid_argument("line points must have the same number (>= 2) of coordinates");
    }
    const Field field = p_.front().field();
    std::vector<FieldElement> entries = p_;
    entries.insert(entries.end(), q_.begin(), q_.end());
    ScalarMatrix pq(field, 2, p_.size(), std::move(entries));
    if (rank(pq) != 2) throw std::invalid_argument("degenerate line: points are dependent");
}

ScalarMatrix evaluate(const LinFormMatrix& a, std::span<const FieldElement> point) {
    if (point.size() != a.n() + 1) {
        throw std::invalid_argument("point has " + std::to_string(point.size()) +
                                    " coordinates, expected " + std::to_string(a.n() + 1));
    }
    if (std::all_of(point.begin(), point.end(), [](const auto& c) { return c.is_zero(); })) {
        throw std::invalid_argument("cannot evaluate at the zero vector");
    }
    std::vector<FieldElement> coords;
    coords.reserve(point.size());
    for (const auto& c : point) coords.push_back(c.coerce(a.field()));
    std::vector<FieldElement> values;
    values.reserve(a.rows() * a.cols());
    for (const auto& form : a.entries()) values.push_back(form.evaluate(coords));
    return ScalarMatrix(a.field(), a.rows(), a.cols(), std::move(values));
}

LinFormMatrix row_col_transform(const LinFormMatrix& a, const ScalarMatrix& r,
                                const ScalarMatrix& c) {
    if (r.rows() != a.rows() || r.cols() != a.rows() || c.rows() != a.cols() ||
        c.cols() != a.cols()) {
        throw std::invalid_argument("row/column transform has the wrong shape");
    }
    const ScalarMatrix rr = r.coerce(a.field());
    const ScalarMatrix cc = c.coerce(a.field());
    if (!is_invertible(rr) || !is_invertible(cc)) {
        throw std::invalid_argument("row/column transform is singular");
    }
    // Work one variable at a time: A = sum_v A_v x_v, so R A C = sum_v (R A_v C) x_v.
    LinFormMatrix out(a.field(), a.n(), a.rows(), a.cols());
    for (std::size_t v = 0; v <= a.n(); ++v) {
        ScalarMatrix slice(a.field(), a.rows(), a.cols());
        for (std::size_t i = 0; i < a.rows(); ++i) {
            for (std::size_t j = 0; j < a.cols(); ++j) slice(i, j) = a(i, j)[v];
        }
        ScalarMatrix image = rr * slice * cc;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            for (std::size_t j = 0; j < a.cols(); ++j) {
                if (!image(i, j).is_zero()) out.add_term(i, j, v, image(i, j));
            }
        }
    }
    return out;
}

LinFormMatrix delete_columns(const LinFormMatrix& a, std::vector<std::size_t> idxs) {
    std::sort(idxs.begin(), idxs.end());
    if (std::adjacent_find(idxs.begin(), idxs.end()) != idxs.end()) {
        throw std::invalid_argument("delete_columns: repeated column index");
    }
    if (!idxs.empty() && idxs.back() >= a.cols()) {
        throw std::out_of_range("delete_columns: column " + std::to_string(idxs.back()) +
                                " out of range for " + std::to_string(a.cols()) + " columns");
    }
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        if (!std::binary_search(idxs.begin(), idxs.end(), j)) keep.push_back(j);
    }
    std::vector<LinearForm> entries;
    entries.reserve(a.rows() * keep.size());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (auto j : keep) entries.push_back(a(i, j));
    }
    return LinFormMatrix(a.field(), a.n(), a.rows(), keep.size(), std::move(entries));
}

LinFormMatrix append_columns(const LinFormMatrix& a,
                             const std::vector<std::vector<LinearForm>>& columns) {
    for (const auto& col : columns) {
        if (col.size() != a.rows()) {
            throw std::invalid_argument("append_columns: column has " +
                                        std::to_string(col.size()) + " entries, expected " +
                                        std::to_string(a.rows()));
        }
    }
    const std::size_t cols = a.cols() + columns.size();
    std::vector<LinearForm> entries;
    entries.reserve(a.rows() * cols);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) entries.push_back(a(i, j));
        for (const auto& col : columns) entries.push_back(col[i]);
    }
    return LinFormMatrix(a.field(), a.n(), a.rows(), cols, std::move(entries));
}

std::vector<Point> enumerate_points(std::size_t n, std::uint32_t p) {
    const Field field = Field::prime(p);
    std::vector<Point> points;
    // Leading 1 at position lead, zeros before it, anything after it.
    for (std::size_t lead = 0; lead <= n; ++lead) {
        const std::size_t free = n - lead;
        std::vector<std::uint32_t> digits(free, 0);
        while (true) {
            Point pt(n + 1, FieldElement::zero(field));
            pt[lead] = FieldElement::one(field);
            for (std::size_t k = 0; k < free; ++k) pt[lead + 1 + k] = FieldElement(field, digits[k]);
            points.push_back(std::move(pt));
            std::size_t k = free;
            while (k > 0 && digits[k - 1] == p - 1) digits[--k] = 0;
            if (k == 0) break;
            ++digits[k - 1];
        }
    }
    return points;
}

SurjectivityResult pointwise_surjective(const LinFormMatrix& a, std::uint32_t p) {
    const LinFormMatrix ap = a.coerce(Field::prime(p));
    for (auto& pt : enumerate_points(a.n(), p)) {
        if (rank(evaluate(ap, pt)) != a.rows()) return {false, std::move(pt)};
    }
    return {};
}

}  // namespace steiner

#include "steiner/matrix.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "elimination.hpp"

namespace steiner {

using detail::Grid;
using detail::IntegerRing;
using detail::PolyRing;
using detail::PrimeRing;

namespace {

void require_field(const Field& a, const Field& b) {
    if (!(a == b)) throw std::invalid_argument("field mismatch: " + a.tag() + " vs " + b.tag());
}

Grid<std::uint32_t> residue_grid(const ScalarMatrix& m) {
    Grid<std::uint32_t> g{m.rows(), m.cols(), {}};
    g.data.reserve(m.entries().size());
    for (const auto& e : m.entries()) g.data.push_back(e.residue());
    return g;
}

// Scales each row by the lcm of its denominators; rank and kernel are unchanged.
Grid<mpz_class> integer_grid(const ScalarMatrix& m) {
    Grid<mpz_class> g{m.rows(), m.cols(), std::vector<mpz_class>(m.rows() * m.cols())};
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class lcm = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).rational().get_den_mpz_t());
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const mpq_class& q = m(i, j).rational();
            g.at(i, j) = q.get_num() * (lcm / q.get_den());
        }
    }
    return g;
}

}  // namespace

ScalarMatrix::ScalarMatrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, FieldElement::zero(field)) {}

ScalarMatrix::ScalarMatrix(const Field& field, std::size_t rows, std::size_t cols,
                           std::vector<FieldElement> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) {
        throw std::invalid_argument("matrix entry count " + std::to_string(entries_.size()) +
                                    " does not match shape " + std::to_string(rows) + "x" +
                                    std::to_string(cols));
    }
    for (auto& e : entries_) e = e.coerce(field_);
}

ScalarMatrix ScalarMatrix::identity(const Field& field, std::size_t n) {
    ScalarMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement::one(field);
    return m;
}

ScalarMatrix ScalarMatrix::from_ints(const Field& field, std::size_t rows, std::size_t cols,
                                     const std::vector<long long>& values) {
    std::vector<FieldElement> entries;
    entries.reserve(values.size());
    for (long long v : values) entries.emplace_back(field, v);
    return ScalarMatrix(field, rows, cols, std::move(entries));
}

ScalarMatrix ScalarMatrix::transpose() const {
    ScalarMatrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

ScalarMatrix ScalarMatrix::stack(const ScalarMatrix& top, const ScalarMatrix& bottom) {
    require_field(top.field(), bottom.field());
    if (top.cols() != bottom.cols()) throw std::invalid_argument("stack: column counts differ");
    std::vector<FieldElement> entries = top.entries_;
    entries.insert(entries.end(), bottom.entries_.begin(), bottom.entries_.end());
    return ScalarMatrix(top.field(), top.rows() + bottom.rows(), top.cols(), std::move(entries));
}

ScalarMatrix ScalarMatrix::coerce(const Field& target) const {
    return ScalarMatrix(target, rows_, cols_, entries_);
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
    require_field(a.field(), b.field());
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    ScalarMatrix out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    }
    return out;
}

Vector operator*(const ScalarMatrix& m, const Vector& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("matrix-vector product: size mismatch");
    Vector out(m.rows(), FieldElement::zero(m.field()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_zero()) out[i] += m(i, j) * v[j];
        }
    }
    return out;
}

std::string ScalarMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) os << ' ' << (*this)(i, j).to_string();
        os << " ]\n";
    }
    return os.str();
}

std::size_t rank(const ScalarMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (m.field().is_prime()) {
        auto g = residue_grid(m);
        return detail::bareiss_rank(PrimeRing(m.field().characteristic()), g);
    }
    auto g = integer_grid(m);
    return detail::bareiss_rank(IntegerRing{}, g);
}

std::vector<Vector> kernel_basis(const ScalarMatrix& m) {
    const Field& field = m.field();
    std::vector<Vector> basis;
    auto build = [&](const auto& ring, auto& g, auto to_vector) {
        auto reduced = detail::fraction_free_rref(ring, g);
        std::vector<bool> is_pivot(m.cols(), false);
        for (auto c : reduced.pivots) is_pivot[c] = true;
        for (std::size_t f = 0; f < m.cols(); ++f) {
            if (is_pivot[f]) continue;
            // scale * x_pivot(i) + sum_free g(i, f) * x_f = 0
            using T = typename std::decay_t<decltype(ring)>::value_type;
            std::vector<T> v(m.cols(), ring.zero());
            v[f] = reduced.scale;
            for (std::size_t i = 0; i < reduced.pivots.size(); ++i) {
                v[reduced.pivots[i]] = ring.sub(ring.zero(), g.at(i, f));
            }
            basis.push_back(to_vector(v, reduced.scale));
        }
    };
    if (field.is_prime()) {
        PrimeRing ring(field.characteristic());
        Grid<std::uint32_t> g = m.rows() ? residue_grid(m) : Grid<std::uint32_t>{0, m.cols(), {}};
        build(ring, g, [&](std::vector<std::uint32_t>& v, std::uint32_t scale) {
            std::uint32_t inv = ring.inverse(scale);
            Vector out;
            out.reserve(v.size());
            for (auto x : v) out.emplace_back(field, static_cast<long long>(ring.mul(x, inv)));
            return out;
        });
    } else {
        Grid<mpz_class> g = integer_grid(m);
        build(IntegerRing{}, g, [&](std::vector<mpz_class>& v, const mpz_class&) {
            mpz_class content = 0;
            for (const auto& x : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
            Vector out;
            out.reserve(v.size());
            for (auto& x : v) out.emplace_back(field, mpq_class(x / content));
            return out;
        });
    }
    return basis;
}

std::optional<Vector> solve(const ScalarMatrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side size mismatch");
    // Kernel vectors of [m | -b] with last coordinate 1 are exactly the solutions.
    ScalarMatrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = -b[i].coerce(m.field());
    }
    for (auto& v : kernel_basis(aug)) {
        if (v.back().is_zero()) continue;
        FieldElement inv = v.back().inverse();
        Vector x(v.begin(), v.end() - 1);
        for (auto& e : x) e *= inv;
        return x;
    }
    return std::nullopt;
}

bool is_invertible(const ScalarMatrix& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

UniPoly::UniPoly(const Field& field, std::vector<FieldElement> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c = c.coerce(field_);
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::linear(const FieldElement& a, const FieldElement& b) {
    require_field(a.field(), b.field());
    return UniPoly(a.field(), {a, b});
}

FieldElement UniPoly::evaluate(const FieldElement& t) const {
    FieldElement acc = FieldElement::zero(field_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UniPolyMatrix::UniPolyMatrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, UniPoly(field, {})) {}

UniPolyMatrix::UniPolyMatrix(const Field& field, std::size_t rows, std::size_t cols,
                             std::vector<UniPoly> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) {
        throw std::invalid_argument("polynomial matrix entry count does not match shape");
    }
    for (const auto& e : entries_) {
        if (!e.is_zero()) require_field(e.field(), field_);
    }
}

ScalarMatrix UniPolyMatrix::evaluate(const FieldElement& t) const {
    ScalarMatrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j).evaluate(t);
    }
    return out;
}

std::size_t poly_rank(const UniPolyMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (m.field().is_prime()) {
        PolyRing<PrimeRing> ring(PrimeRing(m.field().characteristic()));
        Grid<std::vector<std::uint32_t>> g{m.rows(), m.cols(), {}};
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                std::vector<std::uint32_t> p;
                for (const auto& c : m(i, j).coeffs()) p.push_back(c.residue());
                g.data.push_back(std::move(p));
            }
        }
        return detail::bareiss_rank(ring, g);
    }
    // Clear denominators row by row so that elimination runs in Z[t].
    PolyRing<IntegerRing> ring(IntegerRing{});
    Grid<std::vector<mpz_class>> g{m.rows(), m.cols(), {}};
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class lcm = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            for (const auto& c : m(i, j).coeffs()) {
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational().get_den_mpz_t());
            }
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::vector<mpz_class> p;
            for (const auto& c : m(i, j).coeffs()) {
                p.push_back(c.rational().get_num() * (lcm / c.rational().get_den()));
            }
            g.data.push_back(std::move(p));
        }
    }
    return detail::bareiss_rank(ring, g);
}

}  // namespace steiner

#include "steiner/pencil.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace steiner {

BinaryPencil::BinaryPencil(ScalarMatrix at_p, ScalarMatrix at_q)
    : at_p_(std::move(at_p)), at_q_(std::move(at_q)) {
    if (at_p_.rows() != at_q_.rows() || at_p_.cols() != at_q_.cols()) {
        throw std::invalid_argument("pencil matrices must have the same shape");
    }
    if (!(at_p_.field() == at_q_.field())) {
        throw std::invalid_argument("pencil matrices must share a field");
    }
}

SplittingType::SplittingType(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    std::sort(degrees_.begin(), degrees_.end());
}

int SplittingType::sum() const {
    return std::accumulate(degrees_.begin(), degrees_.end(), 0);
}

std::map<int, std::size_t> SplittingType::multiplicities() const {
    std::map<int, std::size_t> m;
    for (int d : degrees_) ++m[d];
    return m;
}

std::string SplittingType::to_string() const {
    std::string out = "(";
    bool first = true;
    for (const auto& [deg, mult] : multiplicities()) {
        if (!first) out += ", ";
        first = false;
        out += std::to_string(deg);
        if (mult > 1) out += "^" + std::to_string(mult);
    }
    return out + ")";
}

std::string SplittingType::to_list_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(degrees_[i]);
    }
    return out + ")";
}

SplittingType SplittingType::from_counts(const std::vector<std::size_t>& counts_from_lowest) {
    std::vector<int> degrees;
    const int lowest = -static_cast<int>(counts_from_lowest.size()) + 1;
    for (std::size_t i = 0; i < counts_from_lowest.size(); ++i) {
        degrees.insert(degrees.end(), counts_from_lowest[i], lowest + static_cast<int>(i));
    }
    return SplittingType(std::move(degrees));
}

BinaryPencil restrict_to_line(const LinFormMatrix& a, const Line& line) {
    if (line.n() != a.n()) {
        throw std::invalid_argument("line lives in P^" + std::to_string(line.n()) +
                                    ", matrix in P^" + std::to_string(a.n()));
    }
    return BinaryPencil(evaluate(a, line.p()), evaluate(a, line.q()));
}

std::size_t generic_rank(const BinaryPencil& pencil) {
    UniPolyMatrix m(pencil.field(), pencil.rows(), pencil.cols());
    for (std::size_t i = 0; i < pencil.rows(); ++i) {
        for (std::size_t j = 0; j < pencil.cols(); ++j) {
            m(i, j) = UniPoly::linear(pencil.at_p()(i, j), pencil.at_q()(i, j));
        }
    }
    return poly_rank(m);
}

ScalarMatrix sylvester_matrix(const BinaryPencil& pencil, std::size_t d) {
    const std::size_t c = pencil.rows();
    const std::size_t x = pencil.cols();
    ScalarMatrix s(pencil.field(), c * (d + 2), x * (d + 1));
    for (std::size_t i = 0; i < c; ++i) {
        for (std::size_t j = 0; j < x; ++j) {
            const FieldElement& m = pencil.at_p()(i, j);
            const FieldElement& n = pencil.at_q()(i, j);
            for (std::size_t a = 0; a <= d; ++a) {
                // s * (s^(d-a) u^a) lands on b = a; u * (s^(d-a) u^a) on b = a + 1.
                if (!m.is_zero()) s(i * (d + 2) + a, j * (d + 1) + a) = m;
                if (!n.is_zero()) s(i * (d + 2) + a + 1, j * (d + 1) + a) = n;
            }
        }
    }
    return s;
}

std::size_t section_dim(const BinaryPencil& pencil, std::size_t d) {
    return pencil.cols() * (d + 1) - rank(sylvester_matrix(pencil, d));
}

SplittingType splitting_type(const BinaryPencil& pencil) {
    const std::size_t c = pencil.rows();
    const std::size_t r = pencil.cols() - generic_rank(pencil);
    // With f(d) = section_dim(d) and delta(d) = f(d) - f(d-1), delta(d) counts
    // the summands of degree >= -d. Every degree is >= -c, so delta(c) = r;
    // once delta reaches r all remaining multiplicities vanish.
    std::vector<std::size_t> delta;
    std::size_t previous = 0;
    for (std::size_t d = 0; d <= c; ++d) {
        const std::size_t f = section_dim(pencil, d);
        delta.push_back(f - previous);
        previous = f;
        if (delta.back() == r) break;
    }
    if (delta.back() != r) {
        throw std::logic_error("splitting recovery failed: delta(" +
                               std::to_string(delta.size() - 1) + ") = " +
                               std::to_string(delta.back()) + " but kernel rank is " +
                               std::to_string(r));
    }
    std::vector<int> degrees;
    for (std::size_t d = 0; d < delta.size(); ++d) {
        const std::size_t below = d == 0 ? 0 : delta[d - 1];
        if (delta[d] < below) throw std::logic_error("section dimensions are not convex");
        degrees.insert(degrees.end(), delta[d] - below, -static_cast<int>(d));
    }
    return SplittingType(std::move(degrees));
}

}  // namespace steiner

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "steiner/linform.hpp"
#include "steiner/matrix.hpp"

namespace steiner {

/// The restriction of a LinFormMatrix to a parametrized line: the pencil
/// s*M + u*N with M = A(p), N = A(q).
class BinaryPencil {
public:
    BinaryPencil(ScalarMatrix at_p, ScalarMatrix at_q);

    const ScalarMatrix& at_p() const { return at_p_; }
    const ScalarMatrix& at_q() const { return at_q_; }
    std::size_t rows() const { return at_p_.rows(); }
    std::size_t cols() const { return at_p_.cols(); }
    const Field& field() const { return at_p_.field(); }

private:
    ScalarMatrix at_p_;
    ScalarMatrix at_q_;
};

/// Sorted degrees a_1 <= ... <= a_r of the line bundles O(a_i) in a
/// splitting on P^1.
class SplittingType {
public:
    SplittingType() = default;
    explicit SplittingType(std::vector<int> degrees);

    const std::vector<int>& degrees() const { return degrees_; }
    std::size_t rank() const { return degrees_.size(); }
    int sum() const;
    int min() const { return degrees_.empty() ? 0 : degrees_.front(); }
    /// degree -> multiplicity
    std::map<int, std::size_t> multiplicities() const;

    /// Exponent notation, most negative first: "(-1^3, 0^2)", "(-3, -2^3)".
    std::string to_string() const;
    /// Plain list: "(-1,-1,-1,0,0)".
    std::string to_list_string() const;

    /// (-k^{m_k}, ..., 0^{m_0}) built from counts listed from degree -k up to 0.
    static SplittingType from_counts(const std::vector<std::size_t>& counts_from_lowest);

    friend bool operator==(const SplittingType&, const SplittingType&) = default;
    friend auto operator<=>(const SplittingType&, const SplittingType&) = default;

private:
    std::vector<int> degrees_;
};

BinaryPencil restrict_to_line(const LinFormMatrix& a, const Line& line);

/// Rank of M + t*N over K(t): the rank at a general point of the line.
std::size_t generic_rank(const BinaryPencil& pencil);

/// Coefficient matrix, c(d+2) x x(d+1), of the map sending x binary forms of
/// degree d to the c forms of degree d+1 obtained by applying the pencil.
/// Column (j, a) holds the coefficient of s^(d-a) u^a in g_j; row (i, b) the
/// coefficient of s^(d+1-b) u^b in output i.
ScalarMatrix sylvester_matrix(const BinaryPencil& pencil, std::size_t d);

/// h^0 of the pencil kernel twisted by d: x(d+1) - rank(sylvester_matrix).
std::size_t section_dim(const BinaryPencil& pencil, std::size_t d);

/// Splitting type of the pencil kernel, recovered from successive
/// differences of section_dim.
SplittingType splitting_type(const BinaryPencil& pencil);

}  // namespace steiner

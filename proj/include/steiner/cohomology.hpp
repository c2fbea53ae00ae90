#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "steiner/linform.hpp"
#include "steiner/matrix.hpp"

namespace steiner {

/// Exponent vectors of the degree-d monomials in n+1 variables, graded-lex
/// with x_0 > x_1 > ... > x_n.
std::vector<std::vector<unsigned>> monomials(std::size_t n, std::size_t d);

/// Exact binomial coefficient; throws if it does not fit in 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Coefficient matrix of H^0(O(d))^x -> H^0(O(d+1))^c induced by A. Rows are
/// ordered by matrix row then monomial, columns by matrix column then monomial.
ScalarMatrix macaulay_matrix(const LinFormMatrix& a, std::size_t d);

/// chi(E(d)) = x * C(n+d, n) - c * C(n+d+1, n), for d >= -1.
long long euler_characteristic(const LinFormMatrix& a, int d);

/// h^0(E(d)) of the kernel E of A; 0 at d = -1.
std::size_t h0(const LinFormMatrix& a, int d);

/// h^1(E(d)) = h^0(E(d)) - chi(E(d)); needs n >= 2 and d >= -1, where the
/// outer terms O(d)^x and O(d+1)^c have no higher cohomology in the way.
std::size_t h1(const LinFormMatrix& a, int d);

struct CohomologyRecord {
    int d;
    std::size_t h0;
    std::size_t h1;
    long long chi;
};

struct CohomologyTable {
    std::string matrix_id;
    std::vector<CohomologyRecord> records;

    std::vector<std::size_t> h1_column() const;
    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

/// Records for d = -1 ... d_max.
CohomologyTable cohomology_table(const LinFormMatrix& a, int d_max,
                                 const std::string& matrix_id = "matrix");

struct GeneratorProfile {
    /// twist degree d -> number of minimal generators of sections of E(d);
    /// degrees with no generators are omitted.
    std::map<int, std::size_t> counts;
    int d_max = 0;
    /// True once d_max reaches one past the first twist with h^1 = 0: by
    /// Castelnuovo-Mumford regularity no generators can appear later.
    bool complete = false;

    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

/// Minimal generator counts of the module of twisted sections of the kernel,
/// degree by degree up to d_max.
GeneratorProfile generator_profile(const LinFormMatrix& a, int d_max);

}  // namespace steiner

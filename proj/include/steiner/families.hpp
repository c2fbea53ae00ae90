#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "steiner/linform.hpp"
#include "steiner/random.hpp"

namespace steiner {

/// Presentation of S^k(Omega(1)) on P^n: rows are the degree-(k-1) monomials,
/// columns the degree-k monomials (graded-lex), entry x_i where col = row * x_i.
LinFormMatrix omega_symmetric(std::size_t n, std::size_t k,
                              const Field& field = Field::rationals());

/// The c x (2c+2) matrix on P^2 with a rank c+2 kernel.
LinFormMatrix p2_min_family(std::size_t c, const Field& field = Field::rationals());

/// The c x (2c+2n-2) matrix on P^n with a rank c+2(n-1) kernel.
///
/// Left part: even variables, largest index first; right part: odd variables,
/// smallest first. Each variable fills a diagonal (row r, column offset + r),
/// offsets 0, 2, 4, ... within its part. Odd x_i (i >= 3) also puts -x_i on
/// the left, one past the diagonal of x_{i-3}, in rows 1..c-2; even x_i
/// (i >= 2) puts x_i on the right, one before the diagonal of x_{i-1}, in
/// rows 3..c.
LinFormMatrix pn_min_family(std::size_t n, std::size_t c,
                            const Field& field = Field::rationals());

LinFormMatrix block_diagonal(const std::vector<LinFormMatrix>& blocks);

struct KTypeRecipe {
    std::size_t k = 1;
    /// alphas[j-1] = number of blocks S^j(Omega(1)).
    std::vector<std::size_t> alphas;
    std::size_t rewire_count = 0;
    /// Block degrees in assembly order; empty means descending degree.
    std::vector<std::size_t> block_order;

    std::size_t total_blocks() const;
    /// block_order, or the descending default.
    std::vector<std::size_t> blocks() const;
    /// Throws std::invalid_argument.
    void validate() const;

    nlohmann::ordered_json to_json() const;
    static KTypeRecipe from_json(const nlohmann::ordered_json& j);
};

/// Block-diagonal of omega_symmetric(2, j) blocks, then for each of the
/// blocks 3 ... m+2: its pure-t column is deleted and t moves to the pure-x
/// column of the block two back and the pure-y column of the block one back,
/// on the row of t^(j-1).
LinFormMatrix ktype_build(const KTypeRecipe& recipe, const Field& field = Field::rationals());

struct FamilyDescriptor {
    /// omega-symmetric | p2-min | pn-min | ktype
    std::string family;
    std::size_t n = 2;
    std::size_t c = 0;
    std::size_t k = 0;
    std::optional<KTypeRecipe> recipe;
    std::string notes;

    nlohmann::ordered_json to_json() const;
    static FamilyDescriptor from_json(const nlohmann::ordered_json& j);
};

LinFormMatrix build(const FamilyDescriptor& d, const Field& field = Field::rationals());

/// A seeded search (augment, reduce) ran out of attempts.
class SearchFailure : public std::runtime_error {
public:
    SearchFailure(const std::string& what, std::uint64_t seed, std::size_t attempts)
        : std::runtime_error(what + " (seed " + std::to_string(seed) + ", " +
                             std::to_string(attempts) + " attempts)"),
          seed_(seed),
          attempts_(attempts) {}
    std::uint64_t seed() const { return seed_; }
    std::size_t attempts() const { return attempts_; }

private:
    std::uint64_t seed_;
    std::size_t attempts_;
};

struct SearchOptions {
    /// Primes for the exhaustive part of the acceptance test of a candidate.
    std::vector<std::uint32_t> primes{5};
    /// Extra random rational lines (rational matrices only).
    std::size_t random_trials = 20;
    std::size_t max_attempts = 64;
};

/// The test every search candidate must pass: h^0(E) = 0, pointwise
/// surjective, and uniform with splitting (-1^c, 0^(x-2c)) on every line
/// over each prime plus seeded rational lines.
bool one_type_gate(const LinFormMatrix& a, const SearchOptions& options = {},
                   std::uint64_t seed = kDefaultSeed);

/// Appends i random columns (coefficients in [-3, 3]) keeping the kernel
/// 1-type uniform; i may not exceed (c-2)(n-1).
LinFormMatrix augment_columns(const LinFormMatrix& a, std::size_t i,
                              std::uint64_t seed = kDefaultSeed,
                              const SearchOptions& options = {});

struct Reduction {
    LinFormMatrix matrix;
    std::size_t removed = 0;
    std::size_t attempts = 0;
};

/// Mixes the columns by a seeded invertible matrix, then deletes columns
/// greedily while one_type_gate holds, until the kernel rank is c+2(n-1).
Reduction reduce_to_minimal(const LinFormMatrix& a, std::uint64_t seed = kDefaultSeed,
                            const SearchOptions& options = {});

}  // namespace steiner

#include "steiner/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "steiner/cohomology.hpp"
#include "steiner/uniformity.hpp"

namespace steiner {

namespace {

FieldElement one(const Field& f) { return FieldElement::one(f); }

std::size_t monomial_index(const std::vector<std::vector<unsigned>>& mons,
                           const std::vector<unsigned>& m) {
    auto it = std::find(mons.begin(), mons.end(), m);
    return static_cast<std::size_t>(it - mons.begin());
}

std::vector<unsigned> pure_power(std::size_t num_vars, std::size_t var, std::size_t degree) {
    std::vector<unsigned> m(num_vars, 0);
    m[var] = static_cast<unsigned>(degree);
    return m;
}

std::size_t require_count(const nlohmann::ordered_json& j, const char* key, std::size_t fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_number_unsigned()) {
        throw std::invalid_argument(std::string("\"") + key + "\" must be a non-negative integer");
    }
    return j.at(key).get<std::size_t>();
}

}  // namespace

LinFormMatrix omega_symmetric(std::size_t n, std::size_t k, const Field& field) {
    if (n < 2 || k < 1) throw std::invalid_argument("omega_symmetric needs n >= 2 and k >= 1");
    const auto rows = monomials(n, k - 1);
    const auto cols = monomials(n, k);
    LinFormMatrix a(field, n, rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t v = 0; v <= n; ++v) {
            auto m = rows[r];
            ++m[v];
            a.add_term(r, monomial_index(cols, m), v, one(field));
        }
    }
    return a;
}

LinFormMatrix p2_min_family(std::size_t c, const Field& field) {
    if (c < 2) throw std::invalid_argument("p2_min_family needs c >= 2");
    // 0-based first column of the xy-block of row i (1-based)
    auto block = [](std::size_t i) -> std::size_t {
        if (i == 1) return 0;
        if (i == 2) return 3;
        return 2 * i;
    };
    LinFormMatrix a(field, 2, c, 2 * c + 2);
    const FieldElement e = one(field);
    for (std::size_t i = 1; i <= c; ++i) {
        const std::size_t row = i - 1;
        a.add_term(row, block(i), 0, e);
        a.add_term(row, block(i) + 1, 1, e);
        if (i == 1) {
            a.add_term(row, 2, 2, e);
        } else if (i == 2) {
            a.add_term(row, 5, 2, e);
        } else {
            a.add_term(row, block(i - 2), 2, e);
            a.add_term(row, block(i - 1) + 1, 2, e);
        }
    }
    return a;
}

LinFormMatrix pn_min_family(std::size_t n, std::size_t c, const Field& field) {
    if (n < 2 || c < 2) throw std::invalid_argument("pn_min_family needs n >= 2 and c >= 2");
    std::vector<std::size_t> evens, odds;
    for (std::size_t v = 0; v <= n; ++v) (v % 2 == 0 ? evens : odds).push_back(v);
    std::reverse(evens.begin(), evens.end());
    const std::size_t left = c + 2 * (evens.size() - 1);
    const std::size_t right = c + 2 * (odds.size() - 1);
    // offset of each variable's diagonal within its part
    std::map<std::size_t, long> offset;
    for (std::size_t k = 0; k < evens.size(); ++k) offset[evens[k]] = 2 * static_cast<long>(k);
    for (std::size_t k = 0; k < odds.size(); ++k) offset[odds[k]] = 2 * static_cast<long>(k);

    LinFormMatrix a(field, n, c, left + right);
    const FieldElement e = one(field);
    // row r (1-based) of a diagonal at `off` sits in column off + r (1-based)
    auto diagonal = [&](std::size_t part_start, long off, std::size_t first_row,
                        std::size_t last_row, std::size_t var, const FieldElement& coeff) {
        for (std::size_t r = first_row; r <= last_row; ++r) {
            const long col = off + static_cast<long>(r) - 1;
            a.add_term(r - 1, part_start + static_cast<std::size_t>(col), var, coeff);
        }
    };
    for (std::size_t v : evens) diagonal(0, offset[v], 1, c, v, e);
    for (std::size_t v : odds) diagonal(left, offset[v], 1, c, v, e);
    for (std::size_t i = 2; i <= n; ++i) {
        if (i % 2 == 1) {
            diagonal(0, offset[i - 3] + 1, 1, c - 2, i, -e);
        } else {
            diagonal(left, offset[i - 1] - 1, 3, c, i, e);
        }
    }
    return a;
}

LinFormMatrix block_diagonal(const std::vector<LinFormMatrix>& blocks) {
    if (blocks.empty()) throw std::invalid_argument("no blocks");
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        if (b.n() != blocks.front().n() || !(b.field() == blocks.front().field())) {
            throw std::invalid_argument("blocks must share n and field");
        }
        rows += b.rows();
        cols += b.cols();
    }
    LinFormMatrix a(blocks.front().field(), blocks.front().n(), rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i) {
            for (std::size_t j = 0; j < b.cols(); ++j) a.set(r0 + i, c0 + j, b(i, j));
        }
        r0 += b.rows();
        c0 += b.cols();
    }
    return a;
}

std::size_t KTypeRecipe::total_blocks() const {
    return std::accumulate(alphas.begin(), alphas.end(), std::size_t{0});
}

std::vector<std::size_t> KTypeRecipe::blocks() const {
    if (!block_order.empty()) return block_order;
    std::vector<std::size_t> out;
    for (std::size_t j = alphas.size(); j >= 1; --j) out.insert(out.end(), alphas[j - 1], j);
    return out;
}

void KTypeRecipe::validate() const {
    if (k < 1) throw std::invalid_argument("recipe: k must be >= 1");
    if (alphas.size() != k) {
        throw std::invalid_argument("recipe: need exactly k = " + std::to_string(k) +
                                    " multiplicities, got " + std::to_string(alphas.size()));
    }
    if (alphas.back() == 0) throw std::invalid_argument("recipe: alpha_k must be positive");
    const std::size_t alpha = total_blocks();
    if (rewire_count > 0 && alpha < 3) {
        throw std::invalid_argument("recipe: rewiring needs at least 3 blocks");
    }
    if (rewire_count > 0 && rewire_count > alpha - 2) {
        throw std::invalid_argument("recipe: at most alpha - 2 = " + std::to_string(alpha - 2) +
                                    " blocks can be rewired");
    }
    if (!block_order.empty()) {
        std::vector<std::size_t> counts(k, 0);
        for (std::size_t j : block_order) {
            if (j < 1 || j > k) throw std::invalid_argument("recipe: block degree out of range");
            ++counts[j - 1];
        }
        if (counts != alphas) {
            throw std::invalid_argument("recipe: block order does not match multiplicities");
        }
    }
}

nlohmann::ordered_json KTypeRecipe::to_json() const {
    nlohmann::ordered_json j;
    j["k"] = k;
    j["alphas"] = alphas;
    j["rewire"] = rewire_count;
    j["order"] = blocks();
    return j;
}

KTypeRecipe KTypeRecipe::from_json(const nlohmann::ordered_json& j) {
    KTypeRecipe r;
    r.k = require_count(j, "k", 1);
    if (j.contains("alphas")) r.alphas = j.at("alphas").get<std::vector<std::size_t>>();
    r.rewire_count = require_count(j, "rewire", 0);
    if (j.contains("order")) r.block_order = j.at("order").get<std::vector<std::size_t>>();
    r.validate();
    return r;
}

LinFormMatrix ktype_build(const KTypeRecipe& recipe, const Field& field) {
    recipe.validate();
    const auto degrees = recipe.blocks();
    std::vector<LinFormMatrix> blocks;
    std::vector<std::size_t> row_start, col_start;
    std::size_t r0 = 0, c0 = 0;
    for (std::size_t j : degrees) {
        blocks.push_back(omega_symmetric(2, j, field));
        row_start.push_back(r0);
        col_start.push_back(c0);
        r0 += blocks.back().rows();
        c0 += blocks.back().cols();
    }
    LinFormMatrix a = block_diagonal(blocks);
    // pure-v column of block b, in the block-diagonal coordinates
    auto pure_column = [&](std::size_t b, std::size_t var) {
        return col_start[b] + monomial_index(monomials(2, degrees[b]), pure_power(3, var, degrees[b]));
    };
    std::vector<std::size_t> erased;
    const FieldElement e = one(field);
    for (std::size_t b = 2; b < 2 + recipe.rewire_count; ++b) {
        const std::size_t j = degrees[b];
        const std::size_t row =
            row_start[b] + monomial_index(monomials(2, j - 1), pure_power(3, 2, j - 1));
        erased.push_back(pure_column(b, 2));
        a.add_term(row, pure_column(b - 2, 0), 2, e);
        a.add_term(row, pure_column(b - 1, 1), 2, e);
    }
    return delete_columns(a, erased);
}

nlohmann::ordered_json FamilyDescriptor::to_json() const {
    nlohmann::ordered_json j;
    j["id"] = family;
    j["n"] = n;
    if (family != "omega-symmetric" && family != "ktype") j["c"] = c;
    if (family == "omega-symmetric") j["k"] = k;
    if (recipe) j["recipe"] = recipe->to_json();
    if (!notes.empty()) j["notes"] = notes;
    return j;
}

FamilyDescriptor FamilyDescriptor::from_json(const nlohmann::ordered_json& j) {
    FamilyDescriptor d;
    if (!j.contains("id") || !j.at("id").is_string()) {
        throw std::invalid_argument("family descriptor needs a string \"id\"");
    }
    d.family = j.at("id").get<std::string>();
    d.n = require_count(j, "n", 2);
    d.c = require_count(j, "c", 0);
    d.k = require_count(j, "k", 0);
    if (j.contains("recipe")) d.recipe = KTypeRecipe::from_json(j.at("recipe"));
    if (j.contains("notes")) d.notes = j.at("notes").get<std::string>();
    return d;
}

LinFormMatrix build(const FamilyDescriptor& d, const Field& field) {
    if (d.family == "omega-symmetric") return omega_symmetric(d.n, d.k, field);
    if (d.family == "p2-min") return p2_min_family(d.c, field);
    if (d.family == "pn-min") return pn_min_family(d.n, d.c, field);
    if (d.family == "ktype") {
        if (!d.recipe) throw std::invalid_argument("ktype family needs a recipe");
        return ktype_build(*d.recipe, field);
    }
    throw std::invalid_argument("unknown family '" + d.family +
                                "' (expected omega-symmetric, p2-min, pn-min or ktype)");
}

bool one_type_gate(const LinFormMatrix& a, const SearchOptions& options, std::uint64_t seed) {
    const std::size_t c = a.rows();
    const std::size_t x = a.cols();
    if (x < 2 * c) return false;
    // h^0(E) = 0: A has no constant kernel vector
    if (h0(a, 0) != 0) return false;
    std::vector<int> degrees(c, -1);
    degrees.insert(degrees.end(), x - 2 * c, 0);
    const SplittingType expected(std::move(degrees));
    std::vector<std::uint32_t> primes = options.primes;
    if (a.field().is_prime()) primes = {a.field().characteristic()};
    for (std::uint32_t p : primes) {
        const auto report = check_exhaustive(a, p);
        if (report.verdict != Verdict::uniform || report.generic_splitting != expected ||
            !report.surjective.value_or(false)) {
            return false;
        }
    }
    if (a.field().is_rational() && options.random_trials > 0) {
        const auto report = check_random(a, options.random_trials, seed);
        if (report.verdict == Verdict::non_uniform || report.generic_splitting != expected) {
            return false;
        }
    }
    return true;
}

LinFormMatrix augment_columns(const LinFormMatrix& a, std::size_t i, std::uint64_t seed,
                              const SearchOptions& options) {
    const std::size_t c = a.rows();
    const std::size_t n = a.n();
    const std::size_t budget = c >= 2 ? (c - 2) * (n - 1) : 0;
    if (i > budget) {
        throw std::invalid_argument("cannot add " + std::to_string(i) +
                                    " columns: the budget (c-2)(n-1) is " +
                                    std::to_string(budget));
    }
    if (i == 0) return a;
    Rng rng(seed);
    const std::size_t coords = c * (n + 1);
    for (std::size_t attempt = 1; attempt <= options.max_attempts; ++attempt) {
        std::vector<std::vector<LinearForm>> columns;
        for (std::size_t k = 0; k < i; ++k) {
            std::vector<LinearForm> col;
            for (std::size_t r = 0; r < c; ++r) col.push_back(random_form(a.field(), n, rng));
            columns.push_back(std::move(col));
        }
        LinFormMatrix candidate = append_columns(a, columns);
        // the columns, as vectors of coefficients, must stay independent
        ScalarMatrix flat(a.field(), coords, candidate.cols());
        for (std::size_t j = 0; j < candidate.cols(); ++j) {
            for (std::size_t r = 0; r < c; ++r) {
                for (std::size_t v = 0; v <= n; ++v) flat(r * (n + 1) + v, j) = candidate(r, j)[v];
            }
        }
        if (rank(flat) != candidate.cols()) continue;
        if (one_type_gate(candidate, options, seed + attempt)) return candidate;
    }
    throw SearchFailure("augment_columns found no uniform extension", seed, options.max_attempts);
}

Reduction reduce_to_minimal(const LinFormMatrix& a, std::uint64_t seed,
                            const SearchOptions& options) {
    const std::size_t c = a.rows();
    const std::size_t target = 2 * c + 2 * (a.n() - 1);
    if (a.cols() <= target) return {a, 0, 0};
    Rng rng(seed);
    for (std::size_t attempt = 1; attempt <= options.max_attempts; ++attempt) {
        const auto mix = random_invertible(a.field(), a.cols(), rng);
        LinFormMatrix current = row_col_transform(a, ScalarMatrix::identity(a.field(), c), mix);
        for (std::size_t j = current.cols(); j-- > 0 && current.cols() > target;) {
            LinFormMatrix trial = delete_columns(current, {j});
            if (one_type_gate(trial, options, seed + attempt)) current = std::move(trial);
        }
        if (current.cols() == target) return {current, a.cols() - target, attempt};
    }
    throw SearchFailure("reduce_to_minimal stalled above the minimal rank", seed,
                        options.max_attempts);
}

}  // namespace steiner

#include "steiner/random.hpp"

namespace steiner {

ScalarMatrix random_matrix(const Field& field, std::size_t rows, std::size_t cols, Rng& rng,
                           long long lo, long long hi) {
    std::vector<long long> values(rows * cols);
    for (auto& v : values) v = rng.uniform(lo, hi);
    return ScalarMatrix::from_ints(field, rows, cols, values);
}

ScalarMatrix random_invertible(const Field& field, std::size_t n, Rng& rng, long long lo,
                               long long hi) {
    while (true) {
        ScalarMatrix m = random_matrix(field, n, n, rng, lo, hi);
        if (is_invertible(m)) return m;
    }
}

LinearForm random_form(const Field& field, std::size_t n, Rng& rng, long long lo, long long hi) {
    std::vector<FieldElement> coeffs;
    coeffs.reserve(n + 1);
    for (std::size_t v = 0; v <= n; ++v) coeffs.emplace_back(field, rng.uniform(lo, hi));
    return LinearForm(field, std::move(coeffs));
}

}  // namespace steiner

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "steiner/linform.hpp"
#include "steiner/matrix.hpp"

namespace steiner {

/// Seed used whenever the caller does not supply one.
inline constexpr std::uint64_t kDefaultSeed = 1729;

/// Seeded generator whose outputs are identical across platforms (the
/// standard distributions are not, so ranges are mapped by hand).
class Rng {
public:
    explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

    /// Uniform-ish integer in [lo, hi].
    long long uniform(long long lo, long long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(engine_() % span);
    }
    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// Matrix with integer entries drawn from [lo, hi].
ScalarMatrix random_matrix(const Field& field, std::size_t rows, std::size_t cols, Rng& rng,
                           long long lo = -3, long long hi = 3);

/// Invertible n x n matrix with entries in [lo, hi], by rejection.
ScalarMatrix random_invertible(const Field& field, std::size_t n, Rng& rng, long long lo = -3,
                               long long hi = 3);

/// Linear form in n+1 variables with coefficients in [lo, hi].
LinearForm random_form(const Field& field, std::size_t n, Rng& rng, long long lo = -3,
                       long long hi = 3);

}  // namespace steiner

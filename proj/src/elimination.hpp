#pragma once

// Fraction-free elimination kernels shared by the exact linear algebra
// routines. Each Ring supplies value_type, zero(), one(), is_zero(a),
// mul(a, b), sub(a, b) and exact_div(a, b); exact_div is only ever called
// when the quotient lies in the ring.

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace steiner::detail {

struct IntegerRing {
    using value_type = mpz_class;
    static mpz_class zero() { return 0; }
    static mpz_class one() { return 1; }
    static bool is_zero(const mpz_class& a) { return sgn(a) == 0; }
    static mpz_class mul(const mpz_class& a, const mpz_class& b) { return a * b; }
    static mpz_class sub(const mpz_class& a, const mpz_class& b) { return a - b; }
    static mpz_class add(const mpz_class& a, const mpz_class& b) { return a + b; }
    static mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
        assert(mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()));
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
};

class PrimeRing {
public:
    using value_type = std::uint32_t;
    explicit PrimeRing(std::uint32_t p) : p_(p) {}

    std::uint32_t modulus() const { return p_; }
    static std::uint32_t zero() { return 0; }
    static std::uint32_t one() { return 1; }
    static bool is_zero(std::uint32_t a) { return a == 0; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + (p_ - b);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    }
    std::uint32_t inverse(std::uint32_t a) const {
        std::int64_t r0 = p_, r1 = a, t0 = 0, t1 = 1;
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            std::int64_t tmp = r0 - q * r1;
            r0 = r1;
            r1 = tmp;
            tmp = t0 - q * t1;
            t0 = t1;
            t1 = tmp;
        }
        return static_cast<std::uint32_t>(t0 < 0 ? t0 + p_ : t0);
    }
    std::uint32_t exact_div(std::uint32_t a, std::uint32_t b) const {
        if (b != cached_divisor_) {
            cached_divisor_ = b;
            cached_inverse_ = inverse(b);
        }
        return mul(a, cached_inverse_);
    }

private:
    std::uint32_t p_;
    mutable std::uint32_t cached_divisor_ = 1;
    mutable std::uint32_t cached_inverse_ = 1;
};

/// Polynomials over a base ring, lowest coefficient first, trimmed.
template <class Base>
class PolyRing {
public:
    using coeff_type = typename Base::value_type;
    using value_type = std::vector<coeff_type>;

    explicit PolyRing(Base base) : base_(std::move(base)) {}

    const Base& base() const { return base_; }
    static value_type zero() { return {}; }
    value_type one() const { return {base_.one()}; }
    static bool is_zero(const value_type& a) { return a.empty(); }

    value_type mul(const value_type& a, const value_type& b) const {
        if (a.empty() || b.empty()) return {};
        value_type out(a.size() + b.size() - 1, base_.zero());
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (base_.is_zero(a[i])) continue;
            for (std::size_t j = 0; j < b.size(); ++j) {
                out[i + j] = base_.add(out[i + j], base_.mul(a[i], b[j]));
            }
        }
        trim(out);
        return out;
    }

    value_type sub(const value_type& a, const value_type& b) const {
        value_type out(std::max(a.size(), b.size()), base_.zero());
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) out[i] = base_.sub(out[i], b[i]);
        trim(out);
        return out;
    }

    /// Long division; the quotient is known to lie in Base[t].
    value_type exact_div(const value_type& a, const value_type& b) const {
        assert(!b.empty());
        if (a.empty()) return {};
        value_type rem = a;
        value_type quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, base_.zero());
        const coeff_type& lead = b.back();
        while (!rem.empty() && rem.size() >= b.size()) {
            std::size_t shift = rem.size() - b.size();
            coeff_type q = base_.exact_div(rem.back(), lead);
            for (std::size_t j = 0; j < b.size(); ++j) {
                rem[shift + j] = base_.sub(rem[shift + j], base_.mul(q, b[j]));
            }
            quot[shift] = q;
            assert(base_.is_zero(rem.back()));
            trim(rem);
        }
        assert(rem.empty());
        trim(quot);
        return quot;
    }

    void trim(value_type& a) const {
        while (!a.empty() && base_.is_zero(a.back())) a.pop_back();
    }

private:
    Base base_;
};

/// Row-major working grid.
template <class T>
struct Grid {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<T> data;

    T& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const T& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols; ++j) std::swap(at(a, j), at(b, j));
    }
};

/// Bareiss elimination to echelon form; returns the rank. Pivot: first row
/// (at or below the current rank) with a nonzero entry in the column.
template <class Ring>
std::size_t bareiss_rank(const Ring& ring, Grid<typename Ring::value_type>& g) {
    using T = typename Ring::value_type;
    T prev = ring.one();
    std::size_t r = 0;
    for (std::size_t col = 0; col < g.cols && r < g.rows; ++col) {
        std::size_t piv = r;
        while (piv < g.rows && ring.is_zero(g.at(piv, col))) ++piv;
        if (piv == g.rows) continue;
        g.swap_rows(r, piv);
        const T pivot = g.at(r, col);
        for (std::size_t i = r + 1; i < g.rows; ++i) {
            const T factor = g.at(i, col);
            for (std::size_t j = col + 1; j < g.cols; ++j) {
                T v = ring.sub(ring.mul(pivot, g.at(i, j)), ring.mul(factor, g.at(r, j)));
                g.at(i, j) = ring.exact_div(v, prev);
            }
            g.at(i, col) = ring.zero();
        }
        prev = pivot;
        ++r;
    }
    return r;
}

/// Fraction-free Gauss-Jordan. On return every pivot row i has the common
/// value `scale` at column pivots[i] and zeros in all other pivot columns.
template <class T>
struct ReducedForm {
    std::vector<std::size_t> pivots;
    T scale;
};

template <class Ring>
ReducedForm<typename Ring::value_type> fraction_free_rref(const Ring& ring,
                                                          Grid<typename Ring::value_type>& g) {
    using T = typename Ring::value_type;
    T prev = ring.one();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < g.cols && r < g.rows; ++col) {
        std::size_t piv = r;
        while (piv < g.rows && ring.is_zero(g.at(piv, col))) ++piv;
        if (piv == g.rows) continue;
        g.swap_rows(r, piv);
        const T pivot = g.at(r, col);
        for (std::size_t i = 0; i < g.rows; ++i) {
            if (i == r) continue;
            const T factor = g.at(i, col);
            for (std::size_t j = 0; j < g.cols; ++j) {
                if (j == col) continue;
                T v = ring.sub(ring.mul(pivot, g.at(i, j)), ring.mul(factor, g.at(r, j)));
                g.at(i, j) = ring.exact_div(v, prev);
            }
            g.at(i, col) = ring.zero();
        }
        prev = pivot;
        pivots.push_back(col);
        ++r;
    }
    return {std::move(pivots), prev};
}

}  // namespace steiner::detail

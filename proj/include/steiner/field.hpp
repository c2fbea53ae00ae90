#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace steiner {

/// Base field of a computation: the rationals or a prime field F_p with p < 2^31.
class Field {
public:
    enum class Kind { rational, prime };

    Field() = default;

    static Field rationals() { return Field{}; }
    /// Throws std::invalid_argument unless p is a prime below 2^31.
    static Field prime(std::uint32_t p);
    /// Accepts the tags "Q" and "Fp:<p>".
    static Field parse(std::string_view tag);

    Kind kind() const { return kind_; }
    bool is_rational() const { return kind_ == Kind::rational; }
    bool is_prime() const { return kind_ == Kind::prime; }
    /// 0 for the rationals.
    std::uint32_t characteristic() const { return p_; }
    std::string tag() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    Field(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

    Kind kind_ = Kind::rational;
    std::uint32_t p_ = 0;
};

bool is_prime_number(std::uint64_t n);

/// An element of a Field. Rationals are kept canonical (reduced, positive
/// denominator); residues are kept in [0, p).
class FieldElement {
public:
    FieldElement() : value_(mpq_class(0)) {}
    FieldElement(const Field& field, long long value);
    FieldElement(const Field& field, const mpq_class& value);
    explicit FieldElement(const mpq_class& value);

    static FieldElement zero(const Field& field) { return FieldElement(field, 0); }
    static FieldElement one(const Field& field) { return FieldElement(field, 1); }

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Only valid for rational elements.
    const mpq_class& rational() const;
    /// Only valid for prime-field elements.
    std::uint32_t residue() const;

    /// Maps this element into `target`. Rationals map to F_p when the
    /// denominator is invertible; F_p maps to itself only.
    FieldElement coerce(const Field& target) const;

    FieldElement inverse() const;

    FieldElement& operator+=(const FieldElement& rhs);
    FieldElement& operator-=(const FieldElement& rhs);
    FieldElement& operator*=(const FieldElement& rhs);
    FieldElement& operator/=(const FieldElement& rhs);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    FieldElement operator-() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b);

    /// "3", "-1/2" for rationals; the canonical residue for F_p.
    std::string to_string() const;

private:
    FieldElement(const Field& field, std::uint32_t residue, int /*tag*/)
        : field_(field), value_(residue) {}

    void require_same_field(const FieldElement& rhs) const;

    Field field_;
    std::variant<mpq_class, std::uint32_t> value_;
};

/// Parses "a", "-a" or "a/b" into an element of `field`.
FieldElement parse_scalar(const Field& field, std::string_view text);

}  // namespace steiner

#include "steiner/field.hpp"

#include <charconv>
#include <stdexcept>

namespace steiner {

namespace {

constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 31;

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    // a != 0 mod p; extended Euclid on signed 64-bit values.
    std::int64_t r0 = p, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (t0 < 0) t0 += p;
    return static_cast<std::uint32_t>(t0);
}

std::uint32_t reduce_mpz(const mpz_class& z, std::uint32_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

bool is_prime_number(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

Field Field::prime(std::uint32_t p) {
    if (p >= kMaxPrime || !is_prime_number(p)) {
        throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                    " is not a prime below 2^31");
    }
    return Field(Kind::prime, p);
}

Field Field::parse(std::string_view tag) {
    if (tag == "Q") return rationals();
    if (tag.substr(0, 3) == "Fp:") {
        auto digits = tag.substr(3);
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc{} && ptr == digits.data() + digits.size() && !digits.empty() &&
            p < kMaxPrime) {
            return prime(static_cast<std::uint32_t>(p));
        }
    }
    throw std::invalid_argument("unknown field tag '" + std::string(tag) +
                                "' (expected Q or Fp:<prime>)");
}

std::string Field::tag() const {
    return is_rational() ? std::string("Q") : "Fp:" + std::to_string(p_);
}

FieldElement::FieldElement(const Field& field, long long value) : field_(field) {
    if (field.is_rational()) {
        value_ = mpq_class(mpz_class(std::to_string(value)));
    } else {
        long long p = field.characteristic();
        long long r = value % p;
        if (r < 0) r += p;
        value_ = static_cast<std::uint32_t>(r);
    }
}

FieldElement::FieldElement(const Field& field, const mpq_class& value) : field_(field) {
    if (field.is_rational()) {
        mpq_class q = value;
        q.canonicalize();
        value_ = std::move(q);
        return;
    }
    const std::uint32_t p = field.characteristic();
    std::uint32_t den = reduce_mpz(value.get_den(), p);
    if (den == 0) {
        throw std::domain_error("denominator of " + value.get_str() + " vanishes in " +
                                field.tag());
    }
    std::uint64_t num = reduce_mpz(value.get_num(), p);
    value_ = static_cast<std::uint32_t>(num * mod_inverse(den, p) % p);
}

FieldElement::FieldElement(const mpq_class& value) : FieldElement(Field::rationals(), value) {}

bool FieldElement::is_zero() const {
    if (field_.is_rational()) return sgn(std::get<mpq_class>(value_)) == 0;
    return std::get<std::uint32_t>(value_) == 0;
}

bool FieldElement::is_one() const {
    if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
    return std::get<std::uint32_t>(value_) == 1;
}

const mpq_class& FieldElement::rational() const {
    if (!field_.is_rational()) throw std::logic_error("element is not rational");
    return std::get<mpq_class>(value_);
}

std::uint32_t FieldElement::residue() const {
    if (!field_.is_prime()) throw std::logic_error("element is not a prime-field residue");
    return std::get<std::uint32_t>(value_);
}

FieldElement FieldElement::coerce(const Field& target) const {
    if (target == field_) return *this;
    if (field_.is_rational()) return FieldElement(target, rational());
    throw std::invalid_argument("cannot map " + field_.tag() + " into " + target.tag());
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (field_.is_rational()) return FieldElement(field_, 1 / rational());
    return FieldElement(field_, mod_inverse(residue(), field_.characteristic()), 0);
}

void FieldElement::require_same_field(const FieldElement& rhs) const {
    if (!(field_ == rhs.field_)) {
        throw std::invalid_argument("field mismatch: " + field_.tag() + " vs " +
                                    rhs.field_.tag());
    }
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
    require_same_field(rhs);
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) += rhs.rational();
    } else {
        std::uint64_t s = std::uint64_t{residue()} + rhs.residue();
        value_ = static_cast<std::uint32_t>(s % field_.characteristic());
    }
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
    require_same_field(rhs);
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) -= rhs.rational();
    } else {
        std::uint64_t p = field_.characteristic();
        value_ = static_cast<std::uint32_t>((residue() + p - rhs.residue()) % p);
    }
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
    require_same_field(rhs);
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) *= rhs.rational();
    } else {
        std::uint64_t prod = std::uint64_t{residue()} * rhs.residue();
        value_ = static_cast<std::uint32_t>(prod % field_.characteristic());
    }
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
    require_same_field(rhs);
    return *this *= rhs.inverse();
}

FieldElement FieldElement::operator-() const {
    return zero(field_) - *this;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string FieldElement::to_string() const {
    if (field_.is_rational()) return rational().get_str();
    return std::to_string(residue());
}

FieldElement parse_scalar(const Field& field, std::string_view text) {
    auto is_integer = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char ch : s) {
            if (ch < '0' || ch > '9') return false;
        }
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                           : text.substr(slash + 1);
    if (!is_integer(num) || !is_integer(den) || den.front() == '-' || den.front() == '+') {
        throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
    }
    if (num.front() == '+') num.remove_prefix(1);
    mpq_class q{mpz_class(std::string(num)), mpz_class(std::string(den))};
    if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator in '" +
                                                           std::string(text) + "'");
    q.canonicalize();
    return FieldElement(field, q);
}

}  // namespace steiner

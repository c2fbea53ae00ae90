#include "steiner/cohomology.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <gmpxx.h>

namespace steiner {

namespace {

void fill_monomials(std::size_t var, std::size_t remaining, std::vector<unsigned>& current,
                    std::vector<std::vector<unsigned>>& out) {
    if (var + 1 == current.size()) {
        current[var] = static_cast<unsigned>(remaining);
        out.push_back(current);
        return;
    }
    for (std::size_t e = remaining + 1; e-- > 0;) {
        current[var] = static_cast<unsigned>(e);
        fill_monomials(var + 1, remaining - e, current, out);
    }
}

class MonomialIndex {
public:
    MonomialIndex(std::size_t n, std::size_t d) : list_(monomials(n, d)) {
        for (std::size_t i = 0; i < list_.size(); ++i) index_.emplace(list_[i], i);
    }
    const std::vector<std::vector<unsigned>>& list() const { return list_; }
    std::size_t size() const { return list_.size(); }
    std::size_t operator[](const std::vector<unsigned>& m) const { return index_.at(m); }

private:
    std::vector<std::vector<unsigned>> list_;
    std::map<std::vector<unsigned>, std::size_t> index_;
};

void require_twist(int d) {
    if (d < -1) throw std::invalid_argument("twist must be >= -1, got " + std::to_string(d));
}

// Image of the degree-(d-1) sections under multiplication by every x_v,
// expressed in degree-d coordinates.
ScalarMatrix multiplication_image(const LinFormMatrix& a, const std::vector<Vector>& sections,
                                  std::size_t d) {
    const MonomialIndex lower(a.n(), d - 1);
    const MonomialIndex upper(a.n(), d);
    const std::size_t vars = a.n() + 1;
    ScalarMatrix image(a.field(), a.cols() * upper.size(), sections.size() * vars);
    for (std::size_t s = 0; s < sections.size(); ++s) {
        for (std::size_t v = 0; v < vars; ++v) {
            const std::size_t col = s * vars + v;
            for (std::size_t j = 0; j < a.cols(); ++j) {
                for (std::size_t m = 0; m < lower.size(); ++m) {
                    const FieldElement& coeff = sections[s][j * lower.size() + m];
                    if (coeff.is_zero()) continue;
                    auto shifted = lower.list()[m];
                    ++shifted[v];
                    image(j * upper.size() + upper[shifted], col) = coeff;
                }
            }
        }
    }
    return image;
}

}  // namespace

std::vector<std::vector<unsigned>> monomials(std::size_t n, std::size_t d) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> current(n + 1, 0);
    fill_monomials(0, d, current, out);
    return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    if (!b.fits_ulong_p()) throw std::overflow_error("binomial coefficient too large");
    return b.get_ui();
}

ScalarMatrix macaulay_matrix(const LinFormMatrix& a, std::size_t d) {
    const MonomialIndex source(a.n(), d);
    const MonomialIndex target(a.n(), d + 1);
    ScalarMatrix m(a.field(), a.rows() * target.size(), a.cols() * source.size());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const LinearForm& form = a(i, j);
            for (std::size_t v = 0; v <= a.n(); ++v) {
                if (form[v].is_zero()) continue;
                for (std::size_t s = 0; s < source.size(); ++s) {
                    auto product = source.list()[s];
                    ++product[v];
                    m(i * target.size() + target[product], j * source.size() + s) += form[v];
                }
            }
        }
    }
    return m;
}

long long euler_characteristic(const LinFormMatrix& a, int d) {
    require_twist(d);
    const auto n = static_cast<long long>(a.n());
    // C(n+d, n) vanishes at d = -1.
    const mpz_class sections_d = d < 0 ? 0 : binomial(n + d, n);
    const mpz_class sections_d1 = binomial(n + d + 1, n);
    mpz_class chi = mpz_class(static_cast<unsigned long>(a.cols())) * sections_d -
                    mpz_class(static_cast<unsigned long>(a.rows())) * sections_d1;
    if (!chi.fits_slong_p()) throw std::overflow_error("Euler characteristic too large");
    return chi.get_si();
}

std::size_t h0(const LinFormMatrix& a, int d) {
    require_twist(d);
    if (d < 0) return 0;
    const auto m = macaulay_matrix(a, static_cast<std::size_t>(d));
    return m.cols() - rank(m);
}

std::size_t h1(const LinFormMatrix& a, int d) {
    if (a.n() < 2) throw std::invalid_argument("h1 requires n >= 2");
    const long long value = static_cast<long long>(h0(a, d)) - euler_characteristic(a, d);
    if (value < 0) throw std::logic_error("negative h1: matrix is not pointwise surjective?");
    return static_cast<std::size_t>(value);
}

std::vector<std::size_t> CohomologyTable::h1_column() const {
    std::vector<std::size_t> out;
    for (const auto& r : records) out.push_back(r.h1);
    return out;
}

nlohmann::ordered_json CohomologyTable::to_json() const {
    nlohmann::ordered_json j;
    j["matrix_id"] = matrix_id;
    j["records"] = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json rec;
        rec["d"] = r.d;
        rec["h0"] = r.h0;
        rec["h1"] = r.h1;
        rec["chi"] = r.chi;
        j["records"].push_back(std::move(rec));
    }
    return j;
}

std::string CohomologyTable::to_text() const {
    std::ostringstream os;
    os << std::setw(4) << "d" << std::setw(8) << "h0" << std::setw(8) << "h1" << std::setw(8)
       << "chi" << '\n';
    for (const auto& r : records) {
        os << std::setw(4) << r.d << std::setw(8) << r.h0 << std::setw(8) << r.h1
           << std::setw(8) << r.chi << '\n';
    }
    return os.str();
}

CohomologyTable cohomology_table(const LinFormMatrix& a, int d_max, const std::string& matrix_id) {
    if (d_max < 0) throw std::invalid_argument("d_max must be >= 0");
    CohomologyTable table{matrix_id, {}};
    for (int d = -1; d <= d_max; ++d) {
        const std::size_t sections = h0(a, d);
        const long long chi = euler_characteristic(a, d);
        const long long first = static_cast<long long>(sections) - chi;
        if (first < 0) throw std::logic_error("negative h1: matrix is not pointwise surjective?");
        table.records.push_back({d, sections, static_cast<std::size_t>(first), chi});
    }
    return table;
}

nlohmann::ordered_json GeneratorProfile::to_json() const {
    nlohmann::ordered_json j;
    nlohmann::ordered_json gens = nlohmann::ordered_json::object();
    for (const auto& [d, count] : counts) gens[std::to_string(d)] = count;
    j["generators"] = std::move(gens);
    j["d_max"] = d_max;
    j["complete"] = complete;
    return j;
}

std::string GeneratorProfile::to_text() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [d, count] : counts) {
        if (!first) out += ", ";
        first = false;
        out += std::to_string(d) + ": " + std::to_string(count);
    }
    out += "}";
    out += complete ? " (complete)" : " (incomplete: raise d_max)";
    return out;
}

GeneratorProfile generator_profile(const LinFormMatrix& a, int d_max) {
    if (d_max < 1) throw std::invalid_argument("d_max must be >= 1");
    GeneratorProfile profile;
    profile.d_max = d_max;
    std::vector<Vector> previous;
    int first_vanishing = -2;
    for (int d = 0; d <= d_max; ++d) {
        const auto mac = macaulay_matrix(a, static_cast<std::size_t>(d));
        std::vector<Vector> sections = kernel_basis(mac);
        std::size_t generated = 0;
        if (d > 0 && !previous.empty()) {
            generated = rank(multiplication_image(a, previous, static_cast<std::size_t>(d)));
        }
        if (sections.size() > generated) {
            profile.counts[d] = sections.size() - generated;
        }
        const long long chi = euler_characteristic(a, d);
        if (first_vanishing == -2 && static_cast<long long>(sections.size()) == chi) {
            first_vanishing = d;
        }
        previous = std::move(sections);
    }
    if (first_vanishing == -2 && h1(a, -1) == 0) first_vanishing = -1;
    profile.complete = first_vanishing != -2 && d_max >= first_vanishing + 1;
    return profile;
}

}  // namespace steiner

#include "steiner/uniformity.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "steiner/serialize.hpp"

namespace steiner {

std::uint64_t line_count(std::size_t n, std::uint32_t p) {
    // (p^(n+1) - 1)(p^n - 1) / ((p^2 - 1)(p - 1))
    mpz_class q = p;
    mpz_class top_a, top_b;
    mpz_pow_ui(top_a.get_mpz_t(), q.get_mpz_t(), n + 1);
    mpz_pow_ui(top_b.get_mpz_t(), q.get_mpz_t(), n);
    mpz_class count = (top_a - 1) * (top_b - 1) / ((q * q - 1) * (q - 1));
    if (!count.fits_ulong_p()) throw std::overflow_error("too many lines");
    return count.get_ui();
}

LineEnumerator::LineEnumerator(std::size_t n, std::uint32_t p)
    : field_(Field::prime(p)), n_(n), p_(p) {
    if (n < 1) throw std::invalid_argument("lines need n >= 1");
}

bool LineEnumerator::advance_cell() {
    ++j_;
    if (j_ > n_) {
        ++i_;
        j_ = i_ + 1;
    }
    return j_ <= n_;
}

std::optional<Line> LineEnumerator::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        free_.assign(2 * n_ - i_ - j_ - 1, 0);
    } else {
        bool carry = true;
        for (std::size_t k = free_.size(); k-- > 0 && carry;) {
            if (++free_[k] < p_) {
                carry = false;
            } else {
                free_[k] = 0;
            }
        }
        if (carry) {
            if (!advance_cell()) {
                done_ = true;
                return std::nullopt;
            }
            free_.assign(2 * n_ - i_ - j_ - 1, 0);
        }
    }
    Point p(n_ + 1, FieldElement::zero(field_));
    Point q(n_ + 1, FieldElement::zero(field_));
    p[i_] = FieldElement::one(field_);
    q[j_] = FieldElement::one(field_);
    std::size_t f = 0;
    for (std::size_t k = i_ + 1; k <= n_; ++k) {
        if (k == j_) continue;
        p[k] = FieldElement(field_, static_cast<long long>(free_[f++]));
    }
    for (std::size_t k = j_ + 1; k <= n_; ++k) {
        q[k] = FieldElement(field_, static_cast<long long>(free_[f++]));
    }
    return Line(std::move(p), std::move(q));
}

std::vector<Line> enumerate_lines(std::size_t n, std::uint32_t p) {
    LineEnumerator it(n, p);
    std::vector<Line> lines;
    while (auto line = it.next()) lines.push_back(std::move(*line));
    return lines;
}

std::string to_string(CheckMode mode) {
    return mode == CheckMode::exhaustive ? "exhaustive-Fp" : "random-Q";
}

std::string to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::uniform: return "uniform";
        case Verdict::non_uniform: return "non-uniform";
        case Verdict::evidence_only: return "evidence-only";
    }
    return "?";
}

namespace {

nlohmann::ordered_json point_json(const Point& pt) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& e : pt) j.push_back(scalar_to_json(e));
    return j;
}

mpq_class as_rational(const FieldElement& e) {
    return e.field().is_prime() ? mpq_class(e.residue()) : e.rational();
}

bool point_less(const Point& a, const Point& b) {
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(),
        [](const FieldElement& x, const FieldElement& y) {
            return as_rational(x) < as_rational(y);
        });
}

bool witness_less(const JumpingLine& a, const JumpingLine& b) {
    if (a.splitting != b.splitting) return a.splitting < b.splitting;
    if (a.line.p() != b.line.p()) return point_less(a.line.p(), b.line.p());
    return point_less(a.line.q(), b.line.q());
}

std::vector<SplittingType> splittings(const LinFormMatrix& a, const std::vector<Line>& lines,
                                      unsigned jobs) {
    std::vector<SplittingType> out(lines.size());
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(
        std::min<std::size_t>(jobs, std::max<std::size_t>(lines.size(), 1)));
    if (jobs <= 1) {
        for (std::size_t k = 0; k < lines.size(); ++k) {
            out[k] = splitting_type(restrict_to_line(a, lines[k]));
        }
        return out;
    }
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        try {
            for (std::size_t k = cursor++; k < lines.size(); k = cursor++) {
                out[k] = splitting_type(restrict_to_line(a, lines[k]));
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    pool.clear();
    if (failure) std::rethrow_exception(failure);
    return out;
}

// The generic type is the most frequent one; ties go to the larger type,
// since jumping lines spread the degrees further apart.
void aggregate(UniformityReport& report, const std::vector<Line>& lines,
               const std::vector<SplittingType>& types) {
    std::map<SplittingType, std::size_t> counts;
    for (const auto& t : types) ++counts[t];
    std::size_t best = 0;
    for (const auto& [type, count] : counts) {
        if (count >= best) {
            best = count;
            report.generic_splitting = type;
        }
    }
    report.lines_checked = lines.size();
    std::vector<JumpingLine> jumping;
    for (std::size_t k = 0; k < lines.size(); ++k) {
        if (types[k] != report.generic_splitting) jumping.push_back({lines[k], types[k]});
    }
    std::sort(jumping.begin(), jumping.end(), witness_less);
    report.jumping_count = jumping.size();
    if (jumping.size() > UniformityReport::kMaxWitnesses) {
        jumping.erase(jumping.begin() + UniformityReport::kMaxWitnesses, jumping.end());
    }
    report.jumping = std::move(jumping);
}

}  // namespace

nlohmann::ordered_json UniformityReport::to_json() const {
    nlohmann::ordered_json j;
    j["matrix_id"] = matrix_id;
    j["field"] = field;
    j["mode"] = to_string(mode);
    j["lines_checked"] = lines_checked;
    j["verdict"] = to_string(verdict);
    j["generic_splitting"] = generic_splitting.degrees();
    j["jumping"] = nlohmann::ordered_json::array();
    for (const auto& w : jumping) {
        nlohmann::ordered_json entry;
        entry["p"] = point_json(w.line.p());
        entry["q"] = point_json(w.line.q());
        entry["splitting"] = w.splitting.degrees();
        j["jumping"].push_back(std::move(entry));
    }
    j["seed"] = seed ? nlohmann::ordered_json(*seed) : nlohmann::ordered_json(nullptr);
    j["jumping_count"] = jumping_count;
    j["surjective"] =
        surjective ? nlohmann::ordered_json(*surjective) : nlohmann::ordered_json(nullptr);
    return j;
}

std::string UniformityReport::to_text() const {
    std::string out;
    const std::string lines = std::to_string(lines_checked) + " lines";
    if (verdict == Verdict::non_uniform) {
        out = "non-uniform: " + std::to_string(jumping_count) + " jumping lines of " +
              std::to_string(lines_checked) + ", generic " + generic_splitting.to_string();
    } else {
        out = to_string(verdict) + " " + generic_splitting.to_string() + ", " + lines;
    }
    if (surjective && !*surjective) out += " (not pointwise surjective)";
    return out;
}

UniformityReport check_exhaustive(const LinFormMatrix& a, std::uint32_t p,
                                  const CheckOptions& options) {
    const Field fp = Field::prime(p);
    const LinFormMatrix ap = a.coerce(fp);
    UniformityReport report;
    report.matrix_id = options.matrix_id;
    report.field = fp.tag();
    report.mode = CheckMode::exhaustive;
    report.surjective = pointwise_surjective(ap, p).surjective;
    const auto lines = enumerate_lines(a.n(), p);
    aggregate(report, lines, splittings(ap, lines, options.jobs));
    report.verdict = report.jumping_count == 0 ? Verdict::uniform : Verdict::non_uniform;
    return report;
}

UniformityReport check_random(const LinFormMatrix& a, std::size_t trials, std::uint64_t seed,
                              const CheckOptions& options) {
    if (trials == 0) throw std::invalid_argument("trials must be >= 1");
    const Field& field = a.field();
    const std::size_t n = a.n();
    std::vector<Line> lines;
    for (std::size_t i = 0; i <= n && lines.size() < trials; ++i) {
        for (std::size_t j = i + 1; j <= n && lines.size() < trials; ++j) {
            Point p(n + 1, FieldElement::zero(field));
            Point q(n + 1, FieldElement::zero(field));
            p[i] = FieldElement::one(field);
            q[j] = FieldElement::one(field);
            lines.emplace_back(std::move(p), std::move(q));
        }
    }
    Rng rng(seed);
    while (lines.size() < trials) {
        std::vector<long long> values(2 * (n + 1));
        for (auto& v : values) v = rng.uniform(-3, 3);
        const auto pair = ScalarMatrix::from_ints(field, 2, n + 1, values);
        if (rank(pair) < 2) continue;
        lines.emplace_back(Point(pair.entries().begin(), pair.entries().begin() + n + 1),
                           Point(pair.entries().begin() + n + 1, pair.entries().end()));
    }
    UniformityReport report;
    report.matrix_id = options.matrix_id;
    report.field = field.tag();
    report.mode = CheckMode::random;
    report.seed = seed;
    aggregate(report, lines, splittings(a, lines, options.jobs));
    report.verdict = report.jumping_count == 0 ? Verdict::evidence_only : Verdict::non_uniform;
    return report;
}

PlaneConditionResult plane_condition(const LinFormMatrix& a, std::uint32_t p) {
    const LinFormMatrix ap = a.coerce(Field::prime(p));
    const std::size_t c = ap.rows();
    LineEnumerator it(ap.n(), p);
    while (auto line = it.next()) {
        if (ap.cols() < 2 * c) return {false, line};
        const auto stacked =
            ScalarMatrix::stack(evaluate(ap, line->p()), evaluate(ap, line->q()));
        if (rank(stacked) < 2 * c) return {false, line};
    }
    return {true, std::nullopt};
}

nlohmann::ordered_json BoundAudit::to_json() const {
    nlohmann::ordered_json j;
    j["c"] = c;
    j["k"] = k;
    j["r"] = r;
    j["lower_bound"] = lower_ok;
    j["upper_bound"] = upper_ok;
    j["gap_free"] = gap_free;
    j["passed"] = passed();
    return j;
}

std::string BoundAudit::to_text() const {
    const long long upper = 2 * static_cast<long long>(c) - k * k + k;
    auto mark = [](bool ok) { return ok ? "ok" : "FAIL"; };
    return "k=" + std::to_string(k) + " r=" + std::to_string(r) + " c=" + std::to_string(c) +
           "\n  r >= (c+2)/k: " + std::to_string(r) + " >= " + std::to_string(c + 2) + "/" +
           std::to_string(k) + " " + mark(lower_ok) + "\n  r <= 2c-k^2+k: " +
           std::to_string(r) + " <= " + std::to_string(upper) + " " + mark(upper_ok) +
           "\n  gap-free: " + mark(gap_free) + "\n";
}

BoundAudit ktype_bound_audit(std::size_t c, const SplittingType& splitting) {
    BoundAudit audit;
    audit.c = c;
    audit.k = -splitting.min();
    audit.r = splitting.rank();
    const long long k = audit.k;
    const long long r = static_cast<long long>(audit.r);
    const long long cc = static_cast<long long>(c);
    audit.lower_ok = k > 0 && r * k >= cc + 2;
    audit.upper_ok = r <= 2 * cc - k * k + k;
    const auto mult = splitting.multiplicities();
    audit.gap_free = !splitting.degrees().empty() && splitting.degrees().back() <= 0;
    for (int d = -audit.k; d <= 0; ++d) {
        if (!mult.contains(d)) audit.gap_free = false;
    }
    return audit;
}

BoundAudit ktype_bound_audit(const LinFormMatrix& a, const UniformityReport& report) {
    if (report.mode != CheckMode::exhaustive || report.verdict != Verdict::uniform) {
        throw std::invalid_argument("bound audit needs an exhaustive uniform report");
    }
    return ktype_bound_audit(a.rows(), report.generic_splitting);
}

}  // namespace steiner

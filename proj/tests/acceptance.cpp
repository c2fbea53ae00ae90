// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "steiner/cohomology.hpp"
#include "steiner/families.hpp"
#include "steiner/random.hpp"
#include "steiner/uniformity.hpp"

using namespace steiner;
using fixtures::one_type;

namespace {

// wall-clock limits, seconds
constexpr double kLimit1 = 1;
constexpr double kLimit2 = 10;
constexpr double kLimit3 = 30;
constexpr double kLimit4 = 30;
constexpr double kLimit5 = 60;
constexpr double kLimit6 = 5;
constexpr double kLimit7 = 5;
constexpr double kLimit8 = 60;
constexpr double kLimit9 = 1;
constexpr double kLimit10 = 60;

constexpr std::size_t kCandidates = 50;
constexpr std::size_t kBruteForceCases = 100;

const Field Q = Field::rationals();

struct Outcome {
    bool ok = true;
    std::string detail;
};

// collects failed clauses; the detail line lists them
struct Clauses {
    bool ok = true;
    std::vector<std::string> failed;
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            failed.push_back(what);
        }
    }
    Outcome outcome(const std::string& summary) const {
        if (ok) return {true, summary};
        std::string d;
        for (const auto& f : failed) d += (d.empty() ? "" : "; ") + f;
        return {false, d};
    }
};

bool uniform_with(const LinFormMatrix& a, std::uint32_t p, const SplittingType& s,
                  std::size_t* lines = nullptr) {
    const auto rep = check_exhaustive(a.coerce(Field::prime(p)), p);
    if (lines) *lines = rep.lines_checked;
    return rep.verdict == Verdict::uniform && rep.generic_splitting == s;
}

std::string to_string(const Point& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ":" : "") + p[i].to_string();
    return s + ")";
}

Outcome criterion1() {
    Clauses cl;
    const auto a = p2_min_family(3);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const auto rep = check_exhaustive(a.coerce(Field::prime(p)), p);
        const std::string at = " over F_" + std::to_string(p);
        cl.expect(rep.verdict == Verdict::uniform, "not uniform" + at);
        cl.expect(rep.generic_splitting == one_type(3, 2), "splitting" + at);
        cl.expect(rep.lines_checked == line_count(2, p), "line count" + at);
        cl.expect(rep.generic_splitting.rank() == 5, "rank" + at);
        cl.expect(rep.generic_splitting.sum() == -3, "c1" + at);
    }
    return cl.outcome("(-1^3, 0^2) on 7/13/31 lines, rank 5, c1 = -3");
}

Outcome criterion2() {
    Clauses cl;
    const auto a = p2_min_family(4);
    std::string ranks;
    for (std::size_t i = 0; i <= 2; ++i) {
        const auto b = augment_columns(a, i, 200 + i);
        const std::size_t r = b.cols() - b.rows();
        ranks += (ranks.empty() ? "" : ",") + std::to_string(r);
        cl.expect(r == 6 + i, "i = " + std::to_string(i) + " gave rank " + std::to_string(r));
        for (std::uint32_t p : {5u, 7u}) {
            cl.expect(uniform_with(b, p, one_type(4, 2 + i)),
                      "i = " + std::to_string(i) + " not 1-type over F_" + std::to_string(p));
        }
        cl.expect(h0(b, 0) == 0, "trivial summand at i = " + std::to_string(i));
    }
    bool rejected = false;
    try {
        augment_columns(a, 3);
    } catch (const std::invalid_argument&) {
        rejected = true;
    }
    cl.expect(rejected, "i = 3 accepted");
    return cl.outcome("ranks " + ranks + " verified over F_5, F_7; i = 3 rejected");
}

Outcome criterion3() {
    Clauses cl;
    for (std::size_t c = 2; c <= 4; ++c) {
        const auto a = pn_min_family(3, c);
        for (std::uint32_t p : {2u, 3u}) {
            const auto rep = check_exhaustive(a.coerce(Field::prime(p)), p);
            const std::string at = "c = " + std::to_string(c) + " over F_" + std::to_string(p);
            cl.expect(rep.lines_checked == (p == 2 ? 35u : 130u), "line count, " + at);
            std::string why = at + ": " + rep.to_text();
            if (!rep.jumping.empty()) {
                const auto& w = rep.jumping.front();
                why += ", e.g. through " + to_string(w.line.p()) + " and " +
                       to_string(w.line.q()) + " type " + w.splitting.to_string();
            }
            cl.expect(rep.verdict == Verdict::uniform && rep.generic_splitting == one_type(c, 4),
                      why);
        }
        cl.expect(a.cols() - a.rows() == c + 4, "rank at c = " + std::to_string(c));
    }
    return cl.outcome("(-1^c, 0^4) for c = 2,3,4 on 35 and 130 lines");
}

Outcome criterion4() {
    Clauses cl;
    const auto big = block_diagonal(std::vector(4, omega_symmetric(2, 1)));
    cl.expect(big.cols() - big.rows() == 8, "start rank");
    const auto red = reduce_to_minimal(big, 11);
    const std::size_t r = red.matrix.cols() - red.matrix.rows();
    cl.expect(r == 6, "rank " + std::to_string(r));
    cl.expect(red.attempts <= 64, "attempts " + std::to_string(red.attempts));
    for (std::uint32_t p : {5u, 7u}) {
        cl.expect(uniform_with(red.matrix, p, one_type(4, 2)),
                  "not 1-type over F_" + std::to_string(p));
    }
    cl.expect(h0(red.matrix, 0) == 0, "trivial summand");
    return cl.outcome("rank 8 -> 6 in " + std::to_string(red.attempts) +
                      " attempts, verified over F_5, F_7");
}

Outcome criterion5() {
    Clauses cl;
    for (std::size_t c = 4; c <= 8; ++c) {
        const auto a = p2_min_family(c);
        const int ci = static_cast<int>(c);
        const int odd = ci % 2;
        const int last = odd ? (ci - 3) / 2 : (ci - 4) / 2;
        const int d_max = last + 2;
        const auto table = cohomology_table(a, d_max);
        const auto h = table.h1_column();  // h[t + 1] = h1(E(t))
        const std::string at = "c = " + std::to_string(c);
        cl.expect(h0(a, 1) == c + 2, at + ": h0(E(1)) = " + std::to_string(h0(a, 1)));
        cl.expect(h[0] == c, at + ": h1(E(-1))");
        cl.expect(h[1] == c - 2, at + ": h1(E)");
        for (std::size_t t = 0; t + 1 < h.size(); ++t) {
            cl.expect(h[t + 1] == (h[t] >= 2 ? h[t] - 2 : 0), at + ": recurrence");
        }
        cl.expect(h[last + 1] == (odd ? 1u : 2u), at + ": last nonzero h1");
        cl.expect(h[last + 2] == 0, at + ": vanishing");
        const std::size_t h02 = h0(a, 2);
        cl.expect(h02 == 3 * c + 6, at + ": h0(E(2)) = " + std::to_string(h02) + ", claimed " +
                                        std::to_string(3 * c + 6) + " < chi(E(2)) = 2c+12");
        const auto g = generator_profile(a, d_max);
        std::map<int, std::size_t> expected{{1, c + 2}};
        if (odd) {
            expected[(ci - 1) / 2] += 1;
        } else {
            expected[ci / 2] += 2;
        }
        cl.expect(g.complete && g.counts == expected, at + ": generators " + g.to_text());
    }
    return cl.outcome("h0(E(1)), h1 column, thresholds, h0(E(2)) and generators for c = 4..8");
}

Outcome criterion6() {
    Clauses cl;
    KTypeRecipe r;
    r.k = 3;
    r.alphas = {1, 2, 1};
    r.rewire_count = 2;
    const auto a = ktype_build(r);
    cl.expect(a == fixtures::display(fixtures::kKTypeRewired), "entrywise mismatch");
    const SplittingType s({-3, -2, -2, -2, -1, -1, -1, -1, 0, 0});
    for (std::uint32_t p : {3u, 5u}) {
        const auto rep = check_exhaustive(a.coerce(Field::prime(p)), p);
        cl.expect(rep.verdict == Verdict::uniform && rep.generic_splitting == s,
                  "F_" + std::to_string(p) + ": " + rep.to_text());
        if (rep.verdict == Verdict::uniform) {
            const auto audit = ktype_bound_audit(a, rep);
            cl.expect(audit.lower_ok, "r >= (c+2)/k");
            cl.expect(audit.upper_ok, "r <= 2c - k^2 + k");
            cl.expect(audit.gap_free, "gap-free");
        }
    }
    return cl.outcome("13 x 23 matrix, (-3, -2^3, -1^4, 0^2) over F_3, F_5, audit passed");
}

Outcome criterion7() {
    Clauses cl;
    for (int k = 1; k <= 3; ++k) {
        std::vector<int> degrees;
        for (int d = -k; d <= 0; ++d) degrees.push_back(d);
        const auto rep = check_exhaustive(omega_symmetric(2, k, Field::prime(3)), 3);
        cl.expect(rep.verdict == Verdict::uniform && rep.generic_splitting == SplittingType(degrees),
                  "k = " + std::to_string(k) + ": " + rep.to_text());
    }
    return cl.outcome("(-k, ..., 0) for k = 1,2,3 over F_3");
}

// fixtures, seeded augmentations, then seeded damage to those (a column
// deleted or a random form added to one entry)
std::vector<LinFormMatrix> candidates() {
    std::vector<LinFormMatrix> out;
    for (std::size_t c = 2; c <= 6; ++c) out.push_back(p2_min_family(c));
    for (std::size_t c = 2; c <= 4; ++c) out.push_back(pn_min_family(3, c));
    for (std::size_t c = 2; c <= 4; ++c) out.push_back(pn_min_family(2, c));
    for (std::size_t c = 1; c <= 4; ++c) out.push_back(block_diagonal(std::vector(c, omega_symmetric(2, 1))));
    out.push_back(omega_symmetric(2, 2));
    out.push_back(fixtures::display("[ x y 0 ]"));
    out.push_back(fixtures::display("[ x y t 0 ]"));
    out.push_back(fixtures::display("[ x y ]"));

    std::uint64_t seed = 300;
    for (std::size_t c = 3; out.size() < 35; c = c == 5 ? 3 : c + 1) {
        const std::size_t i = seed % (c - 1);
        out.push_back(augment_columns(p2_min_family(c), i, seed++));
    }

    Rng rng(400);
    while (out.size() < kCandidates) {
        LinFormMatrix a = out[rng.uniform(0, 34)];
        const std::size_t i = rng.uniform(0, static_cast<long long>(a.rows()) - 1);
        const std::size_t j = rng.uniform(0, static_cast<long long>(a.cols()) - 1);
        if (out.size() % 2 && a.cols() > 1) {
            a = delete_columns(a, {j});
        } else {
            const auto f = random_form(Q, a.n(), rng, -1, 1);
            for (std::size_t v = 0; v <= a.n(); ++v) a.add_term(i, j, v, f[v]);
        }
        out.push_back(a);
    }
    return out;
}

Outcome criterion8() {
    const Field f3 = Field::prime(3);
    std::size_t agree = 0, positive = 0;
    std::string bad;
    const auto all = candidates();
    for (std::size_t idx = 0; idx < all.size(); ++idx) {
        const auto a = all[idx].coerce(f3);
        const auto rep = check_exhaustive(a, 3);
        const bool pencil =
            rep.verdict == Verdict::uniform && a.cols() >= 2 * a.rows() &&
            rep.generic_splitting == one_type(a.rows(), a.cols() - 2 * a.rows());
        const bool plane = plane_condition(a, 3).holds;
        positive += pencil;
        if (plane == pencil) {
            ++agree;
        } else {
            bad += " #" + std::to_string(idx);
        }
    }
    std::ostringstream d;
    d << agree << "/" << all.size() << " agree (" << positive << " uniform, "
      << all.size() - positive << " not)";
    if (!bad.empty()) d << ", disagree:" << bad;
    return {agree == all.size() && all.size() == kCandidates, d.str()};
}

Outcome criterion9() {
    const auto rep = check_exhaustive(fixtures::display("[ x y ]", 2, Field::prime(2)), 2);
    return {rep.verdict == Verdict::non_uniform && rep.jumping_count == 3, rep.to_text()};
}

Outcome criterion10() {
    Clauses cl;
    Rng rng(500);

    std::size_t checks = 0;
    for (const auto& a : {p2_min_family(4), omega_symmetric(2, 2), pn_min_family(3, 3)}) {
        for (int k = 0; k < 10; ++k) {
            const Line l = oracles::random_line(Q, a.n(), rng);
            cl.expect(splitting_type(restrict_to_line(a, l)) ==
                          splitting_type(restrict_to_line(a, oracles::reparametrize(l, rng))),
                      "reparametrization");
            ++checks;
        }
    }

    const auto base = p2_min_family(3);
    for (int k = 0; k < 20; ++k) {
        const auto b = row_col_transform(base, random_invertible(Q, base.rows(), rng),
                                         random_invertible(Q, base.cols(), rng));
        const Line l = oracles::random_line(Q, 2, rng);
        cl.expect(splitting_type(restrict_to_line(base, l)) == splitting_type(restrict_to_line(b, l)),
                  "GL invariance");
        ++checks;
    }

    const Field f3 = Field::prime(3);
    for (const auto& a : {p2_min_family(3, f3), p2_min_family(5, f3), omega_symmetric(2, 3, f3),
                          fixtures::display(fixtures::kKTypeRewired, 2, f3)}) {
        cl.expect(pointwise_surjective(a, 3).surjective, "fixture not surjective");
        for (const auto& l : enumerate_lines(a.n(), 3)) {
            cl.expect(splitting_type(restrict_to_line(a, l)).sum() == -static_cast<int>(a.rows()),
                      "sum rule");
            ++checks;
        }
    }

    for (int k = 0; k < 50; ++k) {
        const std::size_t c = 1 + rng.uniform(0, 3);
        const std::size_t x = 1 + rng.uniform(0, 5);
        const BinaryPencil p(random_matrix(f3, c, x, rng), random_matrix(f3, c, x, rng));
        const std::size_t r = x - generic_rank(p);
        std::size_t prev_f = 0, prev_delta = 0;
        bool ok = true;
        for (std::size_t d = 0; d <= c + 1; ++d) {
            const std::size_t f = section_dim(p, d);
            if (f < prev_f || f - prev_f < prev_delta || f - prev_f > r) ok = false;
            prev_delta = f >= prev_f ? f - prev_f : 0;
            prev_f = f;
        }
        cl.expect(ok && prev_delta == r, "Delta monotonicity");
        ++checks;
    }

    std::size_t brute_agree = 0;
    for (std::size_t k = 0; k < kBruteForceCases; ++k) {
        const BinaryPencil p(random_matrix(f3, 2, 4, rng), random_matrix(f3, 2, 4, rng));
        const auto brute = oracles::brute_force_splitting(p, 2);
        if (brute && *brute == splitting_type(p)) ++brute_agree;
    }
    cl.expect(brute_agree == kBruteForceCases,
              "brute force " + std::to_string(brute_agree) + "/" + std::to_string(kBruteForceCases));

    return cl.outcome(std::to_string(checks) + " property checks, brute force " +
                      std::to_string(brute_agree) + "/" + std::to_string(kBruteForceCases));
}

struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> all{
        {1, "p2_min(3) uniform over F_2, F_3, F_5", kLimit1, criterion1},
        {2, "rank sweep c = 4 by augmentation", kLimit2, criterion2},
        {3, "pn_min(3, c) uniform over F_2, F_3", kLimit3, criterion3},
        {4, "reduction of the c = 4 block matrix", kLimit4, criterion4},
        {5, "cohomology of p2_min(c), 4 <= c <= 8", kLimit5, criterion5},
        {6, "rewired k-type matrix and bound audit", kLimit6, criterion6},
        {7, "symmetric powers of Omega(1)", kLimit7, criterion7},
        {8, "plane condition vs pencil verdict", kLimit8, criterion8},
        {9, "negative control [x y] over F_2", kLimit9, criterion9},
        {10, "property suite", kLimit10, criterion10},
    };

    int failed = 0;
    for (const auto& c : all) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit) {
            o.ok = false;
            o.detail += " [over time limit]";
        }
        failed += !o.ok;
        std::printf("%s  %2d  %-42s %7.2fs / %3.0fs  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name,
                    secs, c.limit, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
    return failed ? 1 : 0;
}

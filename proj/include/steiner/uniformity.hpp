#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "steiner/linform.hpp"
#include "steiner/pencil.hpp"
#include "steiner/random.hpp"

namespace steiner {

/// [n+1 choose 2]_p, the number of lines of P^n(F_p).
std::uint64_t line_count(std::size_t n, std::uint32_t p);

/// Walks the reduced echelon 2 x (n+1) representatives of the lines of
/// P^n(F_p), one Schubert cell (pivot pair) after another.
class LineEnumerator {
public:
    LineEnumerator(std::size_t n, std::uint32_t p);

    /// nullopt once every line has been produced.
    std::optional<Line> next();

private:
    bool advance_cell();

    Field field_;
    std::size_t n_;
    std::uint32_t p_;
    std::size_t i_ = 0;
    std::size_t j_ = 1;
    // free entries of the current cell, as an odometer
    std::vector<std::uint32_t> free_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<Line> enumerate_lines(std::size_t n, std::uint32_t p);

enum class CheckMode { exhaustive, random };
enum class Verdict { uniform, non_uniform, evidence_only };

std::string to_string(CheckMode mode);
std::string to_string(Verdict verdict);

struct JumpingLine {
    Line line;
    SplittingType splitting;
};

struct UniformityReport {
    std::string matrix_id;
    std::string field;
    CheckMode mode = CheckMode::exhaustive;
    std::size_t lines_checked = 0;
    Verdict verdict = Verdict::uniform;
    SplittingType generic_splitting;
    /// At most kMaxWitnesses entries, sorted; jumping_count is exact.
    std::vector<JumpingLine> jumping;
    std::size_t jumping_count = 0;
    std::optional<std::uint64_t> seed;
    /// Pointwise surjectivity over F_p; unknown in random mode.
    std::optional<bool> surjective;

    static constexpr std::size_t kMaxWitnesses = 32;

    nlohmann::ordered_json to_json() const;
    /// "uniform (-1^3, 0^2), 31 lines"
    std::string to_text() const;
};

struct CheckOptions {
    std::string matrix_id = "matrix";
    /// Worker threads; 0 means one per hardware thread.
    unsigned jobs = 1;
};

/// Splitting type on every line of P^n(F_p), with A coerced to F_p.
UniformityReport check_exhaustive(const LinFormMatrix& a, std::uint32_t p,
                                  const CheckOptions& options = {});

/// Splitting type on `trials` lines: the coordinate lines first, then lines
/// through seeded random small-integer points. A verdict of agreement is only
/// evidence.
UniformityReport check_random(const LinFormMatrix& a, std::size_t trials,
                              std::uint64_t seed = kDefaultSeed,
                              const CheckOptions& options = {});

struct PlaneConditionResult {
    bool holds = true;
    std::optional<Line> witness;
};

/// True iff [A(p); A(q)] has rank 2c for every line of P^n(F_p) through p, q.
PlaneConditionResult plane_condition(const LinFormMatrix& a, std::uint32_t p);

struct BoundAudit {
    std::size_t c = 0;
    int k = 0;
    std::size_t r = 0;
    bool lower_ok = false;  // r >= (c+2)/k
    bool upper_ok = false;  // r <= 2c - k^2 + k
    bool gap_free = false;  // every degree -k ... 0 occurs

    bool passed() const { return lower_ok && upper_ok && gap_free; }
    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

BoundAudit ktype_bound_audit(std::size_t c, const SplittingType& splitting);

/// Needs an exhaustive report with verdict uniform.
BoundAudit ktype_bound_audit(const LinFormMatrix& a, const UniformityReport& report);

}  // namespace steiner

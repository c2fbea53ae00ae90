#include "steiner/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "steiner/cohomology.hpp"
#include "steiner/families.hpp"
#include "steiner/pencil.hpp"
#include "steiner/serialize.hpp"
#include "steiner/uniformity.hpp"

namespace steiner::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string input;
    std::string output;
    std::string field;
    std::string format = "text";
    std::string id;
    std::uint64_t seed = kDefaultSeed;
    unsigned jobs = 1;
    int d_max = 2;
    std::size_t trials = 200;
    bool expect_uniform = false;

    // generate
    std::string family;
    std::size_t n = 2;
    std::size_t c = 0;
    std::size_t k = 0;
    std::vector<std::size_t> alphas;
    std::vector<std::size_t> order;
    std::size_t rewire = 0;

    std::string line;
    std::size_t count = 0;
    std::vector<std::uint32_t> primes{5};
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LinFormMatrix load_matrix(const Config& cfg) {
    const std::string text = read_input(cfg.input);
    try {
        return parse(text);
    } catch (const ParseError& e) {
        throw UsageError("malformed matrix file '" + cfg.input + "': " + e.what());
    }
}

std::string matrix_id(const Config& cfg) {
    if (!cfg.id.empty()) return cfg.id;
    if (cfg.input.empty() || cfg.input == "-") return "stdin";
    return std::filesystem::path(cfg.input).stem().string();
}

void emit(const Config& cfg, const std::string& text, std::ostream& out) {
    if (cfg.output.empty()) {
        out << text;
        if (!text.empty() && text.back() != '\n') out << '\n';
        return;
    }
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + cfg.output + "'");
    file << text;
    if (!text.empty() && text.back() != '\n') file << '\n';
}

bool json_output(const Config& cfg) {
    if (cfg.format != "text" && cfg.format != "json") {
        throw UsageError("--format must be text or json");
    }
    return cfg.format == "json";
}

Line parse_line(const std::string& arg, const Field& field, std::size_t n) {
    const auto semi = arg.find(';');
    if (semi == std::string::npos) throw UsageError("--line expects 'p0,...,pn;q0,...,qn'");
    auto point = [&](std::string_view text) {
        Point pt;
        std::size_t start = 0;
        while (true) {
            const auto comma = text.find(',', start);
            pt.push_back(parse_scalar(field, text.substr(start, comma - start)));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (pt.size() != n + 1) {
            throw UsageError("a point of P^" + std::to_string(n) + " needs " +
                             std::to_string(n + 1) + " coordinates");
        }
        return pt;
    };
    const std::string_view view(arg);
    return Line(point(view.substr(0, semi)), point(view.substr(semi + 1)));
}

std::string envelope(const LinFormMatrix& a, const nlohmann::ordered_json& extra_key_value,
                     const char* key) {
    auto j = to_json(a);
    if (!extra_key_value.is_null()) j[key] = extra_key_value;
    return j.dump();
}

int cmd_generate(const Config& cfg, std::ostream& out) {
    FamilyDescriptor d;
    d.family = cfg.family;
    d.n = cfg.n;
    d.c = cfg.c;
    d.k = cfg.k;
    if (d.family == "ktype") {
        KTypeRecipe r;
        r.k = cfg.k;
        r.alphas = cfg.alphas;
        r.rewire_count = cfg.rewire;
        r.block_order = cfg.order;
        d.recipe = r;
    }
    if (d.n == 2) d.notes = "variables (x, y, t) = (x_0, x_1, x_2)";
    const Field field = cfg.field.empty() ? Field::rationals() : Field::parse(cfg.field);
    const LinFormMatrix a = build(d, field);
    if (cfg.format == "display") {
        emit(cfg, serialize(a, Format::display), out);
    } else if (cfg.format == "cas") {
        emit(cfg, serialize(a, Format::cas_export), out);
    } else if (cfg.format == "json" || cfg.format == "text") {
        emit(cfg, envelope(a, d.to_json(), "family"), out);
    } else {
        throw UsageError("--format must be json, display or cas");
    }
    return kExitOk;
}

int cmd_splitting(const Config& cfg, std::ostream& out) {
    LinFormMatrix a = load_matrix(cfg);
    if (!cfg.field.empty()) a = a.coerce(Field::parse(cfg.field));
    const Line line = parse_line(cfg.line, a.field(), a.n());
    const SplittingType s = splitting_type(restrict_to_line(a, line));
    if (json_output(cfg)) {
        nlohmann::ordered_json j;
        j["matrix_id"] = matrix_id(cfg);
        j["field"] = a.field().tag();
        j["splitting"] = s.degrees();
        emit(cfg, j.dump(), out);
    } else {
        emit(cfg, s.to_string(), out);
    }
    return kExitOk;
}

int cmd_check(const Config& cfg, std::ostream& out) {
    const LinFormMatrix a = load_matrix(cfg);
    const Field field = cfg.field.empty() ? a.field() : Field::parse(cfg.field);
    CheckOptions options;
    options.matrix_id = matrix_id(cfg);
    options.jobs = cfg.jobs;
    const UniformityReport report =
        field.is_prime() ? check_exhaustive(a, field.characteristic(), options)
                         : check_random(a, cfg.trials, cfg.seed, options);
    emit(cfg, json_output(cfg) ? report.to_json().dump() : report.to_text(), out);
    if (cfg.expect_uniform && report.verdict == Verdict::non_uniform) return kExitFailed;
    return kExitOk;
}

int cmd_cohomology(const Config& cfg, std::ostream& out) {
    LinFormMatrix a = load_matrix(cfg);
    if (!cfg.field.empty()) a = a.coerce(Field::parse(cfg.field));
    const auto table = cohomology_table(a, cfg.d_max, matrix_id(cfg));
    emit(cfg, json_output(cfg) ? table.to_json().dump() : table.to_text(), out);
    return kExitOk;
}

int cmd_generators(const Config& cfg, std::ostream& out) {
    LinFormMatrix a = load_matrix(cfg);
    if (!cfg.field.empty()) a = a.coerce(Field::parse(cfg.field));
    const auto profile = generator_profile(a, cfg.d_max);
    emit(cfg, json_output(cfg) ? profile.to_json().dump() : profile.to_text(), out);
    return kExitOk;
}

SearchOptions search_options(const Config& cfg) {
    SearchOptions o;
    o.primes = cfg.primes;
    o.random_trials = std::min<std::size_t>(cfg.trials, 20);
    return o;
}

int cmd_augment(const Config& cfg, std::ostream& out) {
    const LinFormMatrix a = load_matrix(cfg);
    const LinFormMatrix b = augment_columns(a, cfg.count, cfg.seed, search_options(cfg));
    nlohmann::ordered_json search;
    search["operation"] = "augment";
    search["added"] = cfg.count;
    search["seed"] = cfg.seed;
    emit(cfg, envelope(b, search, "search"), out);
    return kExitOk;
}

int cmd_reduce(const Config& cfg, std::ostream& out) {
    const LinFormMatrix a = load_matrix(cfg);
    const Reduction r = reduce_to_minimal(a, cfg.seed, search_options(cfg));
    nlohmann::ordered_json search;
    search["operation"] = "reduce";
    search["removed"] = r.removed;
    search["attempts"] = r.attempts;
    search["seed"] = cfg.seed;
    emit(cfg, envelope(r.matrix, search, "search"), out);
    return kExitOk;
}

int cmd_audit(const Config& cfg, std::ostream& out) {
    const LinFormMatrix a = load_matrix(cfg);
    const Field field = cfg.field.empty() ? Field::prime(5) : Field::parse(cfg.field);
    if (!field.is_prime()) throw UsageError("audit needs --field Fp:p");
    CheckOptions options;
    options.matrix_id = matrix_id(cfg);
    options.jobs = cfg.jobs;
    const auto report = check_exhaustive(a, field.characteristic(), options);
    if (report.verdict != Verdict::uniform) {
        emit(cfg, report.to_text(), out);
        return kExitFailed;
    }
    const BoundAudit audit = ktype_bound_audit(a, report);
    emit(cfg, json_output(cfg) ? audit.to_json().dump() : audit.to_text(), out);
    return audit.passed() ? kExitOk : kExitFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Uniform Steiner bundles: families, splitting types, uniformity and cohomology"};
    app.require_subcommand(1);
    Config cfg;

    auto field_opt = [&](CLI::App* sub, const char* help) {
        sub->add_option("--field", cfg.field, help);
    };
    auto matrix_io = [&](CLI::App* sub) {
        sub->add_option("matrix", cfg.input, "matrix JSON file, or - for stdin")->required();
        sub->add_option("-o,--output", cfg.output, "write to this file instead of stdout");
        sub->add_option("--id", cfg.id, "matrix id for reports (default: file stem)");
    };

    auto* gen = app.add_subcommand("generate", "build a family matrix as JSON");
    gen->add_option("--family", cfg.family, "omega-symmetric | p2-min | pn-min | ktype")
        ->required();
    gen->add_option("--n", cfg.n, "projective dimension");
    gen->add_option("--c", cfg.c, "number of rows");
    gen->add_option("--k", cfg.k, "symmetric power / top degree");
    gen->add_option("--alphas", cfg.alphas, "ktype multiplicities alpha_1..alpha_k")
        ->delimiter(',');
    gen->add_option("--order", cfg.order, "ktype block degrees in order")->delimiter(',');
    gen->add_option("--rewire", cfg.rewire, "ktype rewired block count");
    gen->add_option("-o,--output", cfg.output, "write to this file instead of stdout");
    gen->add_option("--format", cfg.format, "json | display | cas");
    field_opt(gen, "Q or Fp:p (default Q)");

    auto* split = app.add_subcommand("splitting", "splitting type on one line");
    matrix_io(split);
    split->add_option("--line", cfg.line, "two points, 'p0,...,pn;q0,...,qn'")->required();
    split->add_option("--format", cfg.format, "text | json");
    field_opt(split, "coerce the matrix to Q or Fp:p");

    auto* check = app.add_subcommand("check", "uniformity report");
    matrix_io(check);
    field_opt(check, "Fp:p for every line over F_p, Q for random rational lines");
    check->add_option("--trials", cfg.trials, "random lines (Q only)");
    check->add_option("--seed", cfg.seed, "random seed");
    check->add_option("--jobs", cfg.jobs, "worker threads (0 = all cores)");
    check->add_option("--format", cfg.format, "text | json");
    check->add_flag("--expect-uniform", cfg.expect_uniform, "exit 2 on a jumping line");

    auto* coh = app.add_subcommand("cohomology", "h0/h1 table for d = -1..dmax");
    matrix_io(coh);
    coh->add_option("--dmax", cfg.d_max, "last twist");
    coh->add_option("--format", cfg.format, "text | json");
    field_opt(coh, "coerce the matrix to Q or Fp:p");

    auto* gens = app.add_subcommand("generators", "minimal generator degrees of the sections");
    matrix_io(gens);
    gens->add_option("--dmax", cfg.d_max, "last twist");
    gens->add_option("--format", cfg.format, "text | json");
    field_opt(gens, "coerce the matrix to Q or Fp:p");

    auto* aug = app.add_subcommand("augment", "append columns keeping 1-type uniformity");
    matrix_io(aug);
    aug->add_option("--count", cfg.count, "columns to add")->required();
    aug->add_option("--seed", cfg.seed, "random seed");
    aug->add_option("--trials", cfg.trials, "random rational lines per candidate (max 20)");
    aug->add_option("--primes", cfg.primes, "primes for the exhaustive test")->delimiter(',');

    auto* red = app.add_subcommand("reduce", "delete column combinations down to minimal rank");
    matrix_io(red);
    red->add_option("--seed", cfg.seed, "random seed");
    red->add_option("--trials", cfg.trials, "random rational lines per candidate (max 20)");
    red->add_option("--primes", cfg.primes, "primes for the exhaustive test")->delimiter(',');

    auto* aud = app.add_subcommand("audit", "k-type rank bounds and gap-freeness");
    matrix_io(aud);
    field_opt(aud, "Fp:p for the exhaustive check (default Fp:5)");
    aud->add_option("--jobs", cfg.jobs, "worker threads (0 = all cores)");
    aud->add_option("--format", cfg.format, "text | json");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_generate(cfg, out);
        if (split->parsed()) return cmd_splitting(cfg, out);
        if (check->parsed()) return cmd_check(cfg, out);
        if (coh->parsed()) return cmd_cohomology(cfg, out);
        if (gens->parsed()) return cmd_generators(cfg, out);
        if (aug->parsed()) return cmd_augment(cfg, out);
        if (red->parsed()) return cmd_reduce(cfg, out);
        if (aud->parsed()) return cmd_audit(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SearchFailure& e) {
        err << "search failed: " << e.what() << '\n';
        return kExitFailed;
    } catch (const std::invalid_argument& e) {
        err << "invalid parameters: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
}

}  // namespace steiner::cli

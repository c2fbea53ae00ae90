#include "steiner/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace steiner {

ordered_json scalar_to_json(const FieldElement& e) {
    if (e.field().is_prime()) return e.residue();
    const mpq_class& q = e.rational();
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return q.get_str();
}

namespace {

FieldElement coeff_from_json(const ordered_json& j, const Field& field, const std::string& path) {
    try {
        if (j.is_number_integer()) return FieldElement(field, j.get<long long>());
        if (j.is_string()) return parse_scalar(field, j.get<std::string>());
    } catch (const std::exception& e) {
        throw ParseError(e.what(), path);
    }
    throw ParseError("coefficient must be an integer or a \"p/q\" string", path);
}

std::size_t count_from_json(const ordered_json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"", "$");
    const auto& v = j.at(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        throw ParseError(std::string("\"") + key + "\" must be a non-negative integer",
                         std::string("$.") + key);
    }
    return v.get<std::size_t>();
}

// Splits "2*x+y-1/2*t" into signed terms.
std::vector<std::string> split_terms(std::string_view text) {
    std::vector<std::string> terms;
    std::string current;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if ((ch == '+' || ch == '-') && i > 0 && text[i - 1] != '*' && text[i - 1] != '/') {
            terms.push_back(current);
            current.clear();
        }
        current += ch;
    }
    terms.push_back(current);
    return terms;
}

std::size_t parse_variable(std::string_view name, std::size_t n) {
    if (n == 2) {
        if (name == "x") return 0;
        if (name == "y") return 1;
        if (name == "t") return 2;
    }
    if (name.size() > 2 && name.substr(0, 2) == "x_") {
        std::size_t idx = 0;
        for (char ch : name.substr(2)) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) {
                throw std::invalid_argument("bad variable '" + std::string(name) + "'");
            }
            idx = idx * 10 + static_cast<std::size_t>(ch - '0');
        }
        if (idx <= n) return idx;
    }
    throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

std::string cas_coefficient(const FieldElement& e) {
    return e.field().is_prime() ? std::to_string(e.residue()) : e.rational().get_str();
}

}  // namespace

std::string variable_name(std::size_t n, std::size_t i) {
    if (n == 2) {
        static const char* names[] = {"x", "y", "t"};
        return names[i];
    }
    return "x_" + std::to_string(i);
}

std::string form_to_string(const LinearForm& f, std::size_t n) {
    std::string out;
    for (std::size_t v = 0; v < f.num_vars(); ++v) {
        const FieldElement& c = f[v];
        if (c.is_zero()) continue;
        std::string coeff = c.to_string();
        bool negative = coeff.front() == '-';
        if (negative) coeff.erase(0, 1);
        if (negative) {
            out += '-';
        } else if (!out.empty()) {
            out += '+';
        }
        if (coeff != "1") out += coeff + "*";
        out += variable_name(n, v);
    }
    return out.empty() ? "0" : out;
}

LinearForm parse_form(std::string_view text, const Field& field, std::size_t n) {
    LinearForm form(field, n + 1);
    if (text == "0") return form;
    if (text.empty()) throw std::invalid_argument("empty linear form");
    for (const std::string& term : split_terms(text)) {
        std::string_view t = term;
        bool negative = false;
        if (!t.empty() && (t.front() == '+' || t.front() == '-')) {
            negative = t.front() == '-';
            t.remove_prefix(1);
        }
        FieldElement coeff = FieldElement::one(field);
        auto star = t.find('*');
        if (star != std::string_view::npos) {
            coeff = parse_scalar(field, t.substr(0, star));
            t.remove_prefix(star + 1);
        }
        if (negative) coeff = -coeff;
        form += coeff * LinearForm::variable(field, n + 1, parse_variable(t, n));
    }
    return form;
}

ordered_json to_json(const LinFormMatrix& a) {
    ordered_json j;
    j["n"] = a.n();
    j["c"] = a.rows();
    j["x"] = a.cols();
    j["field"] = a.field().tag();
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t jj = 0; jj < a.cols(); ++jj) {
            ordered_json coeffs = ordered_json::array();
            for (const auto& c : a(i, jj).coeffs()) coeffs.push_back(scalar_to_json(c));
            row.push_back(std::move(coeffs));
        }
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

LinFormMatrix from_json(const ordered_json& j) {
    if (!j.is_object()) throw ParseError("matrix document must be a JSON object", "$");
    const std::size_t n = count_from_json(j, "n");
    const std::size_t c = count_from_json(j, "c");
    const std::size_t x = count_from_json(j, "x");
    if (!j.contains("field") || !j.at("field").is_string()) {
        throw ParseError("missing string key \"field\"", "$.field");
    }
    Field field;
    try {
        field = Field::parse(j.at("field").get<std::string>());
    } catch (const std::exception& e) {
        throw ParseError(e.what(), "$.field");
    }
    if (!j.contains("entries") || !j.at("entries").is_array()) {
        throw ParseError("missing array key \"entries\"", "$.entries");
    }
    const auto& rows = j.at("entries");
    if (rows.size() != c) {
        throw ParseError("expected " + std::to_string(c) + " rows, found " +
                             std::to_string(rows.size()),
                         "$.entries");
    }
    std::vector<LinearForm> entries;
    entries.reserve(c * x);
    for (std::size_t i = 0; i < c; ++i) {
        const std::string row_path = "$.entries[" + std::to_string(i) + "]";
        const auto& row = rows.at(i);
        if (!row.is_array() || row.size() != x) {
            throw ParseError("expected a row of " + std::to_string(x) + " entries", row_path);
        }
        for (std::size_t jj = 0; jj < x; ++jj) {
            const std::string path = row_path + "[" + std::to_string(jj) + "]";
            const auto& coeffs = row.at(jj);
            if (!coeffs.is_array() || coeffs.size() != n + 1) {
                throw ParseError("expected " + std::to_string(n + 1) + " coefficients", path);
            }
            std::vector<FieldElement> cs;
            cs.reserve(n + 1);
            for (std::size_t v = 0; v <= n; ++v) {
                cs.push_back(coeff_from_json(coeffs.at(v), field,
                                             path + "[" + std::to_string(v) + "]"));
            }
            entries.emplace_back(field, std::move(cs));
        }
    }
    return LinFormMatrix(field, n, c, x, std::move(entries));
}

std::string serialize(const LinFormMatrix& a, Format format) {
    switch (format) {
    case Format::json:
        return to_json(a).dump();
    case Format::display: {
        std::vector<std::string> cells;
        std::vector<std::size_t> width(a.cols(), 1);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            for (std::size_t j = 0; j < a.cols(); ++j) {
                cells.push_back(form_to_string(a(i, j), a.n()));
                width[j] = std::max(width[j], cells.back().size());
            }
        }
        std::string out;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i > 0) out += '\n';
            out += '[';
            for (std::size_t j = 0; j < a.cols(); ++j) {
                const std::string& cell = cells[i * a.cols() + j];
                out += ' ' + cell + std::string(width[j] - cell.size(), ' ');
            }
            out += " ]";
        }
        return out;
    }
    case Format::cas_export: {
        // Macaulay2 input.
        std::ostringstream os;
        os << "R = " << (a.field().is_prime() ? "ZZ/" + std::to_string(a.field().characteristic())
                                               : std::string("QQ"))
           << "[x_0..x_" << a.n() << "];\n";
        os << "A = matrix{";
        for (std::size_t i = 0; i < a.rows(); ++i) {
            os << (i ? ", {" : "{");
            for (std::size_t j = 0; j < a.cols(); ++j) {
                if (j) os << ", ";
                std::string term;
                for (std::size_t v = 0; v <= a.n(); ++v) {
                    const auto& c = a(i, j)[v];
                    if (c.is_zero()) continue;
                    if (!term.empty()) term += " + ";
                    term += "(" + cas_coefficient(c) + ")*x_" + std::to_string(v);
                }
                os << (term.empty() ? "0" : term);
            }
            os << "}";
        }
        os << "};\n";
        return os.str();
    }
    }
    throw std::invalid_argument("unknown format");
}

LinFormMatrix parse(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(),
                         "byte " + std::to_string(e.byte));
    }
    return from_json(j);
}

LinFormMatrix parse_display(std::string_view text, std::size_t n, const Field& field) {
    std::vector<std::vector<LinearForm>> rows;
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_space();
    while (pos < text.size()) {
        if (text[pos] != '[') throw ParseError("expected '['", "byte " + std::to_string(pos));
        ++pos;
        std::vector<LinearForm> row;
        while (true) {
            skip_space();
            if (pos >= text.size()) throw ParseError("unterminated row", "byte " + std::to_string(pos));
            if (text[pos] == ']') {
                ++pos;
                break;
            }
            const std::size_t start = pos;
            while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
                   text[pos] != ']') {
                ++pos;
            }
            try {
                row.push_back(parse_form(text.substr(start, pos - start), field, n));
            } catch (const std::exception& e) {
                throw ParseError(e.what(), "byte " + std::to_string(start));
            }
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw ParseError("ragged row", "byte " + std::to_string(pos));
        }
        rows.push_back(std::move(row));
        skip_space();
    }
    if (rows.empty()) throw ParseError("no rows", "byte 0");
    std::vector<LinearForm> entries;
    for (auto& row : rows) {
        for (auto& f : row) entries.push_back(std::move(f));
    }
    return LinFormMatrix(field, n, rows.size(), rows.front().size(), std::move(entries));
}

}  // namespace steiner

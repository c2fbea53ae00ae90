#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "steiner/linform.hpp"

namespace steiner {

using ordered_json = nlohmann::ordered_json;

enum class Format { json, display, cas_export };

/// Malformed matrix text. `position` is a byte offset into the input, or
/// a JSON path for schema violations.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::string position)
        : std::runtime_error(what + " at " + position), position_(std::move(position)) {}
    const std::string& position() const { return position_; }

private:
    std::string position_;
};

/// Variable names used by the display format: x, y, t when n == 2,
/// x_0 ... x_n otherwise.
std::string variable_name(std::size_t n, std::size_t i);

/// Integer when possible, otherwise a "p/q" string.
ordered_json scalar_to_json(const FieldElement& e);

/// "x", "-x_3", "2*x+y", "0"; the inverse of parse_form.
std::string form_to_string(const LinearForm& f, std::size_t n);
LinearForm parse_form(std::string_view text, const Field& field, std::size_t n);

/// {"n":..,"c":..,"x":..,"field":..,"entries":[[[..]]]}
ordered_json to_json(const LinFormMatrix& a);
/// Reads the matrix keys of a JSON object; other keys are ignored.
LinFormMatrix from_json(const ordered_json& j);

std::string serialize(const LinFormMatrix& a, Format format);

/// Parses the json format.
LinFormMatrix parse(std::string_view text);
/// Parses the bracketed display format; it does not carry n or the field.
LinFormMatrix parse_display(std::string_view text, std::size_t n, const Field& field);

}  // namespace steiner

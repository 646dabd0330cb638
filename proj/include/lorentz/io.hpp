#pragma once

#include "lorentz/cones.hpp"
#include "lorentz/forms.hpp"
#include "lorentz/matrix.hpp"
#include "lorentz/scalar.hpp"
#include "lorentz/unipoly.hpp"
#include "lorentz/verdict.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lorentz::io {

using Json = nlohmann::ordered_json;

enum class Mode { Exact, Float, Auto };

Mode parse_mode(std::string_view text);
std::string_view to_string(Mode m);

struct RunConfig {
    Tolerance tol;
    std::size_t trials = 200;
    std::uint64_t seed = 0;
    Mode mode = Mode::Auto;
};

/// Throws InputError unless trials > 0 and the tolerance is valid.
void validate(const RunConfig& cfg);

/// Parses JSON text; syntax errors become ParseError.
Json parse_json(std::string_view text);

/// Integers are exact, floats go through their shortest round-trip
/// decimal form (0.1 reads as 1/10), strings may be "p/q" or decimals.
Rational parse_number(const Json& j);
std::vector<Rational> parse_vector(const Json& j);

/// {"coeffs": [a0, ..., ad]}
std::vector<Rational> parse_unipoly(const Json& j);
/// {"type": "orthant" | "polyhedral" | "second_order", "n", "generators", "facets"}
Cone parse_cone(const Json& j);
/// {"n", "d", "terms": [{"exp": [...], "coef": ...}]}
MultiForm<Rational> parse_form(const Json& j);
/// {"n", "rows": [[...]]}
Matrix<Rational> parse_matrix(const Json& j);

Json to_json(const Verdict& v);
Json to_json(const FormReport& r);

/// Resolved arithmetic: Auto becomes Exact, since every accepted number
/// is a rational.
Mode resolve(Mode m);

Json config_json(const RunConfig& cfg);

Json cmd_unipoly(const Json& input, const RunConfig& cfg);
Json cmd_form(const Json& form, const std::optional<Json>& cone, const RunConfig& cfg);
Json cmd_matrix(const Json& matrix, const std::optional<Json>& cone, const RunConfig& cfg);
/// {"form": {...}, "x": [...], "v": [...]}
Json cmd_restrict(const Json& input, const RunConfig& cfg);

/// Deterministic text rendering used by the CLI (two-space indent, trailing newline).
std::string render(const Json& j);

} // namespace lorentz::io

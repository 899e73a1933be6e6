#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "perv/checks.hpp"
#include "perv/fibers.hpp"
#include "perv/goettsche.hpp"

namespace perv {

// Strict parsing of the .alg format: JSON-shaped, rationals as "p/q" or
// integer text, unknown keys rejected unless lax. Errors carry line/column
// where the input text allows it. Descriptions come out canonicalized (basis,
// products, values and integral sorted, zero coefficients dropped).
AlgebraDesc parse_algebra(std::string_view text, bool lax = false);
ConstantsDesc parse_constants(std::string_view text, bool lax = false);

// Grammar: sum of "<int>*<label>" terms joined by '+'.
PointSpec parse_point(std::string_view text);

// Canonical serialization: sorted keys, sorted ids, LF newlines. Idempotent
// against the parsers above.
std::string serialize_algebra(const AlgebraDesc& desc);
std::string serialize_constants(const ConstantsDesc& desc);

AlgebraDesc load_algebra_file(const std::string& path, bool lax = false);
ConstantsDesc load_constants_file(const std::string& path, bool lax = false);

// machine-format renderers (canonical JSON)
nlohmann::json report_json(const CheckReport& r);
nlohmann::json table_json(const PerversityTable& t);
nlohmann::json duality_json(const FilteredAlgebra& a, const DiagonalDecomposition& d);
nlohmann::json local_check_json(const LocalCheck& lc);
nlohmann::json dichotomy_json(const DichotomyReport& r);

// text-format renderers
std::string report_text(const CheckReport& r);
std::string table_text(const PerversityTable& t);

// canonical document printing: 2-space indent, LF, trailing newline
std::string dump_json(const nlohmann::json& j);

} // namespace perv

#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "annulus/boundary.hpp"
#include "annulus/field.hpp"
#include "annulus/hadamard.hpp"
#include "annulus/kernels.hpp"

namespace annulus::io {

/// Shortest form that round-trips: 17 significant digits, '.' decimal, no locale.
std::string format_number(double value);
/// Locale-independent parse of a full token; throws SchemaError naming `field`.
double parse_number(std::string_view text, const char* field);

/// {"a0": number, "cos": [a1..aN], "sin": [b1..bN]}
TrigSeries parse_trig_series(std::string_view json_text);
std::string to_json(const TrigSeries& f);

/// {"g": TrigSeries, "h": TrigSeries}
CauchyData parse_cauchy_data(std::string_view json_text);
std::string to_json(const CauchyData& data);

/// {"powers": [k...], "re": [...], "im": [...]}
LaurentPoly parse_laurent(std::string_view json_text);

/// One real per line; blank lines are skipped. Row j is the angle 2 pi j / M.
std::vector<double> parse_samples_csv(std::string_view text);

/// "# solver_tag: <tag>" then "r,phi,u", rows in radii-outer order.
std::string to_csv(const Field& field);
Field parse_field_csv(std::string_view text);

/// "n,data_norm,solution_sup,amplification"
std::string to_csv(std::span<const InstabilityRecord> rows);

/// [{"part": "h", "n": 25, "gain": ...}, ...]
std::string to_json(std::span<const DroppedMode> dropped);

std::string read_file(const std::filesystem::path& path);
/// Writes to a sibling temporary file, then renames over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace annulus::io

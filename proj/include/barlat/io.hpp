#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "barlat/barcode.hpp"
#include "barlat/distances.hpp"
#include "barlat/lattice.hpp"
#include "barlat/multiperm.hpp"
#include "barlat/polytope.hpp"

namespace barlat::io {

enum class BarcodeFormat { Csv, Json };

/// %.17g: round-trips every double.
std::string format_number(double value);

/// One "birth,death" per line; '#' comment lines and blank lines are
/// skipped; anything else malformed throws Error(Parse) naming the line.
Barcode parse_barcode_csv(std::string_view text);
/// A JSON array of [birth, death] pairs.
Barcode parse_barcode_json(std::string_view text);
Barcode parse_barcode(std::string_view text, BarcodeFormat format);

/// Format from the extension (.csv / .json) unless overridden.
BarcodeFormat detect_format(const std::filesystem::path& path);
Barcode read_barcode(const std::filesystem::path& path,
                     std::optional<BarcodeFormat> format = std::nullopt);

std::string barcode_to_csv(const Barcode& barcode);
std::string barcode_to_json(const Barcode& barcode);

/// Whitespace-separated positive integers.
std::vector<int> parse_word(std::string_view line);
/// One word per non-empty line.
std::vector<Multiperm> parse_word_lines(std::string_view text);
/// {"n": int, "m": int, "word": [int, ...]}
Multiperm parse_multiperm_json(std::string_view text);
std::string multiperm_to_json(const Multiperm& s);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

/// Nodes n<index> labeled with word and rank; edges lower -> upper drawn
/// bottom to top.
std::string hasse_to_dot(const HasseDiagram& diagram);
/// {"elements": [[...]], "covers": [[i, j]], "ranks": [r]}
std::string hasse_to_json(const HasseDiagram& diagram);

std::string vertices_to_csv(const VertexSet& set);
std::string vertices_to_json(const VertexSet& set);
/// {"ambient", "dim", "expected", "blocks"}
std::string dimension_report_to_json(const DimensionReport& report);
/// {"d_inf", "d_q", "bound_inf", "bound_q", "alpha", "delta", "pass"}
std::string convergence_report_to_json(const ConvergenceReport& report);

}  // namespace barlat::io

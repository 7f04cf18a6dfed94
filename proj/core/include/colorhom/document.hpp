#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "colorhom/bundles.hpp"
#include "colorhom/report.hpp"

namespace colorhom {

inline constexpr std::string_view kBundleSchema = "colorhom/bundle@1";
inline constexpr std::string_view kReportSchema = "colorhom/report@1";

/// Tool version string baked in at build time.
std::string_view tool_version();

/// A bundle as stored on disk: the structure, optional extra named maps on
/// the main space (e.g. "beta"), a free-form description and, for outputs
/// of constructions, the certifying report. The report is written but never
/// read back.
struct BundleDocument {
    StructureBundle bundle;
    std::map<std::string, EvenMap> extra_maps;
    std::string description;
    std::optional<CheckReport> report;
};

/// Parses and fully validates a JSON bundle document. Throws InputError
/// with a "line L, column C" prefix for syntax errors and the JSON path of
/// the offending value for semantic ones.
BundleDocument parse_document(std::string_view text);
/// Reads `path`, falling back to `path` + ".json" when `path` is missing.
BundleDocument load_document(const std::filesystem::path& path);
/// Reads the raw text with the same fallback.
std::string read_document_text(const std::filesystem::path& path);

/// Canonical pretty-printed JSON; ends with a newline.
std::string serialize_document(const BundleDocument& doc);

/// SHA-256 (hex) of the compact, key-sorted re-serialization of a JSON
/// text; insensitive to whitespace and key order. Throws InputError on
/// invalid JSON.
std::string document_digest(std::string_view text);

/// JSON for a single check report.
std::string report_to_json(const CheckReport& report, bool pretty = false);

} // namespace colorhom

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "colorhom/document.hpp"

namespace colorhom {

/// Defining checks and consequences decide the verdict; properties are
/// informational. A consequence or property whose hypothesis fails is
/// skipped rather than failed.
enum class Role { Defining, Consequence, Property };

std::string_view to_string(Role role);

struct SuiteEntry {
    CheckReport report;
    Role role;
    bool skipped = false;
};

struct SuiteResult {
    BundleKind kind;
    std::vector<SuiteEntry> entries;
    std::map<std::string, bool> flags;
    FlexibilityMode flexibility;

    bool passed() const;
};

/// Identity ids accepted by run_suite for a bundle kind, in run order.
std::vector<std::string> suite_identities(BundleKind kind);

/// Runs every applicable check ("all") or a single one. A single requested
/// identity is always treated as defining. Throws InputError for an id that
/// does not apply to the bundle's kind.
SuiteResult run_suite(const BundleDocument& doc, std::string_view identity, const CheckOptions& options);

/// Deterministic JSON; independent of the worker count. Ends with a newline.
std::string machine_report(const SuiteResult& result, std::string_view input_digest);
/// Human-readable summary using basis names.
std::string text_report(const SuiteResult& result, const BundleDocument& doc, std::string_view input_digest);

} // namespace colorhom

#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "colorhom/constructions.hpp"
#include "colorhom/report.hpp"

namespace colorhom {

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitInputError = 2;

enum class ReportFormat { Text, Machine };

/// Worker count from COLORHOM_JOBS, or 1 when unset or unparsable.
unsigned default_jobs();

struct CheckCommand {
    std::filesystem::path input;
    std::string identity = "all";
    ReportFormat format = ReportFormat::Text;
    CheckOptions options;
};

struct ConstructCommand {
    std::string what;  // akivis, dialg2leibniz, trivext or tensor2
    std::filesystem::path input;
    std::filesystem::path output;
    bool experimental = false;
    TensorVariant variant = TensorVariant::Corrected;
    CheckOptions options;
};

struct TwistCommand {
    std::filesystem::path input;
    std::filesystem::path output;
    std::string map = "beta";
    unsigned power = 1;
    bool module = false;
    CheckOptions options;
};

struct ExamplesCommand {
    std::optional<std::string> name;
    std::optional<std::filesystem::path> write_dir;
};

int cmd_check(const CheckCommand& c, std::ostream& out, std::ostream& err);
int cmd_construct(const ConstructCommand& c, std::ostream& out, std::ostream& err);
int cmd_twist(const TwistCommand& c, std::ostream& out, std::ostream& err);
int cmd_examples(const ExamplesCommand& c, std::ostream& out, std::ostream& err);

} // namespace colorhom

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "colorhom/vector.hpp"

namespace colorhom {

/// How graded flexibility is read.
///
/// Both modes require T(e_i, e_j, e_i) = 0 on basis elements. Literal adds
/// the ungraded polarization T(x,y,z) + T(z,y,x) = 0 for equal-degree x, z;
/// EpsPolarized adds T(x,y,z) + eps(x,z) T(z,y,x) = 0 for all basis triples.
enum class FlexibilityMode { Literal, EpsPolarized };

std::string_view to_string(FlexibilityMode mode);
/// "literal" or "eps-polarized"; throws InputError otherwise.
FlexibilityMode parse_flexibility_mode(std::string_view text);

struct CheckOptions {
    /// Worker threads for tuple enumeration. 0 is treated as 1.
    unsigned jobs = 1;
    FlexibilityMode flexibility = FlexibilityMode::EpsPolarized;
};

/// One basis tuple on which an identity fails, with LHS - RHS.
struct Violation {
    std::vector<std::size_t> tuple;
    Vector defect;
    std::string detail;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// The outcome of one identity check.
///
/// A leaf report passes iff it has no violations. A composite report
/// additionally requires every part to pass. A report whose hypothesis
/// failed carries `precondition_failure` and the failing hypothesis report
/// as its only part; it never passes.
struct CheckReport {
    std::string identity;
    std::vector<Violation> violations;
    std::vector<CheckReport> parts;
    std::optional<std::string> precondition_failure;
    /// Structural properties observed along the way (multiplicative, ...).
    std::map<std::string, bool> flags;

    bool passed() const;
    bool precondition_failed() const noexcept { return precondition_failure.has_value(); }
    std::size_t violation_count() const;
    /// Depth-first search by identity id, including this report.
    const CheckReport* find(std::string_view id) const;
    /// First violation in depth-first order, or nullptr.
    const Violation* first_violation() const;

    /// Sorts violations by tuple, recursively.
    void canonicalize();

    static CheckReport leaf(std::string id, std::vector<Violation> violations);
    static CheckReport composite(std::string id, std::vector<CheckReport> parts);
    static CheckReport precondition(std::string id, std::string reason, CheckReport hypothesis);

    friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

/// Multi-line human-readable rendering.
std::string describe(const CheckReport& report, int indent = 0);
std::string tuple_to_string(const std::vector<std::size_t>& tuple);

} // namespace colorhom

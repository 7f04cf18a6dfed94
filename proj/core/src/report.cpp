#include "colorhom/report.hpp"

#include <algorithm>

#include "colorhom/error.hpp"

namespace colorhom {

std::string_view to_string(FlexibilityMode mode)
{
    return mode == FlexibilityMode::Literal ? "literal" : "eps-polarized";
}

FlexibilityMode parse_flexibility_mode(std::string_view text)
{
    if (text == "literal") {
        return FlexibilityMode::Literal;
    }
    if (text == "eps-polarized") {
        return FlexibilityMode::EpsPolarized;
    }
    throw InputError("unknown flexibility mode \"" + std::string(text) + "\" (expected literal or eps-polarized)");
}

bool CheckReport::passed() const
{
    if (precondition_failure || !violations.empty()) {
        return false;
    }
    return std::all_of(parts.begin(), parts.end(), [](const CheckReport& p) { return p.passed(); });
}

std::size_t CheckReport::violation_count() const
{
    std::size_t n = violations.size();
    for (const auto& p : parts) {
        n += p.violation_count();
    }
    return n;
}

const CheckReport* CheckReport::find(std::string_view id) const
{
    if (identity == id) {
        return this;
    }
    for (const auto& p : parts) {
        if (const auto* r = p.find(id)) {
            return r;
        }
    }
    return nullptr;
}

const Violation* CheckReport::first_violation() const
{
    if (!violations.empty()) {
        return &violations.front();
    }
    for (const auto& p : parts) {
        if (const auto* v = p.first_violation()) {
            return v;
        }
    }
    return nullptr;
}

void CheckReport::canonicalize()
{
    std::stable_sort(violations.begin(), violations.end(),
                     [](const Violation& a, const Violation& b) { return a.tuple < b.tuple; });
    for (auto& p : parts) {
        p.canonicalize();
    }
}

CheckReport CheckReport::leaf(std::string id, std::vector<Violation> violations)
{
    CheckReport r;
    r.identity = std::move(id);
    r.violations = std::move(violations);
    r.canonicalize();
    return r;
}

CheckReport CheckReport::composite(std::string id, std::vector<CheckReport> parts)
{
    CheckReport r;
    r.identity = std::move(id);
    r.parts = std::move(parts);
    return r;
}

CheckReport CheckReport::precondition(std::string id, std::string reason, CheckReport hypothesis)
{
    CheckReport r;
    r.identity = std::move(id);
    r.precondition_failure = std::move(reason);
    r.parts.push_back(std::move(hypothesis));
    return r;
}

std::string tuple_to_string(const std::vector<std::size_t>& tuple)
{
    std::string s = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i != 0) {
            s += ", ";
        }
        s += std::to_string(tuple[i]);
    }
    return s + ")";
}

std::string describe(const CheckReport& report, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    std::string s = pad + report.identity + ": ";
    if (report.precondition_failure) {
        s += "PRECONDITION FAILED (" + *report.precondition_failure + ")\n";
    } else {
        s += report.passed() ? "pass\n" : "FAIL\n";
    }
    for (const auto& v : report.violations) {
        s += pad + "  at " + tuple_to_string(v.tuple) + ": defect " + v.defect.to_string();
        if (!v.detail.empty()) {
            s += " [" + v.detail + "]";
        }
        s += "\n";
    }
    for (const auto& p : report.parts) {
        s += describe(p, indent + 2);
    }
    return s;
}

} // namespace colorhom

#include "colorhom/suite.hpp"

#include <algorithm>
#include <functional>

#include "colorhom/checkers.hpp"
#include "colorhom/error.hpp"
#include "colorhom/graded_linalg.hpp"
#include "json_util.hpp"

namespace colorhom {

namespace {

struct Step {
    std::string id;
    Role role;
    std::function<CheckReport()> run;
};

CheckReport renamed(CheckReport r, std::string id)
{
    r.identity = std::move(id);
    return r;
}

CheckReport evenness_of(const GradedSpace& space, std::vector<std::pair<std::string, const MultilinearMap*>> ops,
                        std::vector<std::pair<std::string, const EvenMap*>> maps)
{
    std::vector<CheckReport> parts;
    for (const auto& [name, op] : ops) {
        parts.push_back(renamed(check_evenness(*op, space), "evenness." + name));
    }
    for (const auto& [name, f] : maps) {
        parts.push_back(renamed(check_evenness(*f, space), "evenness." + name));
    }
    return CheckReport::composite("evenness", std::move(parts));
}

std::vector<Step> steps_for(const BundleDocument& doc, const CheckOptions& o, std::map<std::string, bool>& flags)
{
    std::vector<Step> steps;
    std::visit(
        [&](const auto& b) {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, NonAssocBundle>) {
                steps.push_back({"bicharacter", Role::Defining, [&b] { return validate_bicharacter(b.eps); }});
                steps.push_back({"evenness", Role::Defining,
                                 [&b] { return evenness_of(b.space, {{"mu", &b.mu}}, {{"alpha", &b.alpha}}); }});
                steps.push_back({"hom-associativity", Role::Property,
                                 [&b, &o] { return check_hom_associativity(b.mu, b.alpha, b.space, o); }});
                steps.push_back({"hom-flexible", Role::Property, [&b, &o] {
                                     return check_flexible(associator_map(b.mu, b.alpha), b.eps, b.space, o);
                                 }});
                steps.push_back({"hom-alternative", Role::Property, [&b, &o] {
                                     return check_alternative(associator_map(b.mu, b.alpha), b.eps, b.space, o);
                                 }});
                flags["multiplicative"] = is_endomorphism(b.alpha, {{"mu", &b.mu}}, o.jobs).passed();
            } else if constexpr (std::is_same_v<T, AkivisBundle>) {
                steps.push_back({"bicharacter", Role::Defining, [&b] { return validate_bicharacter(b.eps); }});
                steps.push_back({"evenness", Role::Defining, [&b] {
                                     return evenness_of(b.space, {{"bracket", &b.bracket}, {"ternary", &b.ternary}},
                                                        {{"alpha", &b.alpha}});
                                 }});
                steps.push_back({"skew-symmetry", Role::Defining,
                                 [&b, &o] { return check_skew_symmetry(b.bracket, b.eps, b.space, o); }});
                steps.push_back({"akivis", Role::Defining, [&b, &o] { return check_akivis_identity(b, o); }});
                steps.push_back(
                    {"hom-flexible", Role::Property, [&b, &o] { return check_flexible(b.ternary, b.eps, b.space, o); }});
                steps.push_back({"hom-alternative", Role::Property,
                                 [&b, &o] { return check_alternative(b.ternary, b.eps, b.space, o); }});
                steps.push_back({"hom-lie", Role::Property, [&b, &o] { return check_hom_lie(b, o); }});
                steps.push_back({"flexible-akivis-relation", Role::Property,
                                 [&b, &o] { return check_flexible_akivis_relation(b, o); }});
                flags["multiplicative"] =
                    is_endomorphism(b.alpha, {{"bracket", &b.bracket}, {"ternary", &b.ternary}}, o.jobs).passed();
            } else if constexpr (std::is_same_v<T, LeibnizBundle>) {
                steps.push_back({"bicharacter", Role::Defining, [&b] { return validate_bicharacter(b.eps); }});
                steps.push_back({"evenness", Role::Defining, [&b] {
                                     return evenness_of(b.space, {{"bracket", &b.bracket}}, {{"alpha", &b.alpha}});
                                 }});
                steps.push_back({"color-leibniz", Role::Defining, [&b, &o] { return check_color_leibniz(b, o); }});
                steps.push_back(
                    {"leibniz-consequences", Role::Consequence, [&b, &o] { return check_leibniz_consequences(b, o); }});
                steps.push_back({"hom-lie", Role::Property, [&b, &o] { return check_hom_lie(b, o); }});
                flags["multiplicative"] = is_endomorphism(b.alpha, {{"bracket", &b.bracket}}, o.jobs).passed();
            } else if constexpr (std::is_same_v<T, NHLPBundle>) {
                steps.push_back({"bicharacter", Role::Defining, [&b] { return validate_bicharacter(b.eps); }});
                steps.push_back({"evenness", Role::Defining, [&b] {
                                     return evenness_of(b.space, {{"mu", &b.mu}, {"bracket", &b.bracket}},
                                                        {{"alpha", &b.alpha}});
                                 }});
                steps.push_back({"nhlp", Role::Defining, [&b, &o] { return check_nhlp(b, o); }});
                steps.push_back({"commutative", Role::Property,
                                 [&b, &o] { return check_eps_commutative(b.mu, b.eps, b.space, o); }});
                flags["multiplicative"] =
                    is_endomorphism(b.alpha, {{"mu", &b.mu}, {"bracket", &b.bracket}}, o.jobs).passed();
            } else if constexpr (std::is_same_v<T, DialgebraBundle>) {
                steps.push_back({"evenness", Role::Defining, [&b] {
                                     return evenness_of(b.space, {{"dashv", &b.dashv}, {"vdash", &b.vdash}},
                                                        {{"alpha", &b.alpha}});
                                 }});
                steps.push_back({"dialgebra", Role::Defining, [&b, &o] { return check_dialgebra(b, o); }});
                flags["multiplicative"] =
                    is_endomorphism(b.alpha, {{"dashv", &b.dashv}, {"vdash", &b.vdash}}, o.jobs).passed();
            } else {
                steps.push_back(
                    {"bicharacter", Role::Defining, [&b] { return validate_bicharacter(b.algebra.eps); }});
                steps.push_back({"evenness", Role::Defining, [&b] {
                                     std::vector<CheckReport> parts;
                                     const std::vector<const GradedSpace*> ls{&b.algebra.space, &b.module_space};
                                     const std::vector<const GradedSpace*> rs{&b.module_space, &b.algebra.space};
                                     parts.push_back(
                                         renamed(check_evenness(b.left, ls, b.module_space), "evenness.left"));
                                     parts.push_back(
                                         renamed(check_evenness(b.right, rs, b.module_space), "evenness.right"));
                                     parts.push_back(
                                         renamed(check_evenness(b.alphaM, b.module_space), "evenness.alphaM"));
                                     return CheckReport::composite("evenness", std::move(parts));
                                 }});
                steps.push_back({"module", Role::Defining, [&b, &o] { return check_module(b, o); }});
                flags["multiplicative"] =
                    is_endomorphism(b.algebra.alpha, {{"bracket", &b.algebra.bracket}}, o.jobs).passed();
            }
        },
        doc.bundle);
    return steps;
}

// Display names for the slots and output of each identity's tuples.
struct Naming {
    std::vector<const std::vector<std::string>*> slots;
    const std::vector<std::string>* out;
    bool scalar_defect = false;
};

std::vector<std::string> names_of(const GradedSpace& s)
{
    std::vector<std::string> n;
    for (const auto& b : s.basis()) {
        n.push_back(b.name);
    }
    return n;
}

std::string render_vector(const Vector& v, const std::vector<std::string>* names, bool scalar)
{
    if (v.is_zero()) {
        return "0";
    }
    std::string s;
    for (const auto& [i, c] : v) {
        std::string coeff = c.to_string();
        const std::string name = scalar ? "" : (names && i < names->size() ? (*names)[i] : "#" + std::to_string(i));
        if (!s.empty()) {
            if (coeff.front() == '-') {
                s += " - ";
                coeff.erase(0, 1);
            } else {
                s += " + ";
            }
        }
        if (scalar) {
            s += coeff;
        } else if (coeff == "1") {
            s += name;
        } else if (coeff == "-1") {
            s += "-" + name;
        } else {
            s += coeff + "*" + name;
        }
    }
    return s;
}

std::string render_tuple(const std::vector<std::size_t>& t, const Naming& n)
{
    std::string s = "(";
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (k != 0) {
            s += ", ";
        }
        const auto* names = k < n.slots.size() ? n.slots[k] : nullptr;
        s += names && t[k] < names->size() ? (*names)[t[k]] : std::to_string(t[k]);
    }
    return s + ")";
}

void render(const CheckReport& r, const std::function<Naming(const std::string&)>& naming, int depth,
            std::string& out)
{
    constexpr std::size_t kMaxListed = 20;
    const std::string pad(static_cast<std::size_t>(2 * depth), ' ');
    if (depth > 0) {
        out += pad + (r.passed() ? "pass  " : "FAIL  ") + r.identity;
        if (r.precondition_failure) {
            out += "  (precondition: " + *r.precondition_failure + ")";
        }
        out += "\n";
    }
    const Naming n = naming(r.identity);
    for (std::size_t k = 0; k < r.violations.size() && k < kMaxListed; ++k) {
        const auto& v = r.violations[k];
        out += pad + "    at " + render_tuple(v.tuple, n) + ": defect " + render_vector(v.defect, n.out, n.scalar_defect);
        if (!v.detail.empty()) {
            out += "  [" + v.detail + "]";
        }
        out += "\n";
    }
    if (r.violations.size() > kMaxListed) {
        out += pad + "    ... " + std::to_string(r.violations.size() - kMaxListed) + " more\n";
    }
    for (const auto& p : r.parts) {
        render(p, naming, depth + 1, out);
    }
}

} // namespace

std::string_view to_string(Role role)
{
    switch (role) {
    case Role::Defining:
        return "defining";
    case Role::Consequence:
        return "consequence";
    case Role::Property:
        return "property";
    }
    return "property";
}

bool SuiteResult::passed() const
{
    for (const auto& e : entries) {
        if (e.role != Role::Property && !e.skipped && !e.report.passed()) {
            return false;
        }
    }
    return true;
}

std::vector<std::string> suite_identities(BundleKind kind)
{
    switch (kind) {
    case BundleKind::NonAssociative:
        return {"bicharacter", "evenness", "hom-associativity", "hom-flexible", "hom-alternative"};
    case BundleKind::Akivis:
        return {"bicharacter",  "evenness",        "skew-symmetry", "akivis", "hom-flexible",
                "hom-alternative", "hom-lie", "flexible-akivis-relation"};
    case BundleKind::Leibniz:
        return {"bicharacter", "evenness", "color-leibniz", "leibniz-consequences", "hom-lie"};
    case BundleKind::NHLP:
        return {"bicharacter", "evenness", "nhlp", "commutative"};
    case BundleKind::Dialgebra:
        return {"evenness", "dialgebra"};
    case BundleKind::Module:
        return {"bicharacter", "evenness", "module"};
    }
    return {};
}

SuiteResult run_suite(const BundleDocument& doc, std::string_view identity, const CheckOptions& options)
{
    SuiteResult result{kind_of(doc.bundle), {}, {}, options.flexibility};
    auto steps = steps_for(doc, options, result.flags);
    const bool all = identity == "all";
    if (!all) {
        const bool known = std::any_of(steps.begin(), steps.end(), [&](const Step& s) { return s.id == identity; });
        if (!known) {
            std::string list;
            for (const auto& s : steps) {
                list += (list.empty() ? "" : ", ") + s.id;
            }
            throw InputError("identity \"" + std::string(identity) + "\" does not apply to kind " +
                             std::string(to_string(result.kind)) + " (available: all, " + list + ")");
        }
    }
    for (const auto& s : steps) {
        if (!all && s.id != identity) {
            continue;
        }
        SuiteEntry e{s.run(), all ? s.role : Role::Defining, false};
        if (e.role != Role::Defining && e.report.precondition_failed()) {
            e.skipped = true;
            e.report.parts.clear();
        }
        if (e.report.identity == "hom-flexible") {
            for (const auto& [k, v] : e.report.flags) {
                result.flags[k] = v;
            }
            result.flags["flexible"] = e.report.passed();
        } else if (e.report.identity == "hom-alternative") {
            result.flags["alternative"] = e.report.passed();
        }
        for (const auto& [k, v] : e.report.flags) {
            if (e.report.identity != "hom-flexible") {
                result.flags[k] = v;
            }
        }
        result.entries.push_back(std::move(e));
    }
    return result;
}

std::string machine_report(const SuiteResult& result, std::string_view input_digest)
{
    detail::OrderedJson j;
    j["schema"] = kReportSchema;
    j["tool"] = "colorhom";
    j["version"] = tool_version();
    j["input_digest"] = input_digest;
    j["kind"] = to_string(result.kind);
    j["options"]["flexibility"] = to_string(result.flexibility);
    j["passed"] = result.passed();
    detail::OrderedJson results = detail::OrderedJson::array();
    for (const auto& e : result.entries) {
        detail::OrderedJson r = detail::report_json(e.report);
        r["role"] = to_string(e.role);
        r["skipped"] = e.skipped;
        results.push_back(std::move(r));
    }
    j["results"] = std::move(results);
    detail::OrderedJson flags = detail::OrderedJson::object();
    for (const auto& [k, v] : result.flags) {
        flags[k] = v;
    }
    j["flags"] = std::move(flags);
    return j.dump(2) + "\n";
}

std::string text_report(const SuiteResult& result, const BundleDocument& doc, std::string_view input_digest)
{
    std::vector<std::string> main_names;
    std::vector<std::string> module_names;
    std::visit(
        [&](const auto& b) {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, ModuleBundle>) {
                main_names = names_of(b.algebra.space);
                module_names = names_of(b.module_space);
            } else {
                main_names = names_of(b.space);
            }
        },
        doc.bundle);
    static const std::vector<std::string> none;
    const auto naming = [&](const std::string& id) {
        const auto* L = &main_names;
        const auto* M = &module_names;
        if (id == "bicharacter") {
            return Naming{{}, &none, true};
        }
        if (id == "evenness.alpha" || id == "evenness.alphaM") {
            const auto* s = id == "evenness.alphaM" ? M : L;
            return Naming{{s, s}, s, false};
        }
        if (id == "evenness.left" || id == "module.alpha-left") {
            return Naming{{L, M}, M, false};
        }
        if (id == "evenness.right" || id == "module.alpha-right") {
            return Naming{{M, L}, M, false};
        }
        if (id == "module.lm11") {
            return Naming{{L, L, M}, M, false};
        }
        if (id == "module.lm22") {
            return Naming{{M, L, L}, M, false};
        }
        if (id == "module.lm33") {
            return Naming{{L, M, L}, M, false};
        }
        return Naming{{L, L, L}, L, false};
    };

    std::string out = "colorhom " + std::string(tool_version()) + "  kind " + std::string(to_string(result.kind)) +
                      "  flexibility " + std::string(to_string(result.flexibility)) + "\n";
    out += "input sha256 " + std::string(input_digest) + "\n";
    for (const auto& e : result.entries) {
        std::string status;
        if (e.skipped) {
            status = "SKIP";
        } else if (e.report.passed()) {
            status = "PASS";
        } else {
            status = e.role == Role::Property ? "no  " : "FAIL";
        }
        out += status + "  " + e.report.identity + "  (" + std::string(to_string(e.role));
        const std::size_t n = e.report.violation_count();
        if (n != 0 && !e.skipped) {
            out += ", " + std::to_string(n) + (n == 1 ? " violation" : " violations");
        }
        if (e.report.precondition_failure) {
            out += ", precondition: " + *e.report.precondition_failure;
        }
        out += ")\n";
        if (!e.skipped && !e.report.passed()) {
            render(e.report, naming, 0, out);
        }
    }
    if (!result.flags.empty()) {
        out += "flags:";
        for (const auto& [k, v] : result.flags) {
            out += " " + k + "=" + (v ? "true" : "false");
        }
        out += "\n";
    }
    out += std::string("result: ") + (result.passed() ? "PASS" : "FAIL") + "\n";
    return out;
}

} // namespace colorhom

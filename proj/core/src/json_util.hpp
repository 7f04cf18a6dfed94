#pragma once

#include <json.hpp>

#include "colorhom/report.hpp"
#include "colorhom/scalar.hpp"
#include "colorhom/vector.hpp"

namespace colorhom::detail {

using OrderedJson = nlohmann::ordered_json;

/// "p/q" for the rationals, a coefficient list otherwise.
inline OrderedJson scalar_json(const Scalar& s)
{
    if (s.field().order() == 1) {
        return s.coefficient_strings().front();
    }
    return s.coefficient_strings();
}

inline OrderedJson vector_json(const Vector& v)
{
    OrderedJson out = OrderedJson::object();
    for (const auto& [i, c] : v) {
        out[std::to_string(i)] = scalar_json(c);
    }
    return out;
}

inline OrderedJson report_json(const CheckReport& r)
{
    OrderedJson j;
    j["identity"] = r.identity;
    j["passed"] = r.passed();
    if (r.precondition_failure) {
        j["precondition_failure"] = *r.precondition_failure;
    }
    OrderedJson vs = OrderedJson::array();
    for (const auto& v : r.violations) {
        OrderedJson e;
        e["tuple"] = v.tuple;
        e["defect"] = vector_json(v.defect);
        if (!v.detail.empty()) {
            e["detail"] = v.detail;
        }
        vs.push_back(std::move(e));
    }
    j["violations"] = std::move(vs);
    if (!r.parts.empty()) {
        OrderedJson ps = OrderedJson::array();
        for (const auto& p : r.parts) {
            ps.push_back(report_json(p));
        }
        j["parts"] = std::move(ps);
    }
    if (!r.flags.empty()) {
        OrderedJson fs = OrderedJson::object();
        for (const auto& [k, b] : r.flags) {
            fs[k] = b;
        }
        j["flags"] = std::move(fs);
    }
    return j;
}

} // namespace colorhom::detail

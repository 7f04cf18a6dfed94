#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "colorhom/document.hpp"

namespace colorhom {

struct FixtureInfo {
    std::string name;
    std::string summary;
};

/// Built-in example documents, in listing order.
const std::vector<FixtureInfo>& fixture_list();
/// Throws InputError for an unknown name.
BundleDocument fixture(std::string_view name);

/// Dim 2, ungraded, [e2, e2] = e1, alpha = id.
LeibnizBundle fix_l2();
/// Dim 2, ungraded, mu(e1, e2) = e1, mu(e2, e1) = e2, alpha = id.
NonAssocBundle fix_na2();
/// Dim 1, -| = |- with e1 e1 = e1, alpha = id.
DialgebraBundle fix_d1();
/// Z_2 with the super sign; f even, e odd, [e, e] = f, alpha = id.
LeibnizBundle fix_s1();
/// The Grassmann algebra on two odd generators with {t1, t2} = c12 * 1,
/// {t1, t1} = c11, {t2, t2} = c22, as a color NHLP-algebra with alpha = id.
NHLPBundle grassmann_poisson(const CyclotomicField& field, const Scalar& c11, const Scalar& c12, const Scalar& c22);

} // namespace colorhom

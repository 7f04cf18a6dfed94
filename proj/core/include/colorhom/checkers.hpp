#pragma once

#include <cstddef>

#include "colorhom/bundles.hpp"
#include "colorhom/report.hpp"

namespace colorhom {

// Every checker enumerates all homogeneous basis tuples of the relevant
// arity. All identities are multilinear, so holding on basis tuples is
// the same as holding on all homogeneous elements. Reported defects are
// LHS - RHS of the identity as written in each function's comment;
// eps(x, y) always means eps(deg x, deg y) on the basis arguments.

/// as(x, y, z) = mu(mu(x, y), alpha z) - mu(alpha x, mu(y, z)).
Vector hom_associator(const NonAssocBundle& b, std::size_t x, std::size_t y, std::size_t z);
/// The Hom-associator as a trilinear table.
MultilinearMap associator_map(const MultilinearMap& mu, const EvenMap& alpha);

/// "skew-symmetry": [x, y] + eps(x, y) [y, x] = 0, checked on pairs x <= y.
CheckReport check_skew_symmetry(const MultilinearMap& bracket, const Bicharacter& eps, const GradedSpace& space,
                                const CheckOptions& options = {});

/// "hom-flexible" with parts ".diagonal" (T(x, y, x) = 0) and ".polarized"
/// in the selected mode. The flags "flexible.literal" and
/// "flexible.eps-polarized" record the verdict of both modes.
CheckReport check_flexible(const MultilinearMap& ternary, const Bicharacter& eps, const GradedSpace& space,
                           const CheckOptions& options = {});
/// "hom-alternative" with parts ".swap12": T(x,y,z) + eps(x,y) T(y,x,z) = 0
/// and ".swap23": T(x,y,z) + eps(y,z) T(x,z,y) = 0.
CheckReport check_alternative(const MultilinearMap& ternary, const Bicharacter& eps, const GradedSpace& space,
                              const CheckOptions& options = {});
/// "flexible-alternative": both of the above on the Hom-associator, with
/// flags "flexible" and "alternative".
CheckReport check_flexible_alternative(const NonAssocBundle& b, const CheckOptions& options = {});
CheckReport check_flexible_alternative(const AkivisBundle& b, const CheckOptions& options = {});

/// "akivis": cyc eps(z,x) [[x,y], alpha z] = cyc eps(z,x) ([x,y,z] - eps(x,y) [y,x,z]).
/// Gated on skew-symmetry of the bracket.
CheckReport check_akivis_identity(const AkivisBundle& b, const CheckOptions& options = {});

/// "hom-lie": cyc eps(z,x) [[x,y], alpha z] = 0. Gated on skew-symmetry.
CheckReport check_hom_lie(const GradedSpace& space, const Bicharacter& eps, const MultilinearMap& bracket,
                          const EvenMap& alpha, const CheckOptions& options = {});
CheckReport check_hom_lie(const AkivisBundle& b, const CheckOptions& options = {});
CheckReport check_hom_lie(const LeibnizBundle& b, const CheckOptions& options = {});

/// "flexible-akivis-relation":
/// cyc eps(z,x) [[x,y], alpha z] = cyc (eps(z,x) + eps(x,y) eps(y,z)) [x,y,z].
/// Gated on hom-flexible in the selected mode.
CheckReport check_flexible_akivis_relation(const AkivisBundle& b, const CheckOptions& options = {});

/// "hom-associativity": mu(alpha x, mu(y, z)) = mu(mu(x, y), alpha z).
CheckReport check_hom_associativity(const MultilinearMap& mu, const EvenMap& alpha, const GradedSpace& space,
                                    const CheckOptions& options = {});

/// "color-leibniz": [alpha x, [y, z]] = [[x, y], alpha z] + eps(x, y) [alpha y, [x, z]].
CheckReport check_color_leibniz(const GradedSpace& space, const Bicharacter& eps, const MultilinearMap& bracket,
                                const EvenMap& alpha, const CheckOptions& options = {});
CheckReport check_color_leibniz(const LeibnizBundle& b, const CheckOptions& options = {});

/// "leibniz-consequences", gated on color-leibniz. Writing x.y for the
/// Leibniz bracket and [x, y] = x.y - eps(x, y) y.x:
///   "leibniz.ia":      (x.y + eps(x, y) y.x) . alpha z = 0
///   "leibniz.bracket": [x.y, alpha z] + eps(x, y) [alpha y, x.z] = alpha x . [y, z]
CheckReport check_leibniz_consequences(const LeibnizBundle& b, const CheckOptions& options = {});

/// "commutative": mu(x, y) = eps(x, y) mu(y, x), checked on pairs x <= y.
CheckReport check_eps_commutative(const MultilinearMap& mu, const Bicharacter& eps, const GradedSpace& space,
                                  const CheckOptions& options = {});

/// "nhlp" with parts "nhlp.leibniz", "nhlp.hom-associativity" and
/// "nhlp.compatibility":
///   [alpha x, mu(y, z)] = mu([x, y], alpha z) + eps(x, y) mu(alpha y, [x, z]).
/// The flag "commutative" records eps-commutativity of mu.
CheckReport check_nhlp(const NHLPBundle& b, const CheckOptions& options = {});

/// "dialgebra" with parts "dialgebra.axiom1" ... "dialgebra.axiom5":
///   (x |- y) -| alpha z = alpha x |- (y -| z)
///   alpha x -| (y -| z) = (x -| y) -| alpha z
///   (x -| y) -| alpha z = alpha x -| (y |- z)
///   (x -| y) |- alpha z = alpha x |- (y |- z)
///   alpha x |- (y |- z) = (x |- y) |- alpha z
/// Throws InputError on a graded space.
CheckReport check_dialgebra(const DialgebraBundle& b, const CheckOptions& options = {});

/// "module", gated on color-leibniz of the algebra. Writing x.m for the
/// left action and m*x for the right action:
///   "module.alpha-left"  (x, m):    alphaM(x.m) = alpha x . alphaM m
///   "module.alpha-right" (m, x):    alphaM(m*x) = alphaM m * alpha x
///   "module.lm11" (x, y, m): [x,y] . alphaM m = alpha x . (y.m) - eps(x,y) alpha y . (x.m)
///   "module.lm22" (m, x, y): alphaM m * [x,y] = (x.m) * alpha y + eps(x,m) alpha x . (m*y)
///   "module.lm33" (x, m, y): alpha x . (m*y) = (x.m) * alpha y + eps(m,x) alphaM m * [x,y]
/// Module basis indices in tuples are module-local.
CheckReport check_module(const ModuleBundle& b, const CheckOptions& options = {});

} // namespace colorhom

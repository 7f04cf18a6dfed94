#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "colorhom/bundles.hpp"
#include "colorhom/report.hpp"

namespace colorhom {

/// A construction output together with the report that certified it.
template <class Bundle>
struct Certified {
    Bundle bundle;
    CheckReport report;
};

/// Raised when a construction's hypotheses fail or its output does not
/// re-certify. The report names the violated tuple.
class ConstructionError : public std::runtime_error {
public:
    ConstructionError(const std::string& what, CheckReport report);

    const CheckReport& report() const noexcept { return report_; }

private:
    CheckReport report_;
};

/// Commutator bracket and Hom-associator ternary of (A, mu, alpha). The
/// "multiplicative" flag is set when alpha is an endomorphism of mu.
/// Throws InputError on an ill-formed bundle.
Certified<AkivisBundle> akivis_from_algebra(const NonAssocBundle& b, const CheckOptions& options = {});

/// bracket -> beta^n o bracket, ternary -> beta^(2n) o ternary,
/// alpha -> beta^n o alpha. Requires beta to be an endomorphism of both
/// operations and the input to satisfy the Akivis identity; n = 0 returns
/// the input. The "multiplicative" flag needs a multiplicative input and
/// beta o alpha = alpha o beta.
Certified<AkivisBundle> twist_akivis(const AkivisBundle& b, const EvenMap& beta, unsigned n,
                                     const CheckOptions& options = {});
/// `times` successive twists with n = 1.
Certified<AkivisBundle> twist_akivis_iterated(const AkivisBundle& b, const EvenMap& beta, unsigned times,
                                              const CheckOptions& options = {});

/// mu -> beta^n o mu, bracket -> beta^n o bracket, alpha -> beta^n o alpha.
/// Requires beta to be an endomorphism of mu and bracket and the input to
/// pass check_nhlp. The output is flagged multiplicative when alpha is the
/// identity, or when the input is multiplicative and beta commutes with
/// alpha.
Certified<NHLPBundle> twist_nhlp(const NHLPBundle& b, const EvenMap& beta, unsigned n,
                                 const CheckOptions& options = {});
Certified<NHLPBundle> twist_nhlp_iterated(const NHLPBundle& b, const EvenMap& beta, unsigned times,
                                          const CheckOptions& options = {});
/// The same twist for a color Hom-Leibniz algebra alone.
Certified<LeibnizBundle> twist_leibniz(const LeibnizBundle& b, const EvenMap& beta, unsigned n,
                                       const CheckOptions& options = {});

/// The opposite product mu_op(x, y) = eps(x, y) mu(y, x), which is mu(y, x)
/// on a trivially graded space.
MultilinearMap eps_opposite(const MultilinearMap& mu, const Bicharacter& eps, const GradedSpace& space);

/// (P, mu_op, bracket, alpha) and (P, k mu, k bracket, alpha). Throws
/// InputError for k = 0.
std::pair<Certified<NHLPBundle>, Certified<NHLPBundle>> nhlp_opposite_and_scale(const NHLPBundle& b,
                                                                              const Scalar& k,
                                                                              const CheckOptions& options = {});

/// A (+) K with (x + a u)(y + b u) = b x + a y + ab u, the bracket of A on
/// the first summand, and alpha_A (+) id. The unit u is appended last with
/// degree zero. Inputs must be concentrated in degree zero.
Certified<NHLPBundle> trivial_extension(const LeibnizBundle& b, const CheckOptions& options = {});

/// (D, -|, [x, y] = x |- y - y -| x, alpha).
Certified<NHLPBundle> leibniz_from_dialgebra(const DialgebraBundle& b, const CheckOptions& options = {});

/// left(x, m) -> left(alpha_L^2 x, m), right(m, x) -> right(m, alpha_L^2 x).
/// Requires a certified module over a multiplicative algebra.
Certified<ModuleBundle> twist_module(const ModuleBundle& b, const CheckOptions& options = {});

enum class TensorVariant { AsPrinted, Corrected };

std::string_view to_string(TensorVariant v);
TensorVariant parse_tensor_variant(std::string_view text);

/// Experimental: P (x) P with basis index i * dim + j for e_i (x) e_j,
///   as-printed: (x1 (x) x2)(y1 (x) y2) = x1 y1 (x) y1 y2
///   corrected:  (x1 (x) x2)(y1 (x) y2) = x1 y1 (x) x2 y2
/// and [x1 (x) x2, y1 (x) y2] = [[x1, x2], y1] (x) y2 + y1 (x) [[x1, x2], y2].
/// The report is attached without any pass guarantee. The input must be
/// untwisted and concentrated in degree zero.
Certified<NHLPBundle> tensor_square_nhlp(const NHLPBundle& p, TensorVariant variant, const CheckOptions& options = {});

} // namespace colorhom

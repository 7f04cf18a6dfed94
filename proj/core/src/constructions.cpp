#include "colorhom/constructions.hpp"

#include "colorhom/checkers.hpp"
#include "colorhom/error.hpp"
#include "colorhom/graded_linalg.hpp"

namespace colorhom {

namespace {

std::string cite(const CheckReport& r)
{
    std::string s = r.identity;
    if (r.precondition_failure) {
        s += " (" + *r.precondition_failure + ")";
    }
    if (const auto* v = r.first_violation()) {
        s += " at " + tuple_to_string(v->tuple);
    }
    return s;
}

void require(const CheckReport& r, const std::string& what)
{
    if (!r.passed()) {
        throw ConstructionError(what + ": " + cite(r), r);
    }
}

void require_even(const EvenMap& beta, const GradedSpace& space)
{
    if (beta.rows() != space.dim() || beta.cols() != space.dim() || &beta.field() != &space.field()) {
        throw InputError("twisting map has the wrong shape");
    }
    auto r = check_evenness(beta, space);
    if (!r.passed()) {
        throw InputError("twisting map is not even: " + cite(r));
    }
}

bool degree_zero(const GradedSpace& space)
{
    const auto zero = space.group().zero();
    for (const auto& e : space.basis()) {
        if (e.degree != zero) {
            return false;
        }
    }
    return true;
}

Vector tensor(const Vector& v, const Vector& w, std::size_t n)
{
    Vector out;
    for (const auto& [p, a] : v) {
        for (const auto& [q, b] : w) {
            out.add(p * n + q, a * b);
        }
    }
    return out;
}

} // namespace

ConstructionError::ConstructionError(const std::string& what, CheckReport report)
    : std::runtime_error(what), report_(std::move(report))
{
}

Certified<AkivisBundle> akivis_from_algebra(const NonAssocBundle& b, const CheckOptions& options)
{
    validate(b);
    AkivisBundle out{b.space, b.eps, commutator_map(b.mu, b.eps, b.space), associator_map(b.mu, b.alpha), b.alpha};
    auto report = check_akivis_identity(out, options);
    report.flags["multiplicative"] = is_endomorphism(b.alpha, {{"mu", &b.mu}}, options.jobs).passed();
    require(report, "associated Akivis bundle does not certify");
    return {std::move(out), std::move(report)};
}

Certified<AkivisBundle> twist_akivis(const AkivisBundle& b, const EvenMap& beta, unsigned n,
                                     const CheckOptions& options)
{
    validate(b);
    require_even(beta, b.space);
    require(check_akivis_identity(b, options), "input is not a color Hom-Akivis algebra");
    if (n == 0) {
        auto report = check_akivis_identity(b, options);
        report.flags["multiplicative"] =
            is_endomorphism(b.alpha, {{"bracket", &b.bracket}, {"ternary", &b.ternary}}, options.jobs).passed();
        return {b, std::move(report)};
    }
    require(is_endomorphism(beta, {{"bracket", &b.bracket}, {"ternary", &b.ternary}}, options.jobs),
            "twisting map is not an endomorphism");
    const EvenMap bn = beta.power(n);
    const EvenMap b2n = bn.compose(bn);
    AkivisBundle out{b.space, b.eps, post_compose(bn, b.bracket), post_compose(b2n, b.ternary), bn.compose(b.alpha)};
    auto report = check_akivis_identity(out, options);
    const bool input_mult =
        is_endomorphism(b.alpha, {{"bracket", &b.bracket}, {"ternary", &b.ternary}}, options.jobs).passed();
    report.flags["multiplicative"] = input_mult && beta.compose(b.alpha) == b.alpha.compose(beta);
    require(report, "twisted Akivis bundle does not certify");
    return {std::move(out), std::move(report)};
}

Certified<AkivisBundle> twist_akivis_iterated(const AkivisBundle& b, const EvenMap& beta, unsigned times,
                                              const CheckOptions& options)
{
    Certified<AkivisBundle> cur = twist_akivis(b, beta, 0, options);
    for (unsigned i = 0; i < times; ++i) {
        cur = twist_akivis(cur.bundle, beta, 1, options);
    }
    return cur;
}

Certified<NHLPBundle> twist_nhlp(const NHLPBundle& b, const EvenMap& beta, unsigned n, const CheckOptions& options)
{
    validate(b);
    require_even(beta, b.space);
    require(check_nhlp(b, options), "input is not a color NHLP-algebra");
    const std::vector<NamedOp> ops{{"mu", &b.mu}, {"bracket", &b.bracket}};
    const bool input_mult = is_endomorphism(b.alpha, ops, options.jobs).passed();
    if (n == 0) {
        auto report = check_nhlp(b, options);
        report.flags["multiplicative"] = input_mult;
        return {b, std::move(report)};
    }
    require(is_endomorphism(beta, ops, options.jobs), "twisting map is not an endomorphism");
    const EvenMap bn = beta.power(n);
    NHLPBundle out{b.space, b.eps, post_compose(bn, b.mu), post_compose(bn, b.bracket), bn.compose(b.alpha)};
    auto report = check_nhlp(out, options);
    report.flags["multiplicative"] =
        b.alpha.is_identity() || (input_mult && beta.compose(b.alpha) == b.alpha.compose(beta));
    require(report, "twisted NHLP bundle does not certify");
    return {std::move(out), std::move(report)};
}

Certified<NHLPBundle> twist_nhlp_iterated(const NHLPBundle& b, const EvenMap& beta, unsigned times,
                                          const CheckOptions& options)
{
    Certified<NHLPBundle> cur = twist_nhlp(b, beta, 0, options);
    for (unsigned i = 0; i < times; ++i) {
        cur = twist_nhlp(cur.bundle, beta, 1, options);
    }
    return cur;
}

Certified<LeibnizBundle> twist_leibniz(const LeibnizBundle& b, const EvenMap& beta, unsigned n,
                                       const CheckOptions& options)
{
    validate(b);
    require_even(beta, b.space);
    require(check_color_leibniz(b, options), "input is not a color Hom-Leibniz algebra");
    const std::vector<NamedOp> ops{{"bracket", &b.bracket}};
    const bool input_mult = is_endomorphism(b.alpha, ops, options.jobs).passed();
    if (n == 0) {
        auto report = check_color_leibniz(b, options);
        report.flags["multiplicative"] = input_mult;
        return {b, std::move(report)};
    }
    require(is_endomorphism(beta, ops, options.jobs), "twisting map is not an endomorphism");
    const EvenMap bn = beta.power(n);
    LeibnizBundle out{b.space, b.eps, post_compose(bn, b.bracket), bn.compose(b.alpha)};
    auto report = check_color_leibniz(out, options);
    report.flags["multiplicative"] =
        b.alpha.is_identity() || (input_mult && beta.compose(b.alpha) == b.alpha.compose(beta));
    require(report, "twisted Leibniz bundle does not certify");
    return {std::move(out), std::move(report)};
}

MultilinearMap eps_opposite(const MultilinearMap& mu, const Bicharacter& eps, const GradedSpace& space)
{
    const EpsTable e(eps, space);
    MultilinearMap out(mu.field(), mu.slot_dims(), mu.out_dim());
    mu.for_each([&](const MultilinearMap::Tuple& t, const Vector& v) { out.set({t[1], t[0]}, v.scaled(e(t[1], t[0]))); });
    return out;
}

std::pair<Certified<NHLPBundle>, Certified<NHLPBundle>> nhlp_opposite_and_scale(const NHLPBundle& b,
                                                                              const Scalar& k,
                                                                              const CheckOptions& options)
{
    if (k.is_zero()) {
        throw InputError("scaling factor must be nonzero");
    }
    validate(b);
    require(check_nhlp(b, options), "input is not a color NHLP-algebra");
    NHLPBundle op{b.space, b.eps, eps_opposite(b.mu, b.eps, b.space), b.bracket, b.alpha};
    auto op_report = check_nhlp(op, options);
    require(op_report, "opposite bundle does not certify");
    NHLPBundle sc{b.space, b.eps, scaled(b.mu, k), scaled(b.bracket, k), b.alpha};
    auto sc_report = check_nhlp(sc, options);
    require(sc_report, "scaled bundle does not certify");
    return {Certified<NHLPBundle>{std::move(op), std::move(op_report)},
            Certified<NHLPBundle>{std::move(sc), std::move(sc_report)}};
}

Certified<NHLPBundle> trivial_extension(const LeibnizBundle& b, const CheckOptions& options)
{
    validate(b);
    if (!degree_zero(b.space)) {
        throw InputError("trivial extension needs an ungraded algebra");
    }
    require(check_color_leibniz(b, options), "input is not a color Hom-Leibniz algebra");
    const std::size_t n = b.space.dim();
    const auto& field = b.space.field();
    const std::size_t u = n;
    GradedSpace space = b.space.extended({"u", b.space.group().zero()});
    MultilinearMap mu = MultilinearMap::internal(field, 2, n + 1);
    MultilinearMap bracket = MultilinearMap::internal(field, 2, n + 1);
    const Scalar one(field, 1);
    for (std::size_t i = 0; i < n; ++i) {
        mu.add({i, u}, i, one);
        mu.add({u, i}, i, one);
    }
    mu.add({u, u}, u, one);
    b.bracket.for_each([&](const MultilinearMap::Tuple& t, const Vector& v) { bracket.set(t, v); });
    NHLPBundle out{std::move(space), b.eps, std::move(mu), std::move(bracket),
                   b.alpha.direct_sum(EvenMap::identity(field, 1))};
    auto report = check_nhlp(out, options);
    require(report, "trivial extension does not certify");
    return {std::move(out), std::move(report)};
}

Certified<NHLPBundle> leibniz_from_dialgebra(const DialgebraBundle& b, const CheckOptions& options)
{
    validate(b);
    require(check_dialgebra(b, options), "input is not a Hom-dialgebra");
    MultilinearMap bracket = b.vdash;
    b.dashv.for_each([&](const MultilinearMap::Tuple& t, const Vector& v) {
        for (const auto& [i, c] : v) {
            bracket.add({t[1], t[0]}, i, -c);
        }
    });
    NHLPBundle out{b.space, Bicharacter::trivial(b.space.group(), b.space.field()), b.dashv, std::move(bracket),
                   b.alpha};
    auto report = check_nhlp(out, options);
    require(report, "dialgebra bracket does not certify");
    return {std::move(out), std::move(report)};
}

Certified<ModuleBundle> twist_module(const ModuleBundle& b, const CheckOptions& options)
{
    validate(b);
    require(check_module(b, options), "input is not a color Hom-Leibniz module");
    require(is_endomorphism(b.algebra.alpha, {{"bracket", &b.algebra.bracket}}, options.jobs),
            "algebra is not multiplicative");
    const EvenMap a2 = b.algebra.alpha.power(2);
    ModuleBundle out{b.algebra, b.module_space, pre_compose(b.left, 0, a2), pre_compose(b.right, 1, a2), b.alphaM};
    auto report = check_module(out, options);
    require(report, "twisted module does not certify");
    return {std::move(out), std::move(report)};
}

std::string_view to_string(TensorVariant v)
{
    return v == TensorVariant::AsPrinted ? "as-printed" : "corrected";
}

TensorVariant parse_tensor_variant(std::string_view text)
{
    if (text == "as-printed") {
        return TensorVariant::AsPrinted;
    }
    if (text == "corrected") {
        return TensorVariant::Corrected;
    }
    throw InputError("unknown tensor variant \"" + std::string(text) + "\" (expected as-printed or corrected)");
}

Certified<NHLPBundle> tensor_square_nhlp(const NHLPBundle& p, TensorVariant variant, const CheckOptions& options)
{
    validate(p);
    if (!degree_zero(p.space) || !p.alpha.is_identity()) {
        throw InputError("tensor square needs an untwisted, ungraded input");
    }
    const std::size_t n = p.space.dim();
    const auto& field = p.space.field();
    std::vector<BasisElement> basis;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            basis.push_back({p.space.name(i) + "@" + p.space.name(j), p.space.group().zero()});
        }
    }
    GradedSpace space(field, p.space.group(), std::move(basis));
    const std::size_t N = n * n;
    MultilinearMap mu = MultilinearMap::internal(field, 2, N);
    MultilinearMap br = MultilinearMap::internal(field, 2, N);
    const auto e = [&](std::size_t i) { return Vector::basis(i, field); };
    for (std::size_t x1 = 0; x1 < n; ++x1) {
        for (std::size_t x2 = 0; x2 < n; ++x2) {
            const Vector& c = p.bracket.at({x1, x2});
            for (std::size_t y1 = 0; y1 < n; ++y1) {
                for (std::size_t y2 = 0; y2 < n; ++y2) {
                    const Vector& left = p.mu.at({x1, y1});
                    const Vector& right =
                        variant == TensorVariant::AsPrinted ? p.mu.at({y1, y2}) : p.mu.at({x2, y2});
                    mu.set({x1 * n + x2, y1 * n + y2}, tensor(left, right, n));
                    Vector b = tensor(p.bracket(c, e(y1)), e(y2), n);
                    b += tensor(e(y1), p.bracket(c, e(y2)), n);
                    br.set({x1 * n + x2, y1 * n + y2}, std::move(b));
                }
            }
        }
    }
    NHLPBundle out{std::move(space), p.eps, std::move(mu), std::move(br), EvenMap::identity(field, N)};
    auto report = check_nhlp(out, options);
    report.flags["experimental"] = true;
    return {std::move(out), std::move(report)};
}

} // namespace colorhom

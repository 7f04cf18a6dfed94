#include "colorhom/bundles.hpp"

#include <array>

#include "colorhom/error.hpp"
#include "colorhom/graded_linalg.hpp"

namespace colorhom {

namespace {

constexpr std::array<std::pair<BundleKind, std::string_view>, 6> kKindNames{{
    {BundleKind::NonAssociative, "nonassociative"},
    {BundleKind::Akivis, "akivis"},
    {BundleKind::Leibniz, "leibniz"},
    {BundleKind::NHLP, "nhlp"},
    {BundleKind::Dialgebra, "dialgebra"},
    {BundleKind::Module, "module"},
}};

std::string first_problem(const CheckReport& r)
{
    if (r.precondition_failure) {
        return *r.precondition_failure;
    }
    if (const auto* v = r.first_violation()) {
        std::string s = "at " + tuple_to_string(v->tuple);
        if (!v->detail.empty()) {
            s += ": " + v->detail;
        }
        return s;
    }
    return "unknown problem";
}

void require(const CheckReport& r, const std::string& what)
{
    if (!r.passed()) {
        throw InputError(what + " " + first_problem(r));
    }
}

void check_frame(const GradedSpace& space, const Bicharacter& eps)
{
    if (&eps.field() != &space.field()) {
        throw InputError("bicharacter and space use different fields");
    }
    if (!(eps.group() == space.group())) {
        throw InputError("bicharacter and space use different grading groups");
    }
    require(validate_bicharacter(eps), "invalid bicharacter:");
}

void check_internal(const MultilinearMap& op, std::size_t arity, const GradedSpace& space, const char* name)
{
    if (op.arity() != arity) {
        throw InputError(std::string("operation \"") + name + "\" must have arity " + std::to_string(arity));
    }
    if (&op.field() != &space.field() || op.out_dim() != space.dim()) {
        throw InputError(std::string("operation \"") + name + "\" does not act on the bundle's space");
    }
    for (std::size_t d : op.slot_dims()) {
        if (d != space.dim()) {
            throw InputError(std::string("operation \"") + name + "\" does not act on the bundle's space");
        }
    }
    require(check_evenness(op, space), std::string("operation \"") + name + "\" is not even:");
}

void check_twist(const EvenMap& f, const GradedSpace& space, const char* name)
{
    if (&f.field() != &space.field() || f.rows() != space.dim() || f.cols() != space.dim()) {
        throw InputError(std::string("map \"") + name + "\" must be " + std::to_string(space.dim()) + "x" +
                         std::to_string(space.dim()));
    }
    require(check_evenness(f, space), std::string("map \"") + name + "\" is not even:");
}

} // namespace

std::string_view to_string(BundleKind kind)
{
    for (const auto& [k, name] : kKindNames) {
        if (k == kind) {
            return name;
        }
    }
    return "unknown";
}

BundleKind parse_bundle_kind(std::string_view text)
{
    for (const auto& [k, name] : kKindNames) {
        if (name == text) {
            return k;
        }
    }
    throw InputError("unknown bundle kind \"" + std::string(text) + "\"");
}

BundleKind kind_of(const StructureBundle& bundle)
{
    return static_cast<BundleKind>(bundle.index());
}

void validate(const NonAssocBundle& b)
{
    check_frame(b.space, b.eps);
    check_internal(b.mu, 2, b.space, "mu");
    check_twist(b.alpha, b.space, "alpha");
}

void validate(const AkivisBundle& b)
{
    check_frame(b.space, b.eps);
    check_internal(b.bracket, 2, b.space, "bracket");
    check_internal(b.ternary, 3, b.space, "ternary");
    check_twist(b.alpha, b.space, "alpha");
}

void validate(const LeibnizBundle& b)
{
    check_frame(b.space, b.eps);
    check_internal(b.bracket, 2, b.space, "bracket");
    check_twist(b.alpha, b.space, "alpha");
}

void validate(const NHLPBundle& b)
{
    check_frame(b.space, b.eps);
    check_internal(b.mu, 2, b.space, "mu");
    check_internal(b.bracket, 2, b.space, "bracket");
    check_twist(b.alpha, b.space, "alpha");
}

void validate(const DialgebraBundle& b)
{
    if (!b.space.group().is_trivial()) {
        throw InputError("dialgebras are ungraded; the grading group must be trivial");
    }
    check_internal(b.dashv, 2, b.space, "dashv");
    check_internal(b.vdash, 2, b.space, "vdash");
    check_twist(b.alpha, b.space, "alpha");
}

void validate(const ModuleBundle& b)
{
    validate(b.algebra);
    const GradedSpace& L = b.algebra.space;
    const GradedSpace& M = b.module_space;
    if (&M.field() != &L.field() || !(M.group() == L.group())) {
        throw InputError("module space and algebra use different fields or groups");
    }
    const auto check_action = [&](const MultilinearMap& op, bool left, const char* name) {
        const std::vector<std::size_t> dims = left ? std::vector{L.dim(), M.dim()} : std::vector{M.dim(), L.dim()};
        if (&op.field() != &L.field() || op.slot_dims() != dims || op.out_dim() != M.dim()) {
            throw InputError(std::string("action \"") + name + "\" has the wrong shape");
        }
        const std::vector<const GradedSpace*> slots = left ? std::vector{&L, &M} : std::vector{&M, &L};
        require(check_evenness(op, slots, M), std::string("action \"") + name + "\" is not even:");
    };
    check_action(b.left, true, "left");
    check_action(b.right, false, "right");
    check_twist(b.alphaM, M, "alphaM");
}

void validate(const StructureBundle& b)
{
    std::visit([](const auto& x) { validate(x); }, b);
}

} // namespace colorhom

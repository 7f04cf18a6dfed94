#include "colorhom/checkers.hpp"

#include "colorhom/error.hpp"
#include "colorhom/graded_linalg.hpp"

namespace colorhom {

namespace {

using Span = std::span<const std::size_t>;

std::vector<Vector> basis_vectors(const CyclotomicField& field, std::size_t n)
{
    std::vector<Vector> e;
    e.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        e.push_back(Vector::basis(i, field));
    }
    return e;
}

std::vector<std::size_t> cube(std::size_t n, std::size_t arity)
{
    return std::vector<std::size_t>(arity, n);
}

CheckReport scan(std::string id, std::vector<std::size_t> dims, const CheckOptions& options, const TupleProbe& probe)
{
    return CheckReport::leaf(std::move(id), scan_tuples(dims, options.jobs, probe));
}

// Shared pieces for the bracket identities on one space.
struct Frame {
    Frame(const GradedSpace& s, const Bicharacter& eps, const EvenMap& a)
        : space(s), e(eps, s), basis(basis_vectors(s.field(), s.dim())), alpha(a)
    {
    }

    const Vector& x(std::size_t i) const { return basis[i]; }
    const Vector& ax(std::size_t i) const { return alpha.column(i); }

    const GradedSpace& space;
    EpsTable e;
    std::vector<Vector> basis;
    const EvenMap& alpha;
};

// cyc eps(z, x) [[x, y], alpha z]
Vector jacobi_sum(const Frame& f, const MultilinearMap& br, std::size_t x, std::size_t y, std::size_t z)
{
    return cyclic_sum(
        [&](std::size_t a, std::size_t b, std::size_t c) { return br(br.at({a, b}), f.ax(c)).scaled(f.e(c, a)); }, x,
        y, z);
}

CheckReport gate(std::string id, std::string reason, CheckReport hypothesis)
{
    return CheckReport::precondition(std::move(id), std::move(reason), std::move(hypothesis));
}

} // namespace

Vector hom_associator(const NonAssocBundle& b, std::size_t x, std::size_t y, std::size_t z)
{
    const auto& mu = b.mu;
    return mu(mu.at({x, y}), b.alpha.column(z)) - mu(b.alpha.column(x), mu.at({y, z}));
}

MultilinearMap associator_map(const MultilinearMap& mu, const EvenMap& alpha)
{
    const std::size_t n = mu.out_dim();
    MultilinearMap t = MultilinearMap::internal(mu.field(), 3, n);
    auto entries = scan_tuples(cube(n, 3), 1, [&](Span s) {
        return mu(mu.at({s[0], s[1]}), alpha.column(s[2])) - mu(alpha.column(s[0]), mu.at({s[1], s[2]}));
    });
    for (auto& v : entries) {
        t.set(v.tuple, std::move(v.defect));
    }
    return t;
}

CheckReport check_skew_symmetry(const MultilinearMap& bracket, const Bicharacter& eps, const GradedSpace& space,
                                const CheckOptions& options)
{
    const EpsTable e(eps, space);
    return scan("skew-symmetry", cube(space.dim(), 2), options, [&](Span t) {
        if (t[0] > t[1]) {
            return Vector();
        }
        return bracket.at(t) + bracket.at({t[1], t[0]}).scaled(e(t[0], t[1]));
    });
}

CheckReport check_flexible(const MultilinearMap& T, const Bicharacter& eps, const GradedSpace& space,
                           const CheckOptions& options)
{
    const EpsTable e(eps, space);
    const auto dims = cube(space.dim(), 3);
    auto diagonal = scan("hom-flexible.diagonal", dims, options, [&](Span t) {
        return t[0] == t[2] ? T.at(t) : Vector();
    });
    auto literal = scan_tuples(dims, options.jobs, [&](Span t) {
        if (t[0] >= t[2] || space.degree(t[0]) != space.degree(t[2])) {
            return Vector();
        }
        return T.at(t) + T.at({t[2], t[1], t[0]});
    });
    auto polarized = scan_tuples(dims, options.jobs, [&](Span t) {
        if (t[0] >= t[2]) {
            return Vector();
        }
        return T.at(t) + T.at({t[2], t[1], t[0]}).scaled(e(t[0], t[2]));
    });
    const bool diag_ok = diagonal.passed();
    const bool literal_ok = diag_ok && literal.empty();
    const bool polarized_ok = diag_ok && polarized.empty();
    auto chosen = options.flexibility == FlexibilityMode::Literal ? std::move(literal) : std::move(polarized);
    auto r = CheckReport::composite(
        "hom-flexible", {std::move(diagonal), CheckReport::leaf("hom-flexible.polarized", std::move(chosen))});
    r.flags["flexible.literal"] = literal_ok;
    r.flags["flexible.eps-polarized"] = polarized_ok;
    return r;
}

CheckReport check_alternative(const MultilinearMap& T, const Bicharacter& eps, const GradedSpace& space,
                              const CheckOptions& options)
{
    const EpsTable e(eps, space);
    const auto dims = cube(space.dim(), 3);
    auto swap12 = scan("hom-alternative.swap12", dims, options, [&](Span t) {
        if (t[0] > t[1]) {
            return Vector();
        }
        return T.at(t) + T.at({t[1], t[0], t[2]}).scaled(e(t[0], t[1]));
    });
    auto swap23 = scan("hom-alternative.swap23", dims, options, [&](Span t) {
        if (t[1] > t[2]) {
            return Vector();
        }
        return T.at(t) + T.at({t[0], t[2], t[1]}).scaled(e(t[1], t[2]));
    });
    return CheckReport::composite("hom-alternative", {std::move(swap12), std::move(swap23)});
}

namespace {

CheckReport flexible_alternative(const MultilinearMap& T, const Bicharacter& eps, const GradedSpace& space,
                                 const CheckOptions& options)
{
    auto flex = check_flexible(T, eps, space, options);
    auto alt = check_alternative(T, eps, space, options);
    const bool flexible = flex.passed();
    const bool alternative = alt.passed();
    auto flags = flex.flags;
    auto r = CheckReport::composite("flexible-alternative", {std::move(flex), std::move(alt)});
    r.flags = std::move(flags);
    r.flags["flexible"] = flexible;
    r.flags["alternative"] = alternative;
    return r;
}

} // namespace

CheckReport check_flexible_alternative(const NonAssocBundle& b, const CheckOptions& options)
{
    return flexible_alternative(associator_map(b.mu, b.alpha), b.eps, b.space, options);
}

CheckReport check_flexible_alternative(const AkivisBundle& b, const CheckOptions& options)
{
    return flexible_alternative(b.ternary, b.eps, b.space, options);
}

CheckReport check_akivis_identity(const AkivisBundle& b, const CheckOptions& options)
{
    auto skew = check_skew_symmetry(b.bracket, b.eps, b.space, options);
    if (!skew.passed()) {
        return gate("akivis", "bracket is not eps-skew-symmetric", std::move(skew));
    }
    const Frame f(b.space, b.eps, b.alpha);
    const auto& T = b.ternary;
    return scan("akivis", cube(b.space.dim(), 3), options, [&](Span t) {
        Vector lhs = jacobi_sum(f, b.bracket, t[0], t[1], t[2]);
        Vector rhs = cyclic_sum(
            [&](std::size_t x, std::size_t y, std::size_t z) {
                Vector v = T.at({x, y, z});
                v.add_scaled(T.at({y, x, z}), -f.e(x, y));
                return v.scaled(f.e(z, x));
            },
            t[0], t[1], t[2]);
        return lhs - rhs;
    });
}

CheckReport check_hom_lie(const GradedSpace& space, const Bicharacter& eps, const MultilinearMap& bracket,
                          const EvenMap& alpha, const CheckOptions& options)
{
    auto skew = check_skew_symmetry(bracket, eps, space, options);
    if (!skew.passed()) {
        return gate("hom-lie", "bracket is not eps-skew-symmetric", std::move(skew));
    }
    const Frame f(space, eps, alpha);
    return scan("hom-lie", cube(space.dim(), 3), options,
                [&](Span t) { return jacobi_sum(f, bracket, t[0], t[1], t[2]); });
}

CheckReport check_hom_lie(const AkivisBundle& b, const CheckOptions& options)
{
    return check_hom_lie(b.space, b.eps, b.bracket, b.alpha, options);
}

CheckReport check_hom_lie(const LeibnizBundle& b, const CheckOptions& options)
{
    return check_hom_lie(b.space, b.eps, b.bracket, b.alpha, options);
}

CheckReport check_flexible_akivis_relation(const AkivisBundle& b, const CheckOptions& options)
{
    auto flex = check_flexible(b.ternary, b.eps, b.space, options);
    if (!flex.passed()) {
        return gate("flexible-akivis-relation",
                    "ternary is not hom-flexible (" + std::string(to_string(options.flexibility)) + ")",
                    std::move(flex));
    }
    const Frame f(b.space, b.eps, b.alpha);
    return scan("flexible-akivis-relation", cube(b.space.dim(), 3), options, [&](Span t) {
        Vector lhs = jacobi_sum(f, b.bracket, t[0], t[1], t[2]);
        Vector rhs = cyclic_sum(
            [&](std::size_t x, std::size_t y, std::size_t z) {
                return b.ternary.at({x, y, z}).scaled(f.e(z, x) + f.e(x, y) * f.e(y, z));
            },
            t[0], t[1], t[2]);
        return lhs - rhs;
    });
}

CheckReport check_hom_associativity(const MultilinearMap& mu, const EvenMap& alpha, const GradedSpace& space,
                                    const CheckOptions& options)
{
    return scan("hom-associativity", cube(space.dim(), 3), options, [&](Span t) {
        return mu(alpha.column(t[0]), mu.at({t[1], t[2]})) - mu(mu.at({t[0], t[1]}), alpha.column(t[2]));
    });
}

CheckReport check_color_leibniz(const GradedSpace& space, const Bicharacter& eps, const MultilinearMap& br,
                                const EvenMap& alpha, const CheckOptions& options)
{
    const Frame f(space, eps, alpha);
    return scan("color-leibniz", cube(space.dim(), 3), options, [&](Span t) {
        const std::size_t x = t[0];
        const std::size_t y = t[1];
        const std::size_t z = t[2];
        Vector d = br(f.ax(x), br.at({y, z}));
        d -= br(br.at({x, y}), f.ax(z));
        d.add_scaled(br(f.ax(y), br.at({x, z})), -f.e(x, y));
        return d;
    });
}

CheckReport check_color_leibniz(const LeibnizBundle& b, const CheckOptions& options)
{
    return check_color_leibniz(b.space, b.eps, b.bracket, b.alpha, options);
}

CheckReport check_leibniz_consequences(const LeibnizBundle& b, const CheckOptions& options)
{
    auto leib = check_color_leibniz(b, options);
    if (!leib.passed()) {
        return gate("leibniz-consequences", "color-leibniz fails", std::move(leib));
    }
    const Frame f(b.space, b.eps, b.alpha);
    const auto& dot = b.bracket;
    const MultilinearMap comm = commutator_map(dot, b.eps, b.space);
    const auto dims = cube(b.space.dim(), 3);
    auto ia = scan("leibniz.ia", dims, options, [&](Span t) {
        Vector s = dot.at({t[0], t[1]});
        s.add_scaled(dot.at({t[1], t[0]}), f.e(t[0], t[1]));
        return dot(s, f.ax(t[2]));
    });
    auto bracket = scan("leibniz.bracket", dims, options, [&](Span t) {
        const std::size_t x = t[0];
        const std::size_t y = t[1];
        const std::size_t z = t[2];
        Vector d = comm(dot.at({x, y}), f.ax(z));
        d.add_scaled(comm(f.ax(y), dot.at({x, z})), f.e(x, y));
        d -= dot(f.ax(x), comm.at({y, z}));
        return d;
    });
    return CheckReport::composite("leibniz-consequences", {std::move(ia), std::move(bracket)});
}

CheckReport check_eps_commutative(const MultilinearMap& mu, const Bicharacter& eps, const GradedSpace& space,
                                  const CheckOptions& options)
{
    const EpsTable e(eps, space);
    return scan("commutative", cube(space.dim(), 2), options, [&](Span t) {
        if (t[0] > t[1]) {
            return Vector();
        }
        return mu.at(t) - mu.at({t[1], t[0]}).scaled(e(t[0], t[1]));
    });
}

CheckReport check_nhlp(const NHLPBundle& b, const CheckOptions& options)
{
    auto leib = check_color_leibniz(b.space, b.eps, b.bracket, b.alpha, options);
    leib.identity = "nhlp.leibniz";
    auto assoc = check_hom_associativity(b.mu, b.alpha, b.space, options);
    assoc.identity = "nhlp.hom-associativity";
    const Frame f(b.space, b.eps, b.alpha);
    const auto& mu = b.mu;
    const auto& br = b.bracket;
    auto comp = scan("nhlp.compatibility", cube(b.space.dim(), 3), options, [&](Span t) {
        const std::size_t x = t[0];
        const std::size_t y = t[1];
        const std::size_t z = t[2];
        Vector d = br(f.ax(x), mu.at({y, z}));
        d -= mu(br.at({x, y}), f.ax(z));
        d.add_scaled(mu(f.ax(y), br.at({x, z})), -f.e(x, y));
        return d;
    });
    const bool commutative = check_eps_commutative(b.mu, b.eps, b.space, options).passed();
    auto r = CheckReport::composite("nhlp", {std::move(leib), std::move(assoc), std::move(comp)});
    r.flags["commutative"] = commutative;
    return r;
}

CheckReport check_dialgebra(const DialgebraBundle& b, const CheckOptions& options)
{
    if (!b.space.group().is_trivial()) {
        throw InputError("dialgebra check needs a trivially graded space");
    }
    const auto& D = b.dashv;
    const auto& V = b.vdash;
    const auto& a = b.alpha;
    const auto dims = cube(b.space.dim(), 3);
    std::vector<CheckReport> parts;
    parts.push_back(scan("dialgebra.axiom1", dims, options, [&](Span t) {
        return D(V.at({t[0], t[1]}), a.column(t[2])) - V(a.column(t[0]), D.at({t[1], t[2]}));
    }));
    parts.push_back(scan("dialgebra.axiom2", dims, options, [&](Span t) {
        return D(a.column(t[0]), D.at({t[1], t[2]})) - D(D.at({t[0], t[1]}), a.column(t[2]));
    }));
    parts.push_back(scan("dialgebra.axiom3", dims, options, [&](Span t) {
        return D(D.at({t[0], t[1]}), a.column(t[2])) - D(a.column(t[0]), V.at({t[1], t[2]}));
    }));
    parts.push_back(scan("dialgebra.axiom4", dims, options, [&](Span t) {
        return V(D.at({t[0], t[1]}), a.column(t[2])) - V(a.column(t[0]), V.at({t[1], t[2]}));
    }));
    parts.push_back(scan("dialgebra.axiom5", dims, options, [&](Span t) {
        return V(a.column(t[0]), V.at({t[1], t[2]})) - V(V.at({t[0], t[1]}), a.column(t[2]));
    }));
    return CheckReport::composite("dialgebra", std::move(parts));
}

CheckReport check_module(const ModuleBundle& b, const CheckOptions& options)
{
    auto leib = check_color_leibniz(b.algebra, options);
    if (!leib.passed()) {
        return gate("module", "the algebra fails color-leibniz", std::move(leib));
    }
    const GradedSpace& L = b.algebra.space;
    const GradedSpace& M = b.module_space;
    const std::size_t n = L.dim();
    const std::size_t m = M.dim();
    std::vector<GroupElement> degrees;
    for (const auto& e : L.basis()) {
        degrees.push_back(e.degree);
    }
    for (const auto& e : M.basis()) {
        degrees.push_back(e.degree);
    }
    // Module index k sits at n + k in the combined table.
    const EpsTable e(b.algebra.eps, degrees);
    const auto& br = b.algebra.bracket;
    const auto& aL = b.algebra.alpha;
    const auto& aM = b.alphaM;
    const auto& left = b.left;
    const auto& right = b.right;

    std::vector<CheckReport> parts;
    parts.push_back(scan("module.alpha-left", {n, m}, options, [&](Span t) {
        return aM(left.at(t)) - left(aL.column(t[0]), aM.column(t[1]));
    }));
    parts.push_back(scan("module.alpha-right", {m, n}, options, [&](Span t) {
        return aM(right.at(t)) - right(aM.column(t[0]), aL.column(t[1]));
    }));
    parts.push_back(scan("module.lm11", {n, n, m}, options, [&](Span t) {
        const std::size_t x = t[0];
        const std::size_t y = t[1];
        const std::size_t k = t[2];
        Vector d = left(br.at({x, y}), aM.column(k));
        d -= left(aL.column(x), left.at({y, k}));
        d.add_scaled(left(aL.column(y), left.at({x, k})), e(x, y));
        return d;
    }));
    parts.push_back(scan("module.lm22", {m, n, n}, options, [&](Span t) {
        const std::size_t k = t[0];
        const std::size_t x = t[1];
        const std::size_t y = t[2];
        Vector d = right(aM.column(k), br.at({x, y}));
        d -= right(left.at({x, k}), aL.column(y));
        d.add_scaled(left(aL.column(x), right.at({k, y})), -e(x, n + k));
        return d;
    }));
    parts.push_back(scan("module.lm33", {n, m, n}, options, [&](Span t) {
        const std::size_t x = t[0];
        const std::size_t k = t[1];
        const std::size_t y = t[2];
        Vector d = left(aL.column(x), right.at({k, y}));
        d -= right(left.at({x, k}), aL.column(y));
        d.add_scaled(right(aM.column(k), br.at({x, y})), -e(n + k, x));
        return d;
    }));
    return CheckReport::composite("module", std::move(parts));
}

} // namespace colorhom

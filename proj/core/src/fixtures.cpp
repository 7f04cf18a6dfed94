#include "colorhom/fixtures.hpp"

#include "colorhom/constructions.hpp"
#include "colorhom/error.hpp"

namespace colorhom {

namespace {

const CyclotomicField& Q()
{
    return CyclotomicField::rationals();
}

Scalar q(long long v)
{
    return Scalar(Q(), v);
}

GradedSpace named_space(std::vector<std::string> names)
{
    std::vector<BasisElement> basis;
    for (auto& n : names) {
        basis.push_back({std::move(n), GroupElement{}});
    }
    return GradedSpace(Q(), GradingGroup::trivial(), std::move(basis));
}

LeibnizBundle l2_broken()
{
    LeibnizBundle b = fix_l2();
    b.bracket.add({1, 1}, 1, q(1));
    return b;
}

AkivisBundle akivis_a()
{
    GradedSpace s = named_space({"e1", "e2"});
    MultilinearMap br = MultilinearMap::internal(Q(), 2, 2);
    br.add({0, 1}, 1, q(1));
    br.add({1, 0}, 1, q(-1));
    return {s, Bicharacter::trivial(Q()), br, MultilinearMap::internal(Q(), 3, 2), EvenMap::identity(Q(), 2)};
}

ModuleBundle module_m()
{
    LeibnizBundle alg = fix_l2();
    return {alg, alg.space, alg.bracket, alg.bracket, EvenMap::identity(Q(), 2)};
}

BundleDocument doc(StructureBundle b, std::string description)
{
    BundleDocument d{std::move(b), {}, std::move(description), std::nullopt};
    return d;
}

} // namespace

LeibnizBundle fix_l2()
{
    GradedSpace s = named_space({"e1", "e2"});
    MultilinearMap br = MultilinearMap::internal(Q(), 2, 2);
    br.add({1, 1}, 0, q(1));
    return {s, Bicharacter::trivial(Q()), br, EvenMap::identity(Q(), 2)};
}

NonAssocBundle fix_na2()
{
    GradedSpace s = named_space({"e1", "e2"});
    MultilinearMap mu = MultilinearMap::internal(Q(), 2, 2);
    mu.add({0, 1}, 0, q(1));
    mu.add({1, 0}, 1, q(1));
    return {s, Bicharacter::trivial(Q()), mu, EvenMap::identity(Q(), 2)};
}

DialgebraBundle fix_d1()
{
    GradedSpace s = named_space({"e1"});
    MultilinearMap mu = MultilinearMap::internal(Q(), 2, 1);
    mu.add({0, 0}, 0, q(1));
    return {s, mu, mu, EvenMap::identity(Q(), 1)};
}

LeibnizBundle fix_s1()
{
    const GradingGroup z2 = GradingGroup::cyclic(2);
    GradedSpace s(Q(), z2, {{"f", z2.element({0})}, {"e", z2.element({1})}});
    MultilinearMap br = MultilinearMap::internal(Q(), 2, 2);
    br.add({1, 1}, 0, q(1));
    return {s, Bicharacter::super_sign(Q()), br, EvenMap::identity(Q(), 2)};
}

NHLPBundle grassmann_poisson(const CyclotomicField& field, const Scalar& c11, const Scalar& c12, const Scalar& c22)
{
    const GradingGroup z2 = GradingGroup::cyclic(2);
    GradedSpace s(field, z2,
                  {{"1", z2.element({0})}, {"t1", z2.element({1})}, {"t2", z2.element({1})}, {"t1t2", z2.element({0})}});
    const Scalar one(field, 1);
    MultilinearMap mu = MultilinearMap::internal(field, 2, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        mu.add({0, i}, i, one);
        if (i != 0) {
            mu.add({i, 0}, i, one);
        }
    }
    mu.add({1, 2}, 3, one);
    mu.add({2, 1}, 3, -one);

    const Scalar c[2][2] = {{c11, c12}, {c12, c22}};
    MultilinearMap br = MultilinearMap::internal(field, 2, 4);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            br.add({1 + i, 1 + j}, 0, c[i][j]);
        }
        // {t_i, t1 t2} = c_i1 t2 - c_i2 t1, and the even element anticommutes back.
        br.add({1 + i, 3}, 2, c[i][0]);
        br.add({1 + i, 3}, 1, -c[i][1]);
        br.add({3, 1 + i}, 2, -c[i][0]);
        br.add({3, 1 + i}, 1, c[i][1]);
    }
    return {s, Bicharacter::super_sign(field), mu, br, EvenMap::identity(field, 4)};
}

const std::vector<FixtureInfo>& fixture_list()
{
    static const std::vector<FixtureInfo> list{
        {"leibniz-L2", "2-dim Leibniz algebra [e2, e2] = e1"},
        {"leibniz-L2-broken", "leibniz-L2 with [e2, e2] = e1 + e2; fails color-leibniz at (1, 1, 1) only"},
        {"nonassoc-NA2", "2-dim algebra mu(e1, e2) = e1, mu(e2, e1) = e2"},
        {"dialg-D1", "1-dim dialgebra with both products e1 e1 = e1"},
        {"super-S1", "Z_2 super Leibniz algebra [e, e] = f with e odd"},
        {"akivis-A", "Lie algebra [e1, e2] = e2 as an Akivis algebra, with beta = diag(1, 2)"},
        {"trivext-L2", "trivial extension of leibniz-L2 with beta = diag(4, 2) + id"},
        {"module-M", "leibniz-L2 as a module over itself"},
        {"nhlp-super", "Grassmann algebra on two odd generators with {t1, t2} = 1, with beta = diag(1, 2, 1/2, 1)"},
    };
    return list;
}

BundleDocument fixture(std::string_view name)
{
    if (name == "leibniz-L2") {
        return doc(fix_l2(), "Leibniz algebra with [e2, e2] = e1 and alpha = id.");
    }
    if (name == "leibniz-L2-broken") {
        return doc(l2_broken(), "leibniz-L2 with [e2, e2] = e1 + e2. color-leibniz fails only at (e2, e2, e2) "
                                "with defect -e1 - e2.");
    }
    if (name == "nonassoc-NA2") {
        return doc(fix_na2(), "mu(e1, e2) = e1, mu(e2, e1) = e2, alpha = id.");
    }
    if (name == "dialg-D1") {
        return doc(fix_d1(), "One-dimensional dialgebra, both products e1 e1 = e1.");
    }
    if (name == "super-S1") {
        return doc(fix_s1(), "Super sign on Z_2; e odd, f even, [e, e] = f.");
    }
    if (name == "akivis-A") {
        BundleDocument d = doc(akivis_a(), "Lie bracket [e1, e2] = e2 with zero ternary; beta is an endomorphism.");
        d.extra_maps.emplace("beta", EvenMap::diagonal(Q(), {q(1), q(2)}));
        return d;
    }
    if (name == "trivext-L2") {
        auto ext = trivial_extension(fix_l2());
        BundleDocument d = doc(std::move(ext.bundle), "A + K for A = leibniz-L2 with (x + a)(y + b) = (bx + ay) + ab.");
        d.extra_maps.emplace("beta", EvenMap::diagonal(Q(), {q(4), q(2), q(1)}));
        return d;
    }
    if (name == "module-M") {
        return doc(module_m(), "Regular module: left(x, m) = [x, m], right(m, x) = [m, x], alphaM = id.");
    }
    if (name == "nhlp-super") {
        BundleDocument d = doc(grassmann_poisson(Q(), q(0), q(1), q(0)),
                               "Grassmann algebra on odd t1, t2 with the super Poisson bracket {t1, t2} = 1.");
        d.extra_maps.emplace("beta", EvenMap::diagonal(Q(), {q(1), q(2), Scalar(Q(), Rational(1, 2)), q(1)}));
        return d;
    }
    throw InputError("unknown example \"" + std::string(name) + "\"");
}

} // namespace colorhom

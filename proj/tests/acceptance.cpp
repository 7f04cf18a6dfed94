// Acceptance suites: one PASS/FAIL line per criterion. Every check is exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "colorhom/bicharacter.hpp"
#include "colorhom/checkers.hpp"
#include "colorhom/constructions.hpp"
#include "colorhom/document.hpp"
#include "colorhom/fixtures.hpp"
#include "colorhom/graded_linalg.hpp"
#include "colorhom/suite.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace colorhom;
using gen::Grading;
using gen::Rng;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> problems;
    std::string summary;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            if (problems.size() < 5) {
                problems.push_back(what);
            }
        }
    }
    void agree(const CheckReport& r, const oracle::Verdicts& v, const std::string& where)
    {
        const std::string d = oracle::disagreement(r, v);
        require(d.empty(), where + ": oracle disagrees: " + d);
    }
};

const Grading kGradings[] = {Grading::Trivial, Grading::Z2, Grading::Z2xZ2, Grading::Z4xZ4};

bool has_complex_value(const Bicharacter& eps)
{
    for (const auto& row : eps.generator_matrix()) {
        for (const auto& v : row) {
            if (!v.is_rational()) {
                return true;
            }
        }
    }
    return false;
}

bool dense_equal(const MultilinearMap& m, const oracle::Op& op)
{
    const oracle::Op d = oracle::dense(m);
    return d.dims == op.dims && d.out == op.out && d.c == op.c;
}

// Passing bundles kept for the negative controls.
struct Corpus {
    std::vector<AkivisBundle> akivis_outputs;
    std::vector<AkivisBundle> twisted_akivis;
    std::vector<AkivisBundle> flexible_akivis;
    std::vector<LeibnizBundle> leibniz;
    std::vector<AkivisBundle> relation_akivis;
    std::vector<NHLPBundle> nhlp;
    std::vector<NHLPBundle> trivext;
    std::vector<DialgebraBundle> dialgebras;
    std::vector<NHLPBundle> dialgebra_nhlp;
    std::vector<ModuleBundle> modules;
};

template <class T>
void keep(std::vector<T>& v, const T& x, std::size_t cap = 6)
{
    if (v.size() < cap) {
        v.push_back(x);
    }
}

// 1. Akivis bundle of a Hom-algebra satisfies the Akivis identity.
Outcome criterion1(Corpus& corpus)
{
    Outcome o;
    Rng rng(101);
    std::size_t count = 0;
    std::size_t complex_eps = 0;
    std::size_t per_grading[4] = {};
    for (int round = 0; round < 56; ++round) {
        for (int gi = 0; gi < 4; ++gi) {
            const std::size_t dim = 1 + static_cast<std::size_t>(round % 4);
            const NonAssocBundle b = gen::random_nonassoc(rng, kGradings[gi], dim, 0.35);
            const auto out = akivis_from_algebra(b);
            const AkivisBundle& a = out.bundle;
            const CheckReport r = check_akivis_identity(a);
            ++count;
            ++per_grading[gi];
            complex_eps += has_complex_value(b.eps) ? 1 : 0;
            o.require(r.passed() && r.violation_count() == 0, "bundle " + std::to_string(count) + " fails akivis");
            o.require(out.report.passed(), "certification report fails");
            o.agree(r, oracle::akivis(a), "bundle " + std::to_string(count));
            const auto e = oracle::eps_table(b.eps, [&] {
                std::vector<GroupElement> d;
                for (const auto& x : b.space.basis()) {
                    d.push_back(x.degree);
                }
                return d;
            }());
            const oracle::Op mu = oracle::dense(b.mu);
            o.require(dense_equal(a.bracket, oracle::commutator(mu, e)), "bracket is not the eps-commutator");
            o.require(dense_equal(a.ternary, oracle::associator(mu, oracle::dense(b.alpha))),
                      "ternary is not the Hom-associator");
            if (round % 7 == 0) {
                keep(corpus.akivis_outputs, a);
            }
        }
    }
    o.require(count >= 200, "fewer than 200 bundles");
    o.require(complex_eps > 0, "no bicharacter with zeta_4 values was exercised");
    std::ostringstream s;
    s << count << " bundles (trivial " << per_grading[0] << ", Z2 " << per_grading[1] << ", Z2xZ2 " << per_grading[2]
      << ", Z4xZ4 " << per_grading[3] << "), " << complex_eps << " with zeta_4 values, 0 violations";
    o.summary = s.str();
    return o;
}

// 2. Twists of Akivis bundles by endomorphisms; iterated equals n-fold.
Outcome criterion2(Corpus& corpus)
{
    Outcome o;
    Rng rng(202);
    std::size_t cases = 0;
    std::size_t iter = 0;
    for (int round = 0; round < 60; ++round) {
        const Grading g = kGradings[round % 4];
        const auto w = gen::random_weighted(rng, g, 2 + static_cast<std::size_t>(round % 3));
        const AkivisBundle a = akivis_from_algebra(w.algebra).bundle;
        const CheckReport endo = is_endomorphism(w.beta, {{"bracket", &a.bracket}, {"ternary", &a.ternary}});
        o.require(endo.passed(), "beta is not an endomorphism");
        const unsigned n = 1 + static_cast<unsigned>(round % 3);
        const auto t = twist_akivis(a, w.beta, n);
        const CheckReport r = check_akivis_identity(t.bundle);
        ++cases;
        o.require(r.passed(), "twist " + std::to_string(cases) + " fails akivis");
        o.agree(r, oracle::akivis(t.bundle), "twist " + std::to_string(cases));
        if (w.beta.compose(a.alpha) == a.alpha.compose(w.beta)) {
            const auto it = twist_akivis_iterated(a, w.beta, n);
            o.require(it.bundle == t.bundle, "iterated twist differs from the n-fold twist");
            ++iter;
        }
        if (round % 5 == 0) {
            keep(corpus.twisted_akivis, t.bundle);
        }
    }
    o.require(cases >= 50, "fewer than 50 cases");
    o.require(iter >= 50, "fewer than 50 iterated comparisons");
    o.summary = std::to_string(cases) + " twists with n in {1,2,3} certified, " + std::to_string(iter) +
                " iterated twists equal to the n-fold twist";
    return o;
}

// 3. Flexible (alternative) Hom-algebras give flexible (alternative) Akivis bundles.
Outcome criterion3(Corpus& corpus)
{
    Outcome o;
    std::vector<NonAssocBundle> candidates;
    const NonAssocBundle O = gen::octonions();
    const auto autos = gen::octonion_automorphisms();
    candidates.push_back(O);
    for (std::size_t i = 0; i < autos.size(); ++i) {
        candidates.push_back(gen::yau_twist(O, autos[i]));
        candidates.push_back(gen::yau_twist(O, autos[i].compose(autos[(i + 1) % autos.size()])));
    }
    const NonAssocBundle SO = gen::super_octonions();
    candidates.push_back(SO);
    for (const auto& a : autos) {
        candidates.push_back(gen::yau_twist(SO, gen::doubled(a)));
    }
    Rng rng(303);
    for (int k = 0; k < 1500; ++k) {
        candidates.push_back(gen::random_nonassoc(rng, kGradings[k % 4], 2 + static_cast<std::size_t>(k % 2), 0.3));
    }

    std::size_t flexible[2] = {};
    std::size_t alternative = 0;
    std::size_t graded_flexible[2] = {};
    std::size_t graded_alternative = 0;
    for (const auto& b : candidates) {
        if (check_hom_associativity(b.mu, b.alpha, b.space).passed()) {
            continue;
        }
        const MultilinearMap as = associator_map(b.mu, b.alpha);
        std::optional<AkivisBundle> a;
        const auto akivis = [&]() -> const AkivisBundle& {
            if (!a) {
                a = akivis_from_algebra(b).bundle;
            }
            return *a;
        };
        const bool graded = !b.space.group().is_trivial();
        for (int m = 0; m < 2; ++m) {
            const CheckOptions opt{1, m == 0 ? FlexibilityMode::EpsPolarized : FlexibilityMode::Literal};
            if (!check_flexible(as, b.eps, b.space, opt).passed()) {
                continue;
            }
            const auto& A = akivis();
            const CheckReport r = check_flexible(A.ternary, A.eps, A.space, opt);
            o.require(r.passed(), "Akivis bundle of a flexible algebra is not flexible");
            o.agree(r, oracle::flexible(A.space, A.eps, A.ternary, opt.flexibility), "flexible");
            ++flexible[m];
            graded_flexible[m] += graded ? 1 : 0;
            if (m == 0) {
                keep(corpus.flexible_akivis, A);
            }
        }
        if (check_alternative(as, b.eps, b.space).passed()) {
            const auto& A = akivis();
            const CheckReport r = check_alternative(A.ternary, A.eps, A.space);
            o.require(r.passed(), "Akivis bundle of an alternative algebra is not alternative");
            o.agree(r, oracle::alternative(A.space, A.eps, A.ternary), "alternative");
            ++alternative;
            graded_alternative += graded ? 1 : 0;
        }
    }
    o.require(flexible[0] >= 10 && flexible[1] >= 10, "too few flexible non-Hom-associative algebras");
    o.require(alternative >= 10, "too few alternative non-Hom-associative algebras");
    o.require(graded_flexible[0] > 0 && graded_flexible[1] > 0, "no graded flexible algebra was found");
    o.require(graded_alternative > 0, "no graded alternative algebra was found");
    std::ostringstream s;
    s << "non-Hom-associative inputs: flexible eps-polarized " << flexible[0] << " (graded " << graded_flexible[0]
      << "), literal " << flexible[1] << " (graded " << graded_flexible[1] << "), alternative " << alternative
      << " (graded " << graded_alternative << "); all outputs inherit the property";
    o.summary = s.str();
    return o;
}

// 4. Color Hom-Leibniz bundles satisfy the derived identities.
Outcome criterion4(Corpus& corpus)
{
    Outcome o;
    std::vector<LeibnizBundle> inputs{fix_l2(), fix_s1()};
    Rng rng(404);
    for (int k = 0; k < 60; ++k) {
        const auto alpha = k % 3 == 0 ? gen::Alpha::Identity : gen::Alpha::Random;
        inputs.push_back(gen::random_central_leibniz(rng, kGradings[k % 4], 3 + static_cast<std::size_t>(k % 2),
                                                     1 + static_cast<std::size_t>(k % 2), alpha));
    }
    for (int k = 0; k < 48; ++k) {
        const NHLPBundle m = gen::random_matrix_poisson(rng, kGradings[k % 4], 2);
        std::vector<Scalar> d{gen::small(gen::Qi(), rng, true), gen::small(gen::Qi(), rng, true)};
        const EvenMap beta = gen::diagonal_conjugation(gen::Qi(), d);
        const auto t = twist_nhlp(m, beta, 1 + static_cast<unsigned>(k % 3));
        inputs.push_back(gen::leibniz_part(t.bundle));
    }
    std::size_t nonskew = 0;
    for (const auto& b : inputs) {
        const CheckReport leib = check_color_leibniz(b);
        o.require(leib.passed(), "generator produced a non-Leibniz bundle");
        o.agree(leib, oracle::color_leibniz(b), "color-leibniz");
        const CheckReport r = check_leibniz_consequences(b);
        o.require(r.passed(), "consequences fail on a Leibniz bundle");
        o.agree(r, oracle::leibniz_consequences(b), "consequences");
        nonskew += check_skew_symmetry(b.bracket, b.eps, b.space).passed() ? 0 : 1;
        keep(corpus.leibniz, b, 8);
    }
    o.require(inputs.size() >= 102, "fewer than 100 random bundles");
    o.summary = std::to_string(inputs.size()) + " Leibniz bundles (FIX-L2, super fixture, " +
                std::to_string(inputs.size() - 2) + " random; " + std::to_string(nonskew) +
                " not skew) pass leibniz.ia and leibniz.bracket";
    return o;
}

// 5. Flexible relation on trivially graded flexible Akivis bundles.
Outcome criterion5(Corpus& corpus)
{
    Outcome o;
    std::vector<AkivisBundle> inputs;
    const NonAssocBundle O = gen::octonions();
    inputs.push_back(akivis_from_algebra(O).bundle);
    for (const auto& a : gen::octonion_automorphisms()) {
        inputs.push_back(akivis_from_algebra(gen::yau_twist(O, a)).bundle);
    }
    Rng rng(505);
    // Commutative products are flexible for every alpha.
    for (int k = 0; k < 20; ++k) {
        NonAssocBundle b = gen::random_nonassoc(rng, Grading::Trivial, 2 + static_cast<std::size_t>(k % 3), 0.4);
        MultilinearMap sym = MultilinearMap::internal(b.mu.field(), 2, b.space.dim());
        b.mu.for_each([&](const MultilinearMap::Tuple& t, const Vector& v) {
            for (const auto& [i, c] : v) {
                sym.add(t, i, c);
                sym.add({t[1], t[0]}, i, c);
            }
        });
        b.mu = sym;
        inputs.push_back(akivis_from_algebra(b).bundle);
    }
    // Yau twists of matrix algebras are Hom-associative.
    for (int k = 0; k < 10; ++k) {
        const NHLPBundle m = gen::matrix_poisson(Bicharacter::trivial(gen::Qi()), {GroupElement{}, GroupElement{}});
        std::vector<Scalar> d{gen::small(gen::Qi(), rng, true), gen::small(gen::Qi(), rng, true)};
        NonAssocBundle b{m.space, m.eps, m.mu, m.alpha};
        inputs.push_back(akivis_from_algebra(gen::yau_twist(b, gen::diagonal_conjugation(gen::Qi(), d))).bundle);
    }
    std::size_t lie = 0;
    std::size_t not_lie = 0;
    for (const auto& a : inputs) {
        for (const auto mode : {FlexibilityMode::EpsPolarized, FlexibilityMode::Literal}) {
            const CheckOptions opt{1, mode};
            o.require(check_flexible(a.ternary, a.eps, a.space, opt).passed(), "input is not flexible");
            const CheckReport r = check_flexible_akivis_relation(a, opt);
            o.require(r.passed(), "flexible relation fails");
            o.agree(r, oracle::flexible_relation(a, mode), "flexible relation");
        }
        const bool hl = check_hom_lie(a).passed();
        const bool cyc = oracle::cyclic_ternary_vanishes(a.ternary);
        o.require(hl == cyc, "hom-lie verdict does not match the vanishing of cyc 2[x,y,z]");
        o.agree(check_hom_lie(a), oracle::hom_lie(a.space, a.eps, a.bracket, a.alpha), "hom-lie");
        (hl ? lie : not_lie)++;
        keep(corpus.relation_akivis, a);
    }
    o.require(lie > 0 && not_lie > 0, "both sides of the equivalence must occur");
    o.summary = std::to_string(inputs.size()) + " flexible bundles pass with coefficient 2; hom-lie holds for " +
                std::to_string(lie) + " exactly where cyc 2[x,y,z] = 0, fails for " + std::to_string(not_lie);
    return o;
}

// NHLP bundles: matrix algebras, Grassmann super Poisson, trivial extensions.
std::vector<std::pair<NHLPBundle, EvenMap>> nhlp_inputs(Rng& rng)
{
    std::vector<std::pair<NHLPBundle, EvenMap>> v;
    for (int k = 0; k < 40; ++k) {
        const std::size_t n = 1 + static_cast<std::size_t>(k % 4 != 0);
        NHLPBundle m = gen::random_matrix_poisson(rng, kGradings[k % 4], n);
        std::vector<Scalar> d;
        for (std::size_t i = 0; i < n; ++i) {
            d.push_back(gen::small(gen::Qi(), rng, true));
        }
        EvenMap beta = gen::diagonal_conjugation(gen::Qi(), d);
        if (k % 2 == 1) {
            m = twist_nhlp(m, beta, 1).bundle;
        }
        v.emplace_back(std::move(m), std::move(beta));
    }
    for (int k = 0; k < 10; ++k) {
        const Scalar a = gen::small(gen::Qi(), rng, true);
        const Scalar c12 = gen::small(gen::Qi(), rng, true);
        const bool full = k % 2 == 0;
        const Scalar zero(gen::Qi(), 0);
        NHLPBundle g = grassmann_poisson(gen::Qi(), full ? gen::small(gen::Qi(), rng) : zero, c12,
                                         full ? gen::small(gen::Qi(), rng) : zero);
        const Scalar one(gen::Qi(), 1);
        EvenMap beta = full ? EvenMap::diagonal(gen::Qi(), {one, -one, -one, one})
                            : EvenMap::diagonal(gen::Qi(), {one, a, one / a, one});
        v.emplace_back(std::move(g), std::move(beta));
    }
    for (int k = 0; k < 6; ++k) {
        const LeibnizBundle l = gen::random_central_leibniz(rng, Grading::Trivial, 3, 1, gen::Alpha::Identity);
        NHLPBundle t = trivial_extension(l).bundle;
        v.emplace_back(std::move(t), EvenMap::identity(gen::Qi(), 4));
    }
    return v;
}

// 6. Twisted, opposite and scaled NHLP bundles re-certify.
Outcome criterion6(Corpus& corpus)
{
    Outcome o;
    Rng rng(606);
    const auto inputs = nhlp_inputs(rng);
    std::size_t twisted = 0;
    std::size_t opposite = 0;
    std::size_t scaled = 0;
    std::size_t noncomm = 0;
    for (std::size_t k = 0; k < inputs.size(); ++k) {
        const auto& [b, beta] = inputs[k];
        const CheckReport base = check_nhlp(b);
        o.require(base.passed(), "generator produced a failing NHLP bundle");
        o.agree(base, oracle::nhlp(b), "input");
        noncomm += base.flags.at("commutative") ? 0 : 1;

        const auto t = twist_nhlp(b, beta, 1 + static_cast<unsigned>(k % 3));
        const CheckReport rt = check_nhlp(t.bundle);
        o.require(rt.passed(), "twisted bundle fails");
        o.agree(rt, oracle::nhlp(t.bundle), "twist");
        ++twisted;

        const Scalar factor = gen::small(gen::Qi(), rng, true) + Scalar(gen::Qi(), k % 2 == 0 ? 0 : 3);
        const auto [op, sc] = nhlp_opposite_and_scale(b, factor);
        const CheckReport ro = check_nhlp(op.bundle);
        const CheckReport rs = check_nhlp(sc.bundle);
        o.require(ro.passed(), "opposite bundle fails");
        o.require(rs.passed(), "scaled bundle fails");
        o.agree(ro, oracle::nhlp(op.bundle), "opposite");
        o.agree(rs, oracle::nhlp(sc.bundle), "scaled");
        const auto e = oracle::eps_table(b.eps, [&] {
            std::vector<GroupElement> d;
            for (const auto& x : b.space.basis()) {
                d.push_back(x.degree);
            }
            return d;
        }());
        const oracle::Op mu = oracle::dense(b.mu);
        oracle::Op want = mu;
        for (std::size_t i = 0; i < b.space.dim(); ++i) {
            for (std::size_t j = 0; j < b.space.dim(); ++j) {
                const auto v = mu.at({j, i});
                for (std::size_t c = 0; c < mu.out; ++c) {
                    want.c[want.flat({i, j}) * mu.out + c] = e[i][j] * v[c];
                }
            }
        }
        o.require(dense_equal(op.bundle.mu, want), "opposite product is not eps(x, y) mu(y, x)");
        ++opposite;
        ++scaled;
        if (k % 8 == 0) {
            keep(corpus.nhlp, t.bundle);
            keep(corpus.nhlp, op.bundle);
        }
    }
    o.require(twisted >= 50 && opposite >= 50 && scaled >= 50, "fewer than 50 cases each");
    o.require(noncomm > 0, "no non-commutative input");
    std::ostringstream s;
    s << twisted << " twisted, " << opposite << " opposite, " << scaled << " scaled bundles re-certify ("
      << noncomm << " non-commutative inputs)";
    o.summary = s.str();
    return o;
}

// 7. Trivial extension of FIX-L2.
Outcome criterion7(Corpus& corpus)
{
    Outcome o;
    const auto ext = trivial_extension(fix_l2());
    const NHLPBundle& p = ext.bundle;
    const CheckReport r = check_nhlp(p);
    o.require(r.passed(), "trivial extension fails check_nhlp");
    o.agree(r, oracle::nhlp(p), "trivext");
    o.require(r.flags.count("commutative") && r.flags.at("commutative"), "not flagged commutative");
    o.require(ext.report.flags.count("commutative") && ext.report.flags.at("commutative"),
              "certification report not flagged commutative");
    const CyclotomicField& Q = CyclotomicField::rationals();
    Vector x = Vector::basis(0, Q);
    x.add(2, Scalar(Q, 2));
    Vector y = Vector::basis(0, Q);
    y.add(2, Scalar(Q, 3));
    Vector want = Vector::basis(0, Q).scaled(Scalar(Q, 5));
    want.add(2, Scalar(Q, 6));
    const Vector got = p.mu(x, y);
    o.require(got == want, "mu(e1 + 2u, e1 + 3u) = " + got.to_string() + ", expected 5e1 + 6u");
    corpus.trivext.push_back(p);
    o.summary = "passes check_nhlp, flagged commutative, mu(e1 + 2u, e1 + 3u) = " + got.to_string("e") +
                " (e0 = e1, e2 = u)";
    return o;
}

// 8. Dialgebras give NHLP bundles.
Outcome criterion8(Corpus& corpus)
{
    Outcome o;
    std::vector<DialgebraBundle> inputs;
    std::size_t distinct = 0;
    for (auto& d : gen::brute_force_dialgebras_dim2()) {
        if (!(d.dashv == d.vdash)) {
            ++distinct;
        }
        inputs.push_back(std::move(d));
    }
    const CyclotomicField& Q = CyclotomicField::rationals();
    for (long long s : {1, 2, -1, 3, -2}) {
        inputs.push_back(gen::triangular_dialgebra(Scalar(Q, s)));
        ++distinct;
    }
    inputs.push_back(gen::triangular_dialgebra(Scalar(Q, Rational(1, 2))));
    ++distinct;
    for (const auto& d : inputs) {
        const CheckReport rd = check_dialgebra(d);
        o.require(rd.passed(), "input is not a dialgebra");
        o.agree(rd, oracle::dialgebra(d), "dialgebra");
        const auto p = leibniz_from_dialgebra(d);
        const CheckReport r = check_nhlp(p.bundle);
        o.require(r.passed(), "leibniz_from_dialgebra output fails");
        o.require(r.find("nhlp.compatibility") && r.find("nhlp.compatibility")->passed(), "compatibility fails");
        o.agree(r, oracle::nhlp(p.bundle), "nhlp");
        if (!(d.dashv == d.vdash)) {
            keep(corpus.dialgebras, d);
            keep(corpus.dialgebra_nhlp, p.bundle);
        }
    }
    o.require(inputs.size() >= 25, "fewer than 25 dialgebras");
    o.require(distinct > 0, "no dialgebra with distinct products");
    o.summary = std::to_string(inputs.size()) + " dialgebras (" + std::to_string(distinct) +
                " with -| != |-; dim 2 by brute force over {0,1}, dim 3 triangular) give NHLP bundles";
    return o;
}

// 9. Twisted modules.
Outcome criterion9(Corpus& corpus)
{
    Outcome o;
    Rng rng(909);
    std::vector<LeibnizBundle> algebras{fix_l2(), fix_s1()};
    for (int k = 0; k < 12; ++k) {
        algebras.push_back(gen::random_central_leibniz(rng, kGradings[k % 4], 3, 1,
                                                       k % 3 == 0 ? gen::Alpha::Identity : gen::Alpha::Multiplicative));
    }
    for (int k = 0; k < 8; ++k) {
        const NHLPBundle m = gen::random_matrix_poisson(rng, kGradings[k % 4], 2);
        std::vector<Scalar> d{gen::small(gen::Qi(), rng, true), gen::small(gen::Qi(), rng, true)};
        algebras.push_back(
            gen::leibniz_part(twist_nhlp(m, gen::diagonal_conjugation(gen::Qi(), d), 1 + k % 2).bundle));
    }
    std::size_t certified = 0;
    std::size_t fixed = 0;
    std::size_t with_right = 0;
    for (const auto& L : algebras) {
        const CheckReport mult = is_endomorphism(L.alpha, {{"bracket", &L.bracket}});
        o.require(mult.passed(), "algebra is not multiplicative");
        const MultilinearMap zero(L.space.field(), {L.space.dim(), L.space.dim()}, L.space.dim());
        std::vector<ModuleBundle> mods{{L, L.space, L.bracket, zero, L.alpha}, {L, L.space, L.bracket, L.bracket, L.alpha}};
        for (std::size_t k = 0; k < mods.size(); ++k) {
            const auto& M = mods[k];
            const CheckReport base = check_module(M);
            o.agree(base, oracle::module(M), "module");
            if (!base.passed()) {
                continue;
            }
            ++certified;
            with_right += k == 1 ? 1 : 0;
            const auto t = twist_module(M);
            const CheckReport r = check_module(t.bundle);
            o.require(r.passed(), "twisted module fails");
            o.agree(r, oracle::module(t.bundle), "twisted module");
            if (L.alpha.is_identity()) {
                o.require(t.bundle == M, "alpha_L = id twist is not a fixed point");
                ++fixed;
            }
            keep(corpus.modules, t.bundle);
        }
    }
    o.require(certified >= 25, "fewer than 25 certified modules");
    o.require(fixed > 0, "no alpha_L = id case");
    o.summary = std::to_string(certified) + " certified modules (" + std::to_string(with_right) +
                " with the regular right action) twist to modules; " + std::to_string(fixed) +
                " alpha_L = id cases are fixed points";
    return o;
}

// 10. +1 perturbations are caught, and the oracle agrees on every one.
template <class B>
struct Control {
    std::string name;
    std::vector<B>* bundles;
    std::function<std::vector<MultilinearMap*>(B&)> ops;
    std::function<CheckReport(const B&)> check;
    std::function<oracle::Verdicts(const B&)> truth;
};

template <class B>
void run_control(const Control<B>& c, Outcome& o, std::string& line)
{
    std::size_t tried = 0;
    std::size_t failing = 0;
    for (const B& original : *c.bundles) {
        B probe = original;
        const auto ops = c.ops(probe);
        for (std::size_t oi = 0; oi < ops.size(); ++oi) {
            MultilinearMap* op = ops[oi];
            std::vector<const GradedSpace*> slots;
            // Only internal operations are perturbed; module actions use their own spaces.
            const GradedSpace* out = nullptr;
            if constexpr (std::is_same_v<B, ModuleBundle>) {
                slots = {&probe.algebra.space, &probe.module_space};
                out = &probe.module_space;
            } else if constexpr (std::is_same_v<B, DialgebraBundle>) {
                slots = {&probe.space, &probe.space};
                out = &probe.space;
            } else {
                slots.assign(op->arity(), &probe.space);
                out = &probe.space;
            }
            auto positions = gen::even_slots(slots, *out);
            const std::size_t stride = positions.size() > 10 ? positions.size() / 10 : 1;
            for (std::size_t p = 0; p < positions.size(); p += stride) {
                const MultilinearMap saved = *op;
                op->add(positions[p].first, positions[p].second, Scalar(op->field(), 1));
                const CheckReport r = c.check(probe);
                ++tried;
                o.agree(r, c.truth(probe), c.name + " perturbation");
                if (!r.passed()) {
                    ++failing;
                    o.require(r.first_violation() != nullptr, c.name + ": failing report names no tuple");
                }
                *op = saved;
            }
        }
    }
    o.require(failing > 0, c.name + ": no perturbation failed");
    line += c.name + " " + std::to_string(failing) + "/" + std::to_string(tried) + ", ";
}

Outcome criterion10(Corpus& corpus)
{
    Outcome o;
    std::string line;
    const CheckOptions opt{};
    run_control<AkivisBundle>({"akivis", &corpus.akivis_outputs,
                               [](AkivisBundle& b) { return std::vector<MultilinearMap*>{&b.ternary, &b.bracket}; },
                               [](const AkivisBundle& b) { return check_akivis_identity(b); },
                               [](const AkivisBundle& b) { return oracle::akivis(b); }},
                              o, line);
    run_control<AkivisBundle>({"twist", &corpus.twisted_akivis,
                               [](AkivisBundle& b) { return std::vector<MultilinearMap*>{&b.ternary}; },
                               [](const AkivisBundle& b) { return check_akivis_identity(b); },
                               [](const AkivisBundle& b) { return oracle::akivis(b); }},
                              o, line);
    run_control<AkivisBundle>(
        {"flexible", &corpus.flexible_akivis, [](AkivisBundle& b) { return std::vector<MultilinearMap*>{&b.ternary}; },
         [opt](const AkivisBundle& b) { return check_flexible(b.ternary, b.eps, b.space, opt); },
         [opt](const AkivisBundle& b) { return oracle::flexible(b.space, b.eps, b.ternary, opt.flexibility); }},
        o, line);
    run_control<LeibnizBundle>({"leibniz", &corpus.leibniz,
                                [](LeibnizBundle& b) { return std::vector<MultilinearMap*>{&b.bracket}; },
                                [](const LeibnizBundle& b) { return check_leibniz_consequences(b); },
                                [](const LeibnizBundle& b) { return oracle::leibniz_consequences(b); }},
                               o, line);
    run_control<AkivisBundle>(
        {"relation", &corpus.relation_akivis,
         [](AkivisBundle& b) { return std::vector<MultilinearMap*>{&b.bracket, &b.ternary}; },
         [opt](const AkivisBundle& b) { return check_flexible_akivis_relation(b, opt); },
         [opt](const AkivisBundle& b) { return oracle::flexible_relation(b, opt.flexibility); }},
        o, line);
    const auto nhlp_ops = [](NHLPBundle& b) { return std::vector<MultilinearMap*>{&b.mu, &b.bracket}; };
    const auto nhlp_check = [](const NHLPBundle& b) { return check_nhlp(b); };
    const auto nhlp_truth = [](const NHLPBundle& b) { return oracle::nhlp(b); };
    run_control<NHLPBundle>({"nhlp", &corpus.nhlp, nhlp_ops, nhlp_check, nhlp_truth}, o, line);
    run_control<NHLPBundle>({"trivext", &corpus.trivext, nhlp_ops, nhlp_check, nhlp_truth}, o, line);
    run_control<DialgebraBundle>(
        {"dialgebra", &corpus.dialgebras,
         [](DialgebraBundle& b) { return std::vector<MultilinearMap*>{&b.dashv, &b.vdash}; },
         [](const DialgebraBundle& b) { return check_dialgebra(b); },
         [](const DialgebraBundle& b) { return oracle::dialgebra(b); }},
        o, line);
    run_control<NHLPBundle>({"dialg2leibniz", &corpus.dialgebra_nhlp, nhlp_ops, nhlp_check, nhlp_truth}, o, line);
    run_control<ModuleBundle>({"module", &corpus.modules,
                               [](ModuleBundle& b) { return std::vector<MultilinearMap*>{&b.left}; },
                               [](const ModuleBundle& b) { return check_module(b); },
                               [](const ModuleBundle& b) { return oracle::module(b); }},
                              o, line);
    line.resize(line.size() - 2);
    o.summary = "failing/tried per suite: " + line;
    return o;
}

// 11. Bicharacters, document round-trip, report determinism.
Outcome criterion11()
{
    Outcome o;
    std::string line;
    struct Case {
        GradingGroup group;
        unsigned N;
        std::size_t expected_valid;
    };
    const Case cases[] = {{GradingGroup::cyclic(2), 4, 2}, {GradingGroup::cyclic(3), 6, 1},
                          {GradingGroup(0, {2, 2}), 4, 8}};
    for (const auto& c : cases) {
        const CyclotomicField& f = CyclotomicField::get(c.N);
        const std::size_t k = c.group.generator_count();
        std::size_t total = 1;
        for (std::size_t i = 0; i < k * k; ++i) {
            total *= c.N;
        }
        std::size_t valid = 0;
        for (std::size_t code = 0; code < total; ++code) {
            std::vector<std::vector<long long>> ex(k, std::vector<long long>(k));
            ScalarMatrix m(k, std::vector<Scalar>(k));
            std::size_t rest = code;
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t j = 0; j < k; ++j) {
                    ex[i][j] = static_cast<long long>(rest % c.N);
                    rest /= c.N;
                    m[i][j] = Scalar::zeta(f, ex[i][j]);
                }
            }
            const Bicharacter eps(c.group, f, m);
            const bool lib = validate_bicharacter(eps).passed();
            const bool truth = oracle::bicharacter_valid(ex, c.N, c.group.torsion_orders());
            o.require(lib == truth, "bicharacter verdict differs from exhaustive evaluation");
            if (!lib) {
                continue;
            }
            ++valid;
            const auto elems = c.group.elements();
            for (const auto& a : elems) {
                for (const auto& b : elems) {
                    long long e = 0;
                    for (std::size_t i = 0; i < k; ++i) {
                        for (std::size_t j = 0; j < k; ++j) {
                            e += a[i] * b[j] * ex[i][j];
                        }
                    }
                    o.require(eps(a, b) == Scalar::zeta(f, e), "evaluation is not the bicharacter value");
                    o.require((eps(a, b) * eps(b, a)).is_one(), "skew-symmetry fails on group elements");
                    for (const auto& cc : elems) {
                        o.require(eps(c.group.add(a, b), cc) == eps(a, cc) * eps(b, cc), "not biadditive");
                    }
                }
            }
        }
        o.require(valid == c.expected_valid, "unexpected number of valid bicharacters on " + c.group.to_string());
        line += c.group.to_string() + " " + std::to_string(valid) + "/" + std::to_string(total) + ", ";
    }

    std::vector<BundleDocument> docs;
    for (const auto& info : fixture_list()) {
        docs.push_back(fixture(info.name));
    }
    Rng rng(1111);
    for (int k = 0; k < 8; ++k) {
        const NonAssocBundle b = gen::random_nonassoc(rng, kGradings[k % 4], 3, 0.4);
        docs.push_back({b, {}, "random", std::nullopt});
        docs.push_back({akivis_from_algebra(b).bundle, {}, "random akivis", std::nullopt});
        docs.push_back({gen::random_matrix_poisson(rng, kGradings[k % 4], 2), {}, "matrix", std::nullopt});
        docs.push_back({gen::random_central_leibniz(rng, kGradings[k % 4], 3, 1, gen::Alpha::Random), {}, "central",
                        std::nullopt});
    }
    std::size_t round_trips = 0;
    std::size_t reports = 0;
    for (const auto& d : docs) {
        const std::string text = serialize_document(d);
        const BundleDocument back = parse_document(text);
        o.require(back.bundle == d.bundle, "round-trip changes the bundle");
        o.require(back.extra_maps == d.extra_maps, "round-trip changes extra maps");
        o.require(serialize_document(back) == text, "serialize after parse is not idempotent");
        ++round_trips;
        const std::string digest = document_digest(text);
        const std::string r1 = machine_report(run_suite(back, "all", {1, FlexibilityMode::EpsPolarized}), digest);
        const std::string r4 = machine_report(run_suite(back, "all", {4, FlexibilityMode::EpsPolarized}), digest);
        o.require(r1 == r4, "machine report depends on the job count");
        ++reports;
    }
    line += std::to_string(round_trips) + " documents round-trip, " + std::to_string(reports) +
            " machine reports identical for jobs 1 and 4";
    o.summary = "valid bicharacters " + line;
    return o;
}

} // namespace

int main()
{
    Corpus corpus;
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"akivis bundle of a Hom-algebra", [&] { return criterion1(corpus); }},
        {"Akivis twists", [&] { return criterion2(corpus); }},
        {"flexible and alternative inheritance", [&] { return criterion3(corpus); }},
        {"Leibniz consequences", [&] { return criterion4(corpus); }},
        {"flexible Akivis relation", [&] { return criterion5(corpus); }},
        {"NHLP twist, opposite, scale", [&] { return criterion6(corpus); }},
        {"trivial extension", [&] { return criterion7(corpus); }},
        {"dialgebra to NHLP", [&] { return criterion8(corpus); }},
        {"module twists", [&] { return criterion9(corpus); }},
        {"negative controls", [&] { return criterion10(corpus); }},
        {"bicharacters, round-trip, determinism", [] { return criterion11(); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.problems.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] criterion %zu %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.summary.c_str(), secs);
        for (const auto& p : o.problems) {
            std::printf("       %s\n", p.c_str());
        }
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}

#include <benchmark/benchmark.h>

#include <random>

#include "colorhom/checkers.hpp"
#include "colorhom/constructions.hpp"
#include "colorhom/fixtures.hpp"

using namespace colorhom;

namespace {

const CyclotomicField& Q = CyclotomicField::rationals();

// A random ungraded algebra of dimension n with small integer constants.
NonAssocBundle random_algebra(std::size_t n, double density, unsigned seed)
{
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution keep(density);
    std::uniform_int_distribution<int> coeff(-2, 2);
    MultilinearMap mu = MultilinearMap::internal(Q, 2, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                const int c = coeff(rng);
                if (c != 0 && keep(rng)) {
                    mu.add({i, j}, k, Scalar(Q, c));
                }
            }
        }
    }
    return {GradedSpace::ungraded(Q, n), Bicharacter::trivial(Q), std::move(mu), EvenMap::identity(Q, n)};
}

void BM_HomAssociativity(benchmark::State& state)
{
    const auto b = random_algebra(static_cast<std::size_t>(state.range(0)), 0.3, 1);
    CheckOptions opts;
    opts.jobs = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_hom_associativity(b.mu, b.alpha, b.space, opts));
    }
}
BENCHMARK(BM_HomAssociativity)->ArgsProduct({{4, 8, 12}, {1, 4}})->Unit(benchmark::kMillisecond);

void BM_AkivisIdentity(benchmark::State& state)
{
    const auto ak = akivis_from_algebra(random_algebra(static_cast<std::size_t>(state.range(0)), 0.3, 2)).bundle;
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_akivis_identity(ak));
    }
}
BENCHMARK(BM_AkivisIdentity)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SuperPoissonNhlp(benchmark::State& state)
{
    const auto& f = CyclotomicField::get(4);
    const NHLPBundle p = grassmann_poisson(f, Scalar(f, 1), Scalar::zeta(f), Scalar(f, 2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_nhlp(p));
    }
}
BENCHMARK(BM_SuperPoissonNhlp);

void BM_ScalarInverse(benchmark::State& state)
{
    const auto& f = CyclotomicField::get(static_cast<unsigned>(state.range(0)));
    const Scalar x = Scalar(f, 3) + Scalar::zeta(f) - Scalar::zeta(f, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(x.inverse());
    }
}
BENCHMARK(BM_ScalarInverse)->Arg(4)->Arg(12)->Arg(60);

} // namespace

BENCHMARK_MAIN();

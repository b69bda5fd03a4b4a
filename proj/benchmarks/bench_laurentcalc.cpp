#include <benchmark/benchmark.h>

#include <laurentcalc/exp_series.hpp>
#include <laurentcalc/laurent.hpp>
#include <laurentcalc/laurent_operator.hpp>
#include <laurentcalc/rootsys.hpp>

using namespace lc;

namespace
{

Polynomial var(std::size_t n, std::size_t i)
{
    return Polynomial::variable(n, i);
}

void BM_WeylEnumerate(benchmark::State &state)
{
    static const char *names[] = {"A2", "B2", "G2", "A3"};
    const char *name = names[state.range(0)];
    for (auto _ : state) {
        benchmark::DoNotOptimize(RootSystem::builtin(name).weyl().size());
    }
    state.SetLabel(name);
}
BENCHMARK(BM_WeylEnumerate)->DenseRange(0, 3);

void BM_JMap(benchmark::State &state)
{
    const InnerProduct ip = InnerProduct::identity(3);
    const std::vector<Vec> roots{{1, 0, 0}, {1, 1, 0}, {0, 1, -1}};
    const unsigned k = static_cast<unsigned>(state.range(0));
    const PoleIndex d{k, k, k}, low{0, 0, 0};
    const DiffOp u((var(3, 0) + var(3, 1) * var(3, 2)).pow(2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(j_map(u, d, low, roots, {1, 0, 2}, ip));
    }
}
BENCHMARK(BM_JMap)->DenseRange(1, 3);

void BM_LaurentOperator(benchmark::State &state)
{
    const InnerProduct ip = InnerProduct::identity(3);
    const Hyperplane h1({0, 0, 1}, 0), h2({1, 0, -1}, 0), h3({0, 1, 1}, 1);
    const Configuration cfg(ip, {h1, h2, h3}, {3, 1, 1});
    const XSubspace lsub = subspace_from(ip, {h1});
    const InnerProduct ip1 = InnerProduct::identity(1);
    const unsigned d = static_cast<unsigned>(state.range(0));
    const LaurentFunctional l(ip1, {LaurentSummand{{0}, RootFrame(ip1, {{1}}), {d}, DiffOp(var(1, 0).pow(d - 1))}});
    const RationalFn f(ip, var(3, 0) * var(3, 1) + var(3, 2), {{h1, d}, {h2, 1}, {h3, 1}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(laurent_operator_apply(l, cfg, f, lsub));
    }
}
BENCHMARK(BM_LaurentOperator)->DenseRange(1, 3);

void BM_SeriesMul(benchmark::State &state)
{
    const std::vector<Vec> delta{{1, 0}, {0, 1}};
    const int trunc = static_cast<int>(state.range(0));
    ExpPolySeries::TermMap terms;
    const Vec lam{Scalar(1, 2), Scalar(1, 3)};
    for (int i = 0; i <= trunc; ++i) {
        for (int j = 0; i + j <= trunc; ++j) {
            terms[lam - Vec{i, j}] = {var(2, 0) + Polynomial::constant(2, i - j)};
        }
    }
    const ExpPolySeries f(2, 0, 1, delta, {SeriesLeader{lam, trunc}}, terms);
    for (auto _ : state) {
        benchmark::DoNotOptimize(series_mul(f, f, scalar_pairing()));
    }
}
BENCHMARK(BM_SeriesMul)->DenseRange(1, 5, 2);

void BM_IsGeneric(benchmark::State &state)
{
    const RootSystem rs = RootSystem::builtin("B2");
    const ParabolicData empty = parabolic(rs, {});
    const std::vector<Vec> s{{0, 0}, {1, 0}, {1, 1}};
    const Vec lambda{Scalar(13, 45), Scalar(11, 45)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_generic(rs, empty, empty, s, lambda).generic);
    }
}
BENCHMARK(BM_IsGeneric);

} // namespace

BENCHMARK_MAIN();

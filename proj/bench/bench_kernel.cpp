// Parallel component-wise elimination against the dense serial reference,
// on tangency systems of the exa0 quadric and of a (2,3) model.

#include <craut/expr.hpp>
#include <craut/grading.hpp>

#include <benchmark/benchmark.h>

using namespace craut;

namespace {

Model make_model(int n, std::vector<Block> blocks, const std::vector<std::string>& ps)
{
    auto vt = std::make_shared<const VarTable>(n, std::move(blocks));
    std::vector<Polynomial> p;
    for (const auto& s : ps) p.push_back(parse_poly(s, {vt, Ring::Real}));
    return Model::create(vt, std::move(p));
}

const Model& exa0()
{
    static const Model m =
        make_model(4, {{2, 3}}, {"z3*conj(z3)", "z4*conj(z4)", "z1*conj(z3)+z3*conj(z1)+z2*conj(z4)+z4*conj(z2)"});
    return m;
}

const Model& cubic()
{
    static const Model m = make_model(2, {{2, 2}, {3, 1}}, {"z1*conj(z1)", "z2*conj(z2)", "z1^2*conj(z2)+z2*conj(z1)^2"});
    return m;
}

linalg::SparseMatrix system(const Model& m, int mu_scaled)
{
    return build_tangency_system(m, enumerate_ansatz_scaled(m, mu_scaled, false)).matrix;
}

void BM_parallel_exa0(benchmark::State& st)
{
    const auto a = system(exa0(), static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(linalg::rref(a));
    st.counters["cols"] = static_cast<double>(a.cols());
}

void BM_reference_exa0(benchmark::State& st)
{
    const auto a = system(exa0(), static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(linalg::rref_reference(a));
    st.counters["cols"] = static_cast<double>(a.cols());
}

void BM_parallel_cubic(benchmark::State& st)
{
    const auto a = system(cubic(), static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(linalg::rref(a));
    st.counters["cols"] = static_cast<double>(a.cols());
}

void BM_reference_cubic(benchmark::State& st)
{
    const auto a = system(cubic(), static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(linalg::rref_reference(a));
    st.counters["cols"] = static_cast<double>(a.cols());
}

void BM_build_system_exa0(benchmark::State& st)
{
    const Ansatz an = enumerate_ansatz_scaled(exa0(), static_cast<int>(st.range(0)), false);
    for (auto _ : st) benchmark::DoNotOptimize(build_tangency_system(exa0(), an));
}

} // namespace

BENCHMARK(BM_parallel_exa0)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_reference_exa0)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel_cubic)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_reference_cubic)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_build_system_exa0)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

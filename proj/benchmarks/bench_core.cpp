#include "g2c/census.hpp"
#include "g2c/chern.hpp"
#include "g2c/cohomology.hpp"
#include "g2c/kform.hpp"
#include "g2c/presentation.hpp"

#include <benchmark/benchmark.h>

using namespace g2c;

namespace {

Rep sample_klein_rep() {
    static const Presentation p = joyce_example3();
    static const TargetGroup& v4 = builtin_target("V4");
    int a = -1, b = -1, c = -1;
    for (int i = 0; i < 4; ++i) {
        if (v4.element_names[i] == "a") a = i;
        if (v4.element_names[i] == "b") b = i;
        if (v4.element_names[i] == "c") c = i;
    }
    Rep r;
    r.group = &v4;
    r.vals.assign(p.generators.size(), v4.identity);
    r.vals[p.generator_index("t1")] = c;
    r.vals[p.generator_index("t2")] = b;
    r.vals[p.generator_index("t4")] = a;
    return r;
}

void BM_WedgeHodgePhi(benchmark::State& state) {
    const KForm phi = standard_phi0();
    const Metric7 g = Metric7::euclidean();
    for (auto _ : state) benchmark::DoNotOptimize(wedge(phi, hodge_star(phi, g)));
}
BENCHMARK(BM_WedgeHodgePhi);

void BM_TypeDecomposition(benchmark::State& state) {
    const KForm phi = standard_phi0();
    const Metric7 g = Metric7::euclidean();
    const KForm w = KForm::basis({1, 2}) + Scalar(3) * KForm::basis({4, 7}) -
                    Scalar(2) * KForm::basis({2, 6});
    for (auto _ : state) {
        benchmark::DoNotOptimize(project_7(w, phi, g));
        benchmark::DoNotOptimize(project_14(w, phi, g));
    }
}
BENCHMARK(BM_TypeDecomposition);

void BM_MetricRecovery(benchmark::State& state) {
    const KForm phi = standard_phi0();
    for (auto _ : state) benchmark::DoNotOptimize(metric_from_3form(phi));
}
BENCHMARK(BM_MetricRecovery);

void BM_EnumerateProjective(benchmark::State& state) {
    const Presentation p = t3_projective();
    const TargetGroup& q8 = builtin_target("Q8");
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_homs(p, q8).size());
}
BENCHMARK(BM_EnumerateProjective);

void BM_CensusProjective(benchmark::State& state) {
    const Presentation p = t3_projective();
    const TargetGroup& q8 = builtin_target("Q8");
    for (auto _ : state) benchmark::DoNotOptimize(census_classes(p, q8, {}, 2).size());
}
BENCHMARK(BM_CensusProjective);

void BM_TraceSignature(benchmark::State& state) {
    const Rep r = sample_klein_rep();
    const auto schedule = trace_schedule(int(r.vals.size()), 3);
    for (auto _ : state) benchmark::DoNotOptimize(trace_signature(r, schedule));
}
BENCHMARK(BM_TraceSignature);

void BM_H1Dimension(benchmark::State& state) {
    const Presentation p = joyce_example3();
    const FoxTable fox = fox_table(p);
    const Rep r = sample_klein_rep();
    for (auto _ : state) benchmark::DoNotOptimize(h1_dimension(p, r, &fox));
}
BENCHMARK(BM_H1Dimension);

void BM_CoupledFixedDim(benchmark::State& state) {
    const Presentation p = joyce_example3();
    const PointGroup pg = point_group(p);
    const Rep r = sample_klein_rep();
    for (auto _ : state) benchmark::DoNotOptimize(walpuski_fixed_dim(p, r, &pg));
}
BENCHMARK(BM_CoupledFixedDim);

void BM_Abelianization(benchmark::State& state) {
    const Presentation p = joyce_example3();
    for (auto _ : state) benchmark::DoNotOptimize(abelianization(p).factors.size());
}
BENCHMARK(BM_Abelianization);

void BM_AdjointCharacter(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(ch_adjoint(RankParam::formal()) ==
                                 ch_adjoint_closed_form(RankParam::formal()));
}
BENCHMARK(BM_AdjointCharacter);

void BM_MatRank(benchmark::State& state) {
    Mat m(30, 30);
    long long v = 1;
    for (std::size_t i = 0; i < 30; ++i)
        for (std::size_t j = 0; j < 30; ++j) {
            v = (v * 37 + 11) % 1000;
            m(i, j) = v - 500;
        }
    for (auto _ : state) benchmark::DoNotOptimize(m.rank());
}
BENCHMARK(BM_MatRank);

}  // namespace

BENCHMARK_MAIN();

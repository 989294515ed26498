#include <benchmark/benchmark.h>

#include "nilflux/paper_suite.hpp"

using namespace nilflux;

static void BM_CurvaturePlusH2h4h5(benchmark::State& state) {
    PresetGeometry g = make_preset("h2h4h5");
    HermitianStructure h = g.hermitian();
    for (auto _ : state) {
        Curvature curv = curvature(torsion_connection(g.eqs, h, +1), g.eqs);
        benchmark::DoNotOptimize(curv);
    }
}
BENCHMARK(BM_CurvaturePlusH2h4h5);

static void BM_PontrjaginChernH19(benchmark::State& state) {
    PresetGeometry g = make_preset("h19minus");
    HermitianStructure h = g.hermitian();
    Curvature curv = curvature(chern(g.eqs, h), g.eqs);
    for (auto _ : state) {
        PontrjaginForm p = pontrjagin_raw(curv, g.eqs);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_PontrjaginChernH19);

static void BM_TheoremIdentities(benchmark::State& state) {
    for (auto _ : state) {
        for (TheoremId id : all_theorems()) {
            VerificationReport r = verify_theorem(id);
            benchmark::DoNotOptimize(r);
        }
    }
}
BENCHMARK(BM_TheoremIdentities);

static void BM_Identity15Instanton(benchmark::State& state) {
    PresetGeometry g = make_preset("h3");
    HermitianStructure h = g.hermitian();
    PresetGeometry gp = make_h3(Scalar::param("tp"));
    HermitianStructure hp = gp.hermitian();
    CurvatureTensor4 r4 = CurvatureTensor4::from(curvature(torsion_connection(gp.eqs, hp, +1), gp.eqs));
    for (auto _ : state) {
        bool ok = identity_15_check(r4, h);
        benchmark::DoNotOptimize(ok);
    }
}
BENCHMARK(BM_Identity15Instanton);

static void BM_FullPaperSuite(benchmark::State& state) {
    for (auto _ : state) {
        auto checks = run_paper_suite();
        benchmark::DoNotOptimize(checks);
    }
}
BENCHMARK(BM_FullPaperSuite);

BENCHMARK_MAIN();

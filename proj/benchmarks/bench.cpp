#include <benchmark/benchmark.h>

#include <random>

#include "repext/io.hpp"
#include "repext/standard_groups.hpp"

using namespace repext;

namespace {

CMat m1(std::complex<double> v) {
    CMat m(1, 1);
    m(0, 0) = v;
    return m;
}

void bm_group_closure(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<int> cycle(n);
    for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    std::vector<int> swap(n);
    for (int i = 0; i < n; ++i) swap[i] = i;
    std::swap(swap[0], swap[1]);
    for (auto _ : state) {
        FiniteGroup G = group_from_generators({cycle, swap}, 50000); // S_n for small n
        benchmark::DoNotOptimize(G.order);
    }
}
BENCHMARK(bm_group_closure)->Arg(4)->Arg(5)->Arg(6);

void bm_joint_commutant(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    std::vector<CMat> mats;
    for (int i = 0; i < 3; ++i) mats.push_back(random_unitary(d, 10 + i));
    for (auto _ : state) {
        auto basis = joint_commutant(mats);
        benchmark::DoNotOptimize(basis.size());
    }
}
BENCHMARK(bm_joint_commutant)->Arg(4)->Arg(8)->Arg(12);

void bm_smith_normal_form(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    IntMat M(n, n);
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> entry(-20, 20);
    for (auto& e : M.data) e = entry(rng);
    for (auto _ : state) {
        SmithResult r = smith_normal_form(M);
        benchmark::DoNotOptimize(r.D.at(n - 1, n - 1));
    }
}
BENCHMARK(bm_smith_normal_form)->Arg(8)->Arg(16)->Arg(32);

void bm_q8_pipeline(benchmark::State& state) {
    FiniteGroup G = quaternion_group();
    for (auto _ : state) {
        ProblemSpec spec;
        spec.group = G;
        spec.subgroup = {0, 1};
        spec.rep_entries = {{1, m1(-1.0)}};
        ExtensionReport rep = run_pipeline(spec);
        benchmark::DoNotOptimize(rep.extend_verdict);
    }
}
BENCHMARK(bm_q8_pipeline);

void bm_heisenberg_stabilize(benchmark::State& state) {
    FiniteGroup G = heisenberg_group_27();
    NormalSubgroup N = normal_subgroup(G, {0, 1, 2});
    QuotientData Qd = quotient_with_transversal(G, N);
    const double kPi = std::acos(-1.0);
    std::vector<CMat> chi;
    for (int k = 0; k < 3; ++k) chi.push_back(m1(std::polar(1.0, 2 * kPi * k / 3)));
    UnitaryRep pi = make_rep(N.group, chi);
    std::vector<CMat> W(Qd.q_group.order, CMat::Identity(1, 1));
    TwistedActionData tad = twisted_action(pi, N, Qd, section_unitaries(pi, N, Qd, W));
    for (auto _ : state) {
        StabilizeResult sr = stabilize(pi, N, Qd, tad);
        benchmark::DoNotOptimize(sr.rep.dim);
    }
}
BENCHMARK(bm_heisenberg_stabilize);

void bm_twisted_regular_decompose(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    FiniteGroup Q = cyclic_group(n);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ang(0.0, 2 * std::acos(-1.0));
    std::vector<std::complex<double>> nu(n);
    nu[0] = 1.0;
    for (int x = 1; x < n; ++x) nu[x] = std::polar(1.0, ang(rng));
    ScalarTwoCocycle sigma = coboundary_of(Q, nu);
    for (auto _ : state) {
        auto blocks = decompose_projective(twisted_regular_rep(sigma), 3);
        benchmark::DoNotOptimize(blocks.size());
    }
}
BENCHMARK(bm_twisted_regular_decompose)->Arg(6)->Arg(10);

} // namespace

BENCHMARK_MAIN();

// Microbenchmarks for the hot paths: probability quads, closed-form payoffs,
// equilibrium certification, and the Bell statistic.
#include <benchmark/benchmark.h>

#include <numbers>

#include "eprgame/eprgame.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

const eprgame::GameMatrix kPd = eprgame::GameMatrix::prisoners_dilemma();

const eprgame::TwoQubitState& maxent() {
    static const eprgame::TwoQubitState state = eprgame::find_state_preset("maxent-i").value();
    return state;
}

void BM_joint_probabilities(benchmark::State& state) {
    const eprgame::Direction a(0.7, 1.3);
    const eprgame::Direction b(2.1, 4.4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eprgame::joint_probabilities(maxent(), a, b));
    }
}
BENCHMARK(BM_joint_probabilities);

void BM_closed_payoff_maxent(benchmark::State& state) {
    const eprgame::StrategyProfile profile{{0.7, 1.3}, {2.1, 4.4}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(eprgame::closed_payoff_maxent(kPd, profile));
    }
}
BENCHMARK(BM_closed_payoff_maxent);

void BM_certify_nash(benchmark::State& state) {
    const int resolution = static_cast<int>(state.range(0));
    const eprgame::StrategyProfile defect{{kPi / 2, kPi}, {kPi / 2, kPi}};
    const auto psi = eprgame::find_state_preset("product-uniform").value();
    for (auto _ : state) {
        benchmark::DoNotOptimize(eprgame::certify_nash(psi, kPd, defect, 1e-6, resolution));
    }
}
BENCHMARK(BM_certify_nash)->Arg(16)->Arg(32)->Arg(64);

void BM_scan_nash(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(eprgame::scan_nash(maxent(), kPd, 8, 1e-6));
    }
}
BENCHMARK(BM_scan_nash);

void BM_chsh_lambda(benchmark::State& state) {
    const eprgame::ChshSetting setting{{kPi / 4, kPi / 4},
                                       {3 * kPi / 4, kPi / 4},
                                       {kPi / 2, kPi / 4},
                                       {kPi / 4, kPi / 4}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(eprgame::chsh_lambda(maxent(), setting));
    }
}
BENCHMARK(BM_chsh_lambda);

void BM_ewl_payoffs(benchmark::State& state) {
    const eprgame::EwlStrategy quantum{0.0, kPi / 2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(eprgame::ewl_payoffs(kPd, quantum, quantum, kPi / 2));
    }
}
BENCHMARK(BM_ewl_payoffs);

}  // namespace

BENCHMARK_MAIN();

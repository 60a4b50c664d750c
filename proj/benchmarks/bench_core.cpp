#include <benchmark/benchmark.h>

#include <numbers>

#include "qmeas/measurement_gates.hpp"
#include "qmeas/measurement_model.hpp"
#include "qmeas/monte_carlo.hpp"

using namespace qmeas;

static void BM_MeasurementGateApply(benchmark::State &state) {
    const PermutationGate gate = measurement_gate();
    const Preparation prep(0.6, 0.8);
    const Ket input = superposed_measurement_input(prep);
    for (auto _ : state) {
        Ket out = apply(gate, input);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_MeasurementGateApply);

static void BM_PairGateApply(benchmark::State &state) {
    const PermutationGate gate = pair_measurement_gate();
    const BranchedState input = pair_branched_measurement_input(SingletPreparation(0.3));
    for (auto _ : state) {
        Ket out = apply(gate, input.branch(1));
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_PairGateApply);

static void BM_TableCompletion(benchmark::State &state) {
    const TruthTable base = measurement_truth_table();
    for (auto _ : state) {
        TruthTable completed = complete_reversible(base, 0);
        benchmark::DoNotOptimize(completed);
    }
}
BENCHMARK(BM_TableCompletion);

static void BM_PartialTracePair(benchmark::State &state) {
    const BranchedState out = pair_branched_measurement(SingletPreparation(0.3));
    for (auto _ : state) {
        DensityMatrix rho = partial_trace(out.branch(0b01), {wires::q1, wires::q2});
        benchmark::DoNotOptimize(rho);
    }
}
BENCHMARK(BM_PartialTracePair);

static void BM_ContinuousTrajectory(benchmark::State &state) {
    const Preparation prep(1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2);
    const auto grid = phase_grid(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto points = rho_trajectory(prep, grid);
        benchmark::DoNotOptimize(points);
    }
}
BENCHMARK(BM_ContinuousTrajectory)->Arg(11)->Arg(101);

static void BM_RunTrials(benchmark::State &state) {
    ExperimentConfig cfg;
    cfg.scenario = Scenario::kSinglet;
    cfg.phi = 0.6;
    cfg.trials = static_cast<std::uint64_t>(state.range(0));
    cfg.seed = 1;
    for (auto _ : state) {
        FrequencyReport report = run_trials(cfg);
        benchmark::DoNotOptimize(report);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunTrials)->Arg(10000)->Arg(100000);

BENCHMARK_MAIN();

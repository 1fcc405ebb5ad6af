#include <benchmark/benchmark.h>

#include "qprobe/chainmap.hpp"
#include "qprobe/dyson.hpp"
#include "qprobe/qfi_series.hpp"
#include "qprobe/spectral.hpp"
#include "qprobe/tcl.hpp"
#include "qprobe/tebd.hpp"

using namespace qprobe;

namespace {

BathParameters bath(double s = 1.0) {
    return {OhmicSpectralDensity::make(1, s, 1), BathTemperature::from_temperature(0.07)};
}

void BM_CorrelationClosedForm(benchmark::State& st) {
    const auto b = bath();
    double t = 0.0;
    for (auto _ : st) {
        benchmark::DoNotOptimize(spectral::ttcf(b.sd, b.beta(), t));
        t += 1e-3;
    }
}
BENCHMARK(BM_CorrelationClosedForm);

void BM_CorrelationQuadrature(benchmark::State& st) {
    const auto b = bath(1.5);
    double t = 0.0;
    for (auto _ : st) {
        benchmark::DoNotOptimize(spectral::ttcf(b.sd, b.beta(), t));
        t += 1e-3;
    }
}
BENCHMARK(BM_CorrelationQuadrature);

void BM_Moments(benchmark::State& st) {
    const auto b = bath();
    for (auto _ : st) benchmark::DoNotOptimize(spectral::moments(b, spectral::kMaxMomentOrder));
}
BENCHMARK(BM_Moments);

void BM_TclEvolve(benchmark::State& st) {
    const auto b = bath();
    const auto p = ProbeConfig::make(1.0, kPi / 4);
    std::vector<double> grid;
    for (int i = 0; i <= 100; ++i) grid.push_back(0.05 * i);
    const auto rho0 = density_from_bloch(initial_state(0.0));
    for (auto _ : st) benchmark::DoNotOptimize(evolve_tcl(p, b, rho0, grid));
}
BENCHMARK(BM_TclEvolve)->Unit(benchmark::kMillisecond);

void BM_DysonPolynomial(benchmark::State& st) {
    const auto b = bath();
    const auto p = ProbeConfig::make(1.0, kPi / 4);
    const int k = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(dyson::dyson_truncated(p, b, k));
}
BENCHMARK(BM_DysonPolynomial)->DenseRange(2, 7)->Unit(benchmark::kMicrosecond);

void BM_QfiMap(benchmark::State& st) {
    const auto b = bath();
    std::vector<double> thetas, alphas;
    for (int i = 0; i < 11; ++i) {
        thetas.push_back(kPi / 2 * i / 10);
        alphas.push_back(kPi * i / 10);
    }
    QfiConfig qc;
    for (auto _ : st)
        benchmark::DoNotOptimize(
            qfi_map(b, 5.0, thetas, alphas, 0.35, qc, Backend::parse("dyson:7"), QfiMethod::Bloch));
}
BENCHMARK(BM_QfiMap)->Unit(benchmark::kMillisecond);

void BM_ChainCoefficients(benchmark::State& st) {
    const auto b = bath();
    const int n = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(chain::chain_coefficients(b.sd, b.beta(), n));
}
BENCHMARK(BM_ChainCoefficients)->Arg(60)->Arg(150)->Unit(benchmark::kMillisecond);

void BM_TrotterStep(benchmark::State& st) {
    const auto b = bath();
    auto cfg = TebdConfig::desk();
    cfg.chi = static_cast<int>(st.range(0));
    const auto coeffs = chain::chain_coefficients(b.sd, b.beta(), cfg.n);
    const auto h = chain_hamiltonian(coeffs, ProbeConfig::make(1.0, kPi / 4));
    // Grow entanglement before timing.
    auto warm = init_mps(0.0, cfg.n, cfg.d_max);
    for (int i = 0; i < 100; ++i) trotter_step(warm, h, cfg);
    for (auto _ : st) {
        st.PauseTiming();
        auto state = warm;
        st.ResumeTiming();
        benchmark::DoNotOptimize(trotter_step(state, h, cfg));
    }
}
BENCHMARK(BM_TrotterStep)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

// Benchmark of the chunked kernels against their serial references:
// evidence accumulation, ece, and mean nll over a synthetic log.

#include <chrono>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "trustcal/parallel.hpp"
#include "trustcal/reference.hpp"
#include "trustcal/synth.hpp"
#include "trustcal/temperature.hpp"

using namespace trustcal;

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double best_of(int repeats, F&& body) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto start = Clock::now();
    body();
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (elapsed < best) best = elapsed;
  }
  return best;
}

void report_line(const char* kernel, double serial, double parallel) {
  std::printf("%-22s %10.2f ms %10.2f ms %8.2fx\n", kernel, serial * 1e3, parallel * 1e3,
              serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs chunked-parallel kernel benchmark"};
  std::int64_t samples = 200000;
  int classes = 10;
  int bins = 10;
  int repeats = 5;
  std::uint64_t seed = 1;
  app.add_option("--samples", samples)->capture_default_str();
  app.add_option("--classes", classes)->capture_default_str();
  app.add_option("--bins", bins)->capture_default_str();
  app.add_option("--repeat", repeats)->capture_default_str();
  app.add_option("--seed", seed)->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  SynthSpec spec;
  spec.sample_count = samples;
  spec.class_count = classes;
  spec.sharpening = 1.5;
  spec.seed = seed;
  const RecordSet logits = synth_generate(spec).records;
  const RecordSet probs = apply_temperature(logits, 1.0);

  QuantifierConfig config;
  config.bin_count = bins;
  const BinningScheme scheme = make_uniform_bins(bins);

  std::printf("records=%lld classes=%d bins=%d threads=%d repeats=%d\n",
              static_cast<long long>(samples), classes, bins, par::max_threads(), repeats);
  std::printf("%-22s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

  volatile double sink = 0.0;  // keep results alive

  const double acc_serial = best_of(repeats, [&] {
    sink = reference::accumulate_evidence(probs, config).total_evidence().negative;
  });
  const double acc_parallel =
      best_of(repeats, [&] { sink = accumulate_evidence(probs, config).total_evidence().negative; });
  report_line("accumulate_evidence", acc_serial, acc_parallel);

  const double ece_serial =
      best_of(repeats, [&] { sink = reference::compute_ece(probs, scheme).ece; });
  const double ece_parallel = best_of(repeats, [&] { sink = compute_ece(probs, scheme).ece; });
  report_line("compute_ece", ece_serial, ece_parallel);

  const double nll_serial =
      best_of(repeats, [&] { sink = reference::mean_nll(logits, 1.7); });
  const double nll_parallel = best_of(repeats, [&] { sink = mean_nll(logits, 1.7); });
  report_line("mean_nll", nll_serial, nll_parallel);

  (void)sink;
  return 0;
}

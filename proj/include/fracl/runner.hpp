#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "fracl/analysis.hpp"
#include "fracl/config.hpp"
#include "fracl/csv.hpp"
#include "fracl/deterministic_solver.hpp"
#include "fracl/exact_burgers.hpp"
#include "fracl/particle_system.hpp"
#include "fracl/residuals.hpp"

namespace fracl {

/// Normalized model built from a config: measure with |u0|(R) = 1, offset 0,
/// and the correspondingly rescaled flux.
struct PreparedModel {
  SignedBVInitial init;
  FluxModel flux;
  double tv_raw;
  double offset;
};

PreparedModel prepare_model(const ExperimentConfig& cfg);

/// Exact inviscid Burgers profiles rescaled to the normalized CDF scale.
std::function<PwLinear(double)> exact_reference(double tv_raw, double offset);

/// Deterministic comparator solved once with snapshots at the requested
/// times; profiles are served on the normalized scale.
class DetReference {
 public:
  DetReference() = default;
  static DetReference build(const PreparedModel& model, double alpha, double sigma,
                            double t_final, std::vector<double> times, int m,
                            double x_min, double x_max);
  PwLinear profile(double t) const;
  std::function<PwLinear(double)> as_fn() const;
  bool boundary_warning() const { return warning_; }

 private:
  std::vector<double> times_;
  std::vector<PwLinear> profiles_;
  bool warning_ = false;
};

/// One particle run with streaming weighted-L1 evaluation against the
/// reference at every grid time.
ErrorReport run_one_error(const PreparedModel& model, double alpha, double sigma, int n,
                          double h, double eps, double t_final, std::uint64_t seed,
                          bool stratified, bool check_invariants,
                          const std::function<PwLinear(double)>& reference);

/// Thread count: FRACL_THREADS if set, otherwise hardware concurrency.
unsigned worker_threads();

/// Deterministic parallel map: jobs fill a pre-sized result slot by index, so
/// the output order never depends on scheduling.
template <class R>
std::vector<R> parallel_map(int jobs, const std::function<R(int)>& f) {
  std::vector<R> results(jobs);
  std::atomic<int> next{0};
  unsigned nthreads = std::min<unsigned>(worker_threads(), jobs > 0 ? jobs : 1);
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (unsigned w = 0; w < nthreads; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= jobs) return;
        try {
          results[i] = f(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return results;
}

RegimeReport validate_config(const ExperimentConfig& cfg);
void print_regime_report(const RegimeReport& rep, std::ostream& out);

/// Full experiment execution: validation, runs, CSV emission.  Exit status 0
/// on success, 2 on validation failure, 3 on numerical abort.
int run_experiment(const ExperimentConfig& cfg, std::ostream& log);

/// `reference` subcommand: emit the exact or deterministic solution as
/// t,x,value CSV rows at the configured snapshot times (normalized scale).
int emit_reference_csv(const ExperimentConfig& cfg, std::ostream& log);

}  // namespace fracl

#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "fracl/initial_data.hpp"
#include "fracl/stable.hpp"
#include "fracl/weighted_l1.hpp"

namespace fracl {

/// State of the N signed particles at a grid time.  Dead particles are kept
/// frozen (position and death time inspectable); `order` lists the alive
/// indices sorted by position (ties by original index).
struct ParticleState {
  std::vector<double> positions;
  std::vector<signed char> signs;  // +1 / -1
  std::vector<char> alive;
  std::vector<double> death_time;  // +inf while alive
  std::vector<int> order;          // alive indices, sorted
  std::int64_t k = 0;              // grid index; time = k*h
  int n = 0;

  int alive_count() const { return static_cast<int>(order.size()); }
};

struct KillEvent {
  int i, j;          // particle indices, position(i) <= position(j)
  double xi, xj;
  int si, sj;
  double t;
};

struct KillReport {
  std::vector<KillEvent> pairs;
};

/// Queryable signed empirical CDF H * mu~: breakpoints are the distinct alive
/// positions, cumulative the partial sums of the signed weights (sign/N).
/// Right-continuous; evaluation at a breakpoint includes that particle.
struct SignedCdf {
  std::vector<double> breakpoints;
  std::vector<double> cumulative;
  double eval(double x) const;  // O(log N)
  double total() const { return cumulative.empty() ? 0.0 : cumulative.back(); }
  StepFn as_step() const { return StepFn{breakpoints, cumulative, 0.0}; }
};

SignedCdf make_signed_cdf(const ParticleState& st);

/// Exact integer version (sum of signs), for bit-exact conservation checks.
void make_integer_cdf(const ParticleState& st, std::vector<double>& xs,
                      std::vector<std::int64_t>& cum);

enum class Sampling { iid, stratified };

/// Draw positions from |u0|, assign signs by gamma, sort, then apply one
/// killing pass at time 0.
ParticleState init_particles(const SignedBVInitial& init, int n, double eps,
                             RngStream& rng, Sampling sampling = Sampling::iid,
                             KillReport* report = nullptr);

/// One pass of the killing rule at time t: repeatedly remove the leftmost
/// couple of alive particles at consecutive positions with opposite signs and
/// distance < eps.  Realized as a single left-to-right scan with a survivor
/// stack (O(N) after sorting); the incoming particle annihilates the stack
/// top iff the signs are opposite and the gap is < eps.
KillReport kill_pairs(ParticleState& st, double eps, double t);

/// Euler step over [k h, (k+1) h]: every alive particle moves by
/// A'(H*mu~(X_i)) h + sigma * dL_i, the CDF argument evaluated at the
/// particle's own position (its own weight and any ties included).  Dead
/// particles stay frozen; the order is re-sorted afterwards.
void euler_step(ParticleState& st, const FluxModel& flux, double sigma, double h,
                std::vector<StableDriver>& drivers);

std::int64_t total_signed_count(const ParticleState& st);  // sum of alive signs
double total_signed_mass(const ParticleState& st);         // / N
double total_variation(const ParticleState& st);           // alive / N

struct SimConfig {
  SignedBVInitial init;    // normalized
  FluxModel flux;          // normalized
  double alpha = 2.0;
  double sigma = 0.0;
  int n = 0;
  double h = 0.0;
  double eps = 0.0;
  double t_final = 0.0;
  std::uint64_t seed = 0;
  Sampling sampling = Sampling::iid;
  bool check_invariants = true;
};

/// Thrown when a position becomes non-finite (possible only through a
/// user-supplied flux).
struct NumericalAbort : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Full scheme: initial sampling + kill at 0, then alternate Euler step and
/// kill on the grid {k h} up to T.  The callback receives the state and CDF
/// after every kill (including time 0).  Deterministic given the seed.
void run_simulation(const SimConfig& cfg,
                    const std::function<void(double t, std::int64_t k,
                                             const ParticleState& st,
                                             const SignedCdf& cdf,
                                             const KillReport& kills)>& on_snapshot);

/// Convenience form retaining every snapshot.
std::vector<std::pair<double, SignedCdf>> run_simulation(const SimConfig& cfg);

}  // namespace fracl

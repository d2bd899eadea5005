#include "fracl/particle_system.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracl {

namespace {

void sort_alive(ParticleState& st) {
  st.order.clear();
  for (int i = 0; i < st.n; ++i)
    if (st.alive[i]) st.order.push_back(i);
  std::sort(st.order.begin(), st.order.end(), [&](int a, int b) {
    if (st.positions[a] != st.positions[b]) return st.positions[a] < st.positions[b];
    return a < b;  // stable tie order by original index
  });
}

void check_post_kill_state(const ParticleState& st, double eps,
                           const std::vector<double>& pre_xs,
                           const std::vector<std::int64_t>& pre_cum,
                           std::int64_t pre_count, const KillReport& rep, double t) {
  // pairing structure
  for (const KillEvent& e : rep.pairs) {
    if (e.si == e.sj || !(std::abs(e.xj - e.xi) < eps) || e.t != t)
      throw std::logic_error("kill_pairs: invalid victim pair");
  }
  // mass conservation, exact in integer units
  if (total_signed_count(st) != pre_count)
    throw std::logic_error("kill_pairs: signed mass changed");
  // post-kill separation: adjacent alive pairs of opposite sign are >= eps
  // apart (the minimum over all opposite pairs is attained at an adjacent one)
  for (std::size_t q = 1; q < st.order.size(); ++q) {
    int a = st.order[q - 1], b = st.order[q];
    if (st.signs[a] != st.signs[b] && st.positions[b] - st.positions[a] < eps)
      throw std::logic_error("kill_pairs: opposite-sign pair closer than eps survived");
  }
  // CDF preservation at surviving particles
  std::vector<double> post_xs;
  std::vector<std::int64_t> post_cum;
  make_integer_cdf(st, post_xs, post_cum);
  auto eval_int = [](const std::vector<double>& xs, const std::vector<std::int64_t>& cum,
                     double x) -> std::int64_t {
    std::size_t i = std::upper_bound(xs.begin(), xs.end(), x) - xs.begin();
    return i == 0 ? 0 : cum[i - 1];
  };
  for (int i : st.order) {
    double x = st.positions[i];
    if (eval_int(pre_xs, pre_cum, x) != eval_int(post_xs, post_cum, x))
      throw std::logic_error("kill_pairs: CDF changed at a surviving particle");
  }
}

}  // namespace

double SignedCdf::eval(double x) const {
  std::size_t i =
      std::upper_bound(breakpoints.begin(), breakpoints.end(), x) - breakpoints.begin();
  return i == 0 ? 0.0 : cumulative[i - 1];
}

SignedCdf make_signed_cdf(const ParticleState& st) {
  SignedCdf cdf;
  cdf.breakpoints.reserve(st.order.size());
  cdf.cumulative.reserve(st.order.size());
  double w = st.n > 0 ? 1.0 / st.n : 0.0;
  std::int64_t acc = 0;
  for (std::size_t q = 0; q < st.order.size(); ++q) {
    int i = st.order[q];
    acc += st.signs[i];
    double x = st.positions[i];
    if (!cdf.breakpoints.empty() && cdf.breakpoints.back() == x) {
      cdf.cumulative.back() = acc * w;  // merge ties
    } else {
      cdf.breakpoints.push_back(x);
      cdf.cumulative.push_back(acc * w);
    }
  }
  return cdf;
}

void make_integer_cdf(const ParticleState& st, std::vector<double>& xs,
                      std::vector<std::int64_t>& cum) {
  xs.clear();
  cum.clear();
  std::int64_t acc = 0;
  for (int i : st.order) {
    acc += st.signs[i];
    double x = st.positions[i];
    if (!xs.empty() && xs.back() == x) {
      cum.back() = acc;
    } else {
      xs.push_back(x);
      cum.push_back(acc);
    }
  }
}

ParticleState init_particles(const SignedBVInitial& init, int n, double eps,
                             RngStream& rng, Sampling sampling, KillReport* report) {
  if (n < 1) throw std::invalid_argument("init_particles: need at least one particle");
  if (!(eps > 0.0)) throw std::invalid_argument("init_particles: eps must be positive");
  ParticleState st;
  st.n = n;
  st.positions = sampling == Sampling::iid ? init.sample_positions(n, rng)
                                           : init.stratified_positions(n);
  st.signs.resize(n);
  for (int i = 0; i < n; ++i)
    st.signs[i] = static_cast<signed char>(init.gamma_at(st.positions[i]));
  st.alive.assign(n, 1);
  st.death_time.assign(n, std::numeric_limits<double>::infinity());
  st.k = 0;
  sort_alive(st);
  KillReport rep = kill_pairs(st, eps, 0.0);
  if (report) *report = std::move(rep);
  return st;
}

KillReport kill_pairs(ParticleState& st, double eps, double t) {
  if (!(eps > 0.0)) throw std::invalid_argument("kill_pairs: eps must be positive");
  KillReport rep;
  std::vector<int> stack;
  stack.reserve(st.order.size());
  for (int idx : st.order) {
    if (!stack.empty()) {
      int top = stack.back();
      if (st.signs[top] != st.signs[idx] &&
          st.positions[idx] - st.positions[top] < eps) {
        st.alive[top] = 0;
        st.alive[idx] = 0;
        st.death_time[top] = t;
        st.death_time[idx] = t;
        rep.pairs.push_back({top, idx, st.positions[top], st.positions[idx],
                             st.signs[top], st.signs[idx], t});
        stack.pop_back();
        continue;
      }
    }
    stack.push_back(idx);
  }
  st.order = std::move(stack);  // survivors remain sorted
  return rep;
}

void euler_step(ParticleState& st, const FluxModel& flux, double sigma, double h,
                std::vector<StableDriver>& drivers) {
  if (!(h > 0.0)) throw std::invalid_argument("euler_step: h must be positive");
  if (sigma < 0.0) throw std::invalid_argument("euler_step: sigma must be >= 0");
  const std::size_t m = st.order.size();
  const double w = 1.0 / st.n;

  // drift argument: inclusive signed CDF at each particle's own position;
  // runs of tied positions share the run-final cumulative value
  std::vector<double> drift(m);
  {
    std::vector<std::int64_t> prefix(m);
    std::int64_t acc = 0;
    for (std::size_t q = 0; q < m; ++q) {
      acc += st.signs[st.order[q]];
      prefix[q] = acc;
    }
    std::size_t q = 0;
    while (q < m) {
      std::size_t r = q;
      while (r + 1 < m && st.positions[st.order[r + 1]] == st.positions[st.order[q]]) ++r;
      double arg = static_cast<double>(prefix[r]) * w;
      for (std::size_t s = q; s <= r; ++s) drift[s] = flux.aprime(arg);
      q = r + 1;
    }
  }

  for (std::size_t q = 0; q < m; ++q) {
    int i = st.order[q];
    double dx = drift[q] * h;
    if (sigma > 0.0) dx += sigma * drivers[i].sample_increment(h);
    st.positions[i] += dx;
    if (!std::isfinite(st.positions[i]))
      throw NumericalAbort("euler_step: particle position became non-finite");
  }
  st.k += 1;
  sort_alive(st);
}

std::int64_t total_signed_count(const ParticleState& st) {
  std::int64_t s = 0;
  for (int i : st.order) s += st.signs[i];
  return s;
}

double total_signed_mass(const ParticleState& st) {
  return static_cast<double>(total_signed_count(st)) / st.n;
}

double total_variation(const ParticleState& st) {
  return static_cast<double>(st.alive_count()) / st.n;
}

void run_simulation(const SimConfig& cfg,
                    const std::function<void(double, std::int64_t, const ParticleState&,
                                             const SignedCdf&, const KillReport&)>& on_snapshot) {
  if (!(cfg.h > 0.0)) throw std::invalid_argument("run_simulation: h must be positive");
  if (cfg.t_final < 0.0) throw std::invalid_argument("run_simulation: negative T");
  std::int64_t steps = std::llround(cfg.t_final / cfg.h);
  if (std::abs(steps * cfg.h - cfg.t_final) > 1e-9 * std::max(1.0, cfg.t_final))
    throw std::invalid_argument("run_simulation: T must be a multiple of h");

  RngStream pos_rng(cfg.seed, 0);
  KillReport rep0;
  ParticleState st = init_particles(cfg.init, cfg.n, cfg.eps, pos_rng, cfg.sampling, &rep0);

  std::vector<StableDriver> drivers;
  drivers.reserve(cfg.n);
  for (int i = 0; i < cfg.n; ++i) drivers.emplace_back(cfg.alpha, cfg.seed, i + 1);

  const std::int64_t mass0 = total_signed_count(st);
  double tv_prev = total_variation(st);

  on_snapshot(0.0, 0, st, make_signed_cdf(st), rep0);

  std::vector<double> pre_xs;
  std::vector<std::int64_t> pre_cum;
  for (std::int64_t k = 0; k < steps; ++k) {
    euler_step(st, cfg.flux, cfg.sigma, cfg.h, drivers);
    double t = (k + 1) * cfg.h;
    std::int64_t pre_count = 0;
    if (cfg.check_invariants) {
      make_integer_cdf(st, pre_xs, pre_cum);
      pre_count = total_signed_count(st);
    }
    KillReport rep = kill_pairs(st, cfg.eps, t);
    if (cfg.check_invariants) {
      check_post_kill_state(st, cfg.eps, pre_xs, pre_cum, pre_count, rep, t);
      if (total_signed_count(st) != mass0)
        throw std::logic_error("run_simulation: signed mass not conserved");
      double tv = total_variation(st);
      if (tv > tv_prev + 1e-15)
        throw std::logic_error("run_simulation: total variation increased");
      tv_prev = tv;
    }
    on_snapshot(t, k + 1, st, make_signed_cdf(st), rep);
  }
}

std::vector<std::pair<double, SignedCdf>> run_simulation(const SimConfig& cfg) {
  std::vector<std::pair<double, SignedCdf>> out;
  run_simulation(cfg, [&](double t, std::int64_t, const ParticleState&, const SignedCdf& cdf,
                          const KillReport&) { out.emplace_back(t, cdf); });
  return out;
}

}  // namespace fracl

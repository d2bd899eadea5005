#include "fracl/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

namespace fracl {

namespace fs = std::filesystem;

PreparedModel prepare_model(const ExperimentConfig& cfg) {
  std::vector<Atom> atoms;
  for (const auto& [x, m] : cfg.init_atoms) atoms.push_back({x, m});
  std::vector<Piece> pieces;
  for (const auto& p : cfg.init_pieces) pieces.push_back({p[0], p[1], p[2]});
  SignedBVInitial raw(std::move(atoms), std::move(pieces), cfg.init_offset);
  FluxModel flux = cfg.flux_kind == "burgers" ? FluxModel::burgers()
                                              : FluxModel::polynomial(cfg.flux_coeffs);
  auto [init, nflux] = normalize(raw, flux);
  return {std::move(init), std::move(nflux), raw.tv_raw(), raw.offset()};
}

std::function<PwLinear(double)> exact_reference(double tv_raw, double offset) {
  return [tv_raw, offset](double t) {
    return exact_inviscid_profile(t).scaled(1.0 / tv_raw, -offset / tv_raw);
  };
}

DetReference DetReference::build(const PreparedModel& model, double alpha, double sigma,
                                 double t_final, std::vector<double> times, int m,
                                 double x_min, double x_max) {
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  Grid1D v0 = Grid1D::from_function(x_min, x_max, m,
                                    [&](double x) { return model.init.cdf_v0(x); });
  double step = t_final;
  for (std::size_t i = 0; i < times.size(); ++i) {
    double gap = i == 0 ? times[i] : times[i] - times[i - 1];
    if (gap > 1e-12) step = std::min(step, gap);
  }
  double dt_max = max_stable_dt(v0, alpha, sigma, model.flux);
  double dt = step / std::ceil(step / dt_max * (1.0 + 1e-12));
  DetSolution sol = deterministic_solve(v0, alpha, sigma, model.flux, t_final, dt, times);
  DetReference ref;
  ref.warning_ = sol.boundary_warning;
  for (const DetSnapshot& s : sol.snapshots) {
    ref.times_.push_back(s.t);
    ref.profiles_.push_back(reference_cdf_on_grid(s.grid));
  }
  return ref;
}

PwLinear DetReference::profile(double t) const {
  for (std::size_t i = 0; i < times_.size(); ++i)
    if (std::abs(times_[i] - t) <= 1e-9 * std::max(1.0, std::abs(t))) return profiles_[i];
  throw std::invalid_argument("DetReference: no snapshot at the requested time");
}

std::function<PwLinear(double)> DetReference::as_fn() const {
  // copy the tables so the reference object may go out of scope
  auto times = times_;
  auto profiles = profiles_;
  return [times = std::move(times), profiles = std::move(profiles)](double t) {
    for (std::size_t i = 0; i < times.size(); ++i)
      if (std::abs(times[i] - t) <= 1e-9 * std::max(1.0, std::abs(t))) return profiles[i];
    throw std::invalid_argument("DetReference: no snapshot at the requested time");
  };
}

ErrorReport run_one_error(const PreparedModel& model, double alpha, double sigma, int n,
                          double h, double eps, double t_final, std::uint64_t seed,
                          bool stratified, bool check_invariants,
                          const std::function<PwLinear(double)>& reference) {
  SimConfig sim{model.init, model.flux, alpha,  sigma,
                n,          h,          eps,    t_final,
                seed,       stratified ? Sampling::stratified : Sampling::iid,
                check_invariants};
  ErrorMeta meta{n, h, eps, sigma, alpha, seed};
  ErrorAccumulator acc(reference, h, t_final, meta);
  run_simulation(sim, [&](double t, std::int64_t, const ParticleState&, const SignedCdf& cdf,
                          const KillReport&) { acc.add(t, cdf); });
  return acc.finalize();
}

unsigned worker_threads() {
  if (const char* env = std::getenv("FRACL_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

RegimeReport validate_config(const ExperimentConfig& cfg) {
  PreparedModel model = prepare_model(cfg);
  double n = cfg.n > 0 ? cfg.n : (cfg.n_list.empty() ? 1.0 : cfg.n_list.front());
  double h = cfg.h > 0 ? cfg.h : (cfg.h_list.empty() ? (cfg.c_h / n) : cfg.h_list.front());
  double eps = cfg.eps > 0 ? cfg.eps
                           : (cfg.study == StudyKind::sweep_n ? cfg.c_eps / n
                                                              : cfg.eps_over_h * h);
  return validate_theorem_hypotheses(n, h, eps, cfg.sigma, cfg.alpha, cfg.lambda,
                                     model.flux);
}

void print_regime_report(const RegimeReport& rep, std::ostream& out) {
  auto print_checks = [&](const char* label, const std::vector<RegimeCheck>& checks,
                          bool applicable, bool pass) {
    out << label << (applicable ? (pass ? "  PASS" : "  FAIL") : "  not applicable")
        << '\n';
    for (const RegimeCheck& c : checks)
      out << "  " << (c.pass ? "ok  " : "FAIL") << "  " << c.name << "  (lhs="
          << format_double(c.lhs) << ", rhs=" << format_double(c.rhs) << ")\n";
  };
  out << "lambda = " << format_double(rep.lambda) << '\n';
  print_checks("thm1 (alpha <= 1, sigma fixed):", rep.thm1_checks, rep.thm1_applicable,
               rep.thm1_pass);
  print_checks("thm2 (vanishing sigma):", rep.thm2_checks, true, rep.thm2_pass);
  print_checks("thm3 (alpha > 1, sigma fixed):", rep.thm3_checks, rep.thm3_applicable,
               rep.thm3_pass);
  out << "strongest regime: " << theorem_name(rep.theorem) << '\n';
}

namespace {

struct SeedRun {
  ErrorReport report;
  std::string snapshot_rows;
  std::string kill_rows;
};

std::vector<double> default_snapshot_times(const ExperimentConfig& cfg) {
  if (!cfg.snapshot_times.empty()) return cfg.snapshot_times;
  return {cfg.t_final};
}

SeedRun run_single_seed(const ExperimentConfig& cfg, const PreparedModel& model,
                        std::uint64_t seed,
                        const std::function<PwLinear(double)>& reference) {
  SimConfig sim{model.init, model.flux, cfg.alpha, cfg.sigma,
                cfg.n,      cfg.h,      cfg.eps,   cfg.t_final,
                seed,       cfg.stratified ? Sampling::stratified : Sampling::iid,
                cfg.check_invariants};
  SeedRun out;
  ErrorMeta meta{cfg.n, cfg.h, cfg.eps, cfg.sigma, cfg.alpha, seed};
  std::optional<ErrorAccumulator> acc;
  if (reference) acc.emplace(reference, cfg.h, cfg.t_final, meta);
  std::vector<double> want = default_snapshot_times(cfg);
  std::ostringstream snaps, kills;
  run_simulation(sim, [&](double t, std::int64_t, const ParticleState&, const SignedCdf& cdf,
                          const KillReport& rep) {
    if (acc) acc->add(t, cdf);
    for (double ts : want)
      if (std::abs(ts - t) <= 1e-9 * std::max(1.0, ts)) {
        append_snapshot_rows(snaps, t, cdf);
        break;
      }
    append_kill_rows(kills, rep);
  });
  if (acc) out.report = acc->finalize();
  out.report.meta = meta;
  out.snapshot_rows = snaps.str();
  out.kill_rows = kills.str();
  return out;
}

struct SweepPoint {
  double scale;
  int n;
  double h, eps, sigma;
};

int run_sweep(const ExperimentConfig& cfg, const PreparedModel& model,
              const std::vector<SweepPoint>& points, std::ostream& log) {
  // reference: one deterministic solve covering every grid, or the exact
  // inviscid solution
  std::function<PwLinear(double)> reference;
  DetReference det;
  if (cfg.reference == ReferenceKind::deterministic) {
    std::vector<double> times;
    for (const SweepPoint& p : points) {
      long long steps = std::llround(cfg.t_final / p.h);
      for (long long k = 0; k <= steps; ++k) times.push_back(k * p.h);
    }
    det = DetReference::build(model, cfg.alpha,
                              cfg.study == StudyKind::sweep_sigma ? points.front().sigma
                                                                  : cfg.sigma,
                              cfg.t_final, times, cfg.ref_m, cfg.ref_xmin, cfg.ref_xmax);
    if (det.boundary_warning())
      log << "warning: deterministic reference support near the domain boundary\n";
    reference = det.as_fn();
  } else if (cfg.reference == ReferenceKind::exact) {
    reference = exact_reference(model.tv_raw, model.offset);
  } else {
    log << "error: sweeps need reference = exact or deterministic\n";
    return 2;
  }
  if (cfg.study == StudyKind::sweep_sigma &&
      cfg.reference == ReferenceKind::deterministic) {
    log << "error: sweep_sigma compares against the exact inviscid solution\n";
    return 2;
  }

  fs::create_directories(cfg.out_dir);
  std::ofstream errf(fs::path(cfg.out_dir) / "errors.csv");
  write_error_header(errf);
  std::vector<SlopePoint> slope_points;
  std::vector<std::pair<double, double>> fit_points;

  for (const SweepPoint& p : points) {
    std::function<ErrorReport(int)> job = [&](int s) {
      return run_one_error(model, cfg.alpha, p.sigma, p.n, p.h, p.eps, cfg.t_final,
                           cfg.seed + static_cast<std::uint64_t>(s), cfg.stratified,
                           cfg.check_invariants, reference);
    };
    std::vector<ErrorReport> reports = parallel_map<ErrorReport>(cfg.seeds, job);
    double mean = 0.0;
    for (const auto& r : reports) mean += r.integrated;
    mean /= reports.size();
    double var = 0.0;
    for (const auto& r : reports) var += (r.integrated - mean) * (r.integrated - mean);
    double stderr_mean = reports.size() > 1
                             ? std::sqrt(var / (reports.size() - 1.0) / reports.size())
                             : 0.0;
    for (const auto& r : reports) append_error_rows(errf, r);
    slope_points.push_back({p.scale, mean, stderr_mean});
    fit_points.emplace_back(p.scale, mean);
    log << "scale " << format_double(p.scale) << ": mean error " << format_double(mean)
        << " (stderr " << format_double(stderr_mean) << ")\n";
  }

  std::ofstream slopef(fs::path(cfg.out_dir) / "slope.csv");
  write_slope_csv(slopef, slope_points);
  if (fit_points.size() >= 3) {
    FitResult fit = convergence_slope(fit_points);
    log << "fitted slope " << format_double(fit.slope) << " (r^2 "
        << format_double(fit.r_squared) << ")\n";
  }
  return 0;
}

}  // namespace

int run_experiment(const ExperimentConfig& cfg, std::ostream& log) {
  PreparedModel model = prepare_model(cfg);

  RegimeReport regime = validate_config(cfg);
  print_regime_report(regime, log);
  if (regime.theorem == Theorem::none && !cfg.override_regime) {
    log << "regime validation failed (use --override-regime to run anyway)\n";
    return 2;
  }

  try {
    if (cfg.study == StudyKind::single) {
      std::function<PwLinear(double)> reference;
      DetReference det;
      if (cfg.reference == ReferenceKind::exact) {
        reference = exact_reference(model.tv_raw, model.offset);
      } else if (cfg.reference == ReferenceKind::deterministic) {
        std::vector<double> times;
        long long steps = std::llround(cfg.t_final / cfg.h);
        for (long long k = 0; k <= steps; ++k) times.push_back(k * cfg.h);
        det = DetReference::build(model, cfg.alpha, cfg.sigma, cfg.t_final, times,
                                  cfg.ref_m, cfg.ref_xmin, cfg.ref_xmax);
        if (det.boundary_warning())
          log << "warning: deterministic reference support near the domain boundary\n";
        reference = det.as_fn();
      }
      std::function<SeedRun(int)> job = [&](int s) {
        return run_single_seed(cfg, model, cfg.seed + static_cast<std::uint64_t>(s),
                               reference);
      };
      std::vector<SeedRun> runs = parallel_map<SeedRun>(cfg.seeds, job);

      fs::create_directories(cfg.out_dir);
      std::ofstream snapf(fs::path(cfg.out_dir) / "snapshots.csv");
      snapf << "seed,t,x,cdf_value\n";
      // seed column prefixed by rewriting the buffered rows
      for (int s = 0; s < cfg.seeds; ++s) {
        std::istringstream rows(runs[s].snapshot_rows);
        std::string line;
        while (std::getline(rows, line))
          snapf << (cfg.seed + static_cast<std::uint64_t>(s)) << ',' << line << '\n';
      }
      std::ofstream killf(fs::path(cfg.out_dir) / "kills.csv");
      killf << "seed,t,x_i,x_j,sign_i,sign_j\n";
      for (int s = 0; s < cfg.seeds; ++s) {
        std::istringstream rows(runs[s].kill_rows);
        std::string line;
        while (std::getline(rows, line))
          killf << (cfg.seed + static_cast<std::uint64_t>(s)) << ',' << line << '\n';
      }
      if (reference) {
        std::ofstream errf(fs::path(cfg.out_dir) / "errors.csv");
        write_error_header(errf);
        for (const SeedRun& r : runs) append_error_rows(errf, r.report);
        double mean = 0.0;
        for (const SeedRun& r : runs) mean += r.report.integrated;
        log << "mean integrated error " << format_double(mean / cfg.seeds) << '\n';
      }
      return 0;
    }

    std::vector<SweepPoint> points;
    if (cfg.study == StudyKind::sweep_n) {
      for (double nd : cfg.n_list) {
        int n = static_cast<int>(nd);
        points.push_back({nd, n, cfg.c_h / n, cfg.c_eps / n, cfg.sigma});
      }
    } else if (cfg.study == StudyKind::sweep_h) {
      for (double h : cfg.h_list) points.push_back({h, cfg.n, h, cfg.eps_over_h * h, cfg.sigma});
    } else {
      for (double s : cfg.sigma_list) points.push_back({s, cfg.n, cfg.h, cfg.eps, s});
    }
    if (points.empty()) {
      log << "error: empty sweep list\n";
      return 2;
    }
    return run_sweep(cfg, model, points, log);
  } catch (const NumericalAbort& e) {
    log << "numerical abort: " << e.what() << '\n';
    return 3;
  }
}

int emit_reference_csv(const ExperimentConfig& cfg, std::ostream& log) {
  PreparedModel model = prepare_model(cfg);
  std::vector<double> times = default_snapshot_times(cfg);
  fs::create_directories(cfg.out_dir);
  std::ofstream out(fs::path(cfg.out_dir) / "reference.csv");
  out << "t,x,value\n";
  if (cfg.reference == ReferenceKind::exact) {
    auto ref = exact_reference(model.tv_raw, model.offset);
    for (double t : times) {
      PwLinear prof = ref(t);
      const int m = 2001;
      for (int i = 0; i < m; ++i) {
        double x = cfg.ref_xmin + (cfg.ref_xmax - cfg.ref_xmin) * i / (m - 1);
        out << format_double(t) << ',' << format_double(x) << ','
            << format_double(prof(x)) << '\n';
      }
    }
  } else if (cfg.reference == ReferenceKind::deterministic) {
    DetReference det = DetReference::build(model, cfg.alpha, cfg.sigma, cfg.t_final,
                                           times, cfg.ref_m, cfg.ref_xmin, cfg.ref_xmax);
    if (det.boundary_warning())
      log << "warning: reference support near the domain boundary\n";
    for (double t : times) {
      PwLinear prof = det.profile(t);
      for (std::size_t i = 0; i < prof.xs.size(); ++i)
        out << format_double(t) << ',' << format_double(prof.xs[i]) << ','
            << format_double(prof.right_vals[i]) << '\n';
    }
  } else {
    log << "error: reference subcommand needs reference = exact or deterministic\n";
    return 2;
  }
  log << "wrote " << (fs::path(cfg.out_dir) / "reference.csv").string() << '\n';
  return 0;
}

}  // namespace fracl

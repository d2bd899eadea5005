#include <CLI11.hpp>

#include <iostream>

#include "fracl/config.hpp"
#include "fracl/runner.hpp"

namespace {

struct CommonOpts {
  std::string config_path;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int seeds = 0;
  std::string out_dir;
  bool override_regime = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config_path, "experiment config file")->required();
  cmd->add_option("--seed", opts.seed, "base RNG seed")->each([&](const std::string&) {
    opts.seed_set = true;
  });
  cmd->add_option("--seeds", opts.seeds, "number of replications");
  cmd->add_option("--out", opts.out_dir, "output directory");
  cmd->add_flag("--override-regime", opts.override_regime,
                "run even if the regime validation fails");
}

fracl::ExperimentConfig load(const CommonOpts& opts, fracl::StudyKind forced_study,
                             bool force_study) {
  fracl::ExperimentConfig cfg = fracl::parse_config_file(opts.config_path);
  if (opts.seed_set) cfg.seed = opts.seed;
  if (opts.seeds > 0) cfg.seeds = opts.seeds;
  if (!opts.out_dir.empty()) cfg.out_dir = opts.out_dir;
  if (opts.override_regime) cfg.override_regime = true;
  if (force_study) cfg.study = forced_study;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"signed-particle solver for (fractional) scalar conservation laws"};
  app.require_subcommand(1);

  CommonOpts sim_opts, val_opts, sn_opts, sh_opts, ss_opts, ref_opts;
  CLI::App* sim = app.add_subcommand("simulate", "run the particle scheme");
  add_common(sim, sim_opts);
  CLI::App* val = app.add_subcommand("validate", "check the convergence-regime inequalities");
  add_common(val, val_opts);
  CLI::App* swn = app.add_subcommand("sweep-n", "error vs particle count (h = c_h/N, eps = c_eps/N)");
  add_common(swn, sn_opts);
  CLI::App* swh = app.add_subcommand("sweep-h", "error vs time step (eps = eps_over_h * h)");
  add_common(swh, sh_opts);
  CLI::App* sws = app.add_subcommand("sweep-sigma", "error vs diffusion coefficient");
  add_common(sws, ss_opts);
  CLI::App* ref = app.add_subcommand("reference", "emit the exact or deterministic solution");
  add_common(ref, ref_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed())
      return fracl::run_experiment(load(sim_opts, fracl::StudyKind::single, true), std::cout);
    if (val->parsed()) {
      fracl::ExperimentConfig cfg = load(val_opts, fracl::StudyKind::single, false);
      fracl::RegimeReport rep = fracl::validate_config(cfg);
      fracl::print_regime_report(rep, std::cout);
      return rep.theorem == fracl::Theorem::none ? 2 : 0;
    }
    if (swn->parsed())
      return fracl::run_experiment(load(sn_opts, fracl::StudyKind::sweep_n, true), std::cout);
    if (swh->parsed())
      return fracl::run_experiment(load(sh_opts, fracl::StudyKind::sweep_h, true), std::cout);
    if (sws->parsed())
      return fracl::run_experiment(load(ss_opts, fracl::StudyKind::sweep_sigma, true), std::cout);
    if (ref->parsed())
      return fracl::emit_reference_csv(load(ref_opts, fracl::StudyKind::single, false), std::cout);
  } catch (const fracl::ConfigError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const fracl::NumericalAbort& e) {
    std::cerr << "numerical abort: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

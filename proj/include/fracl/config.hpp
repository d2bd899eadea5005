#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fracl {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class StudyKind { single, sweep_n, sweep_h, sweep_sigma };
enum class ReferenceKind { none, exact, deterministic };

/// Flat key-value experiment description with sections [run], [flux], [init],
/// [sweep].  Parsing is strict: unknown sections or keys abort.
struct ExperimentConfig {
  // [run]
  StudyKind study = StudyKind::single;
  double alpha = 2.0;
  double sigma = 0.0;
  int n = 0;
  double h = 0.0;
  double eps = 0.0;
  double t_final = 0.0;
  double lambda = 2.0;
  std::uint64_t seed = 1;
  int seeds = 1;
  bool stratified = false;
  ReferenceKind reference = ReferenceKind::none;
  std::vector<double> snapshot_times;
  std::string out_dir = "out";
  bool override_regime = false;
  bool check_invariants = true;

  // [flux]
  std::string flux_kind = "burgers";
  std::vector<double> flux_coeffs;

  // [init]
  double init_offset = 0.0;
  std::vector<std::pair<double, double>> init_atoms;            // (x, mass)
  std::vector<std::array<double, 3>> init_pieces;               // (left, right, density)

  // [sweep]
  std::vector<double> n_list;
  double c_h = 10.0;    // sweep_n coupling h = c_h / N
  double c_eps = 40.0;  // sweep_n coupling eps = c_eps / N
  std::vector<double> h_list;
  double eps_over_h = 4.0;  // sweep_h coupling eps = eps_over_h * h
  std::vector<double> sigma_list;
  int ref_m = 8192;
  double ref_xmin = -20.0;
  double ref_xmax = 20.0;
};

ExperimentConfig parse_config_file(const std::string& path);
ExperimentConfig parse_config_text(const std::string& text);

}  // namespace fracl

#include "fracl/config.hpp"

#include <array>
#include <fstream>
#include <sstream>

namespace fracl {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<double> parse_doubles(const std::string& v, const std::string& key) {
  std::istringstream in(v);
  std::vector<double> out;
  double x;
  while (in >> x) out.push_back(x);
  std::string rest;
  if (in.fail() && !in.eof())
    throw ConfigError("config: bad numeric list for key '" + key + "'");
  if (out.empty()) throw ConfigError("config: empty value for key '" + key + "'");
  return out;
}

double parse_double(const std::string& v, const std::string& key) {
  auto xs = parse_doubles(v, key);
  if (xs.size() != 1) throw ConfigError("config: key '" + key + "' expects one number");
  return xs[0];
}

bool parse_bool(const std::string& v, const std::string& key) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("config: key '" + key + "' expects a boolean");
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
  ExperimentConfig cfg;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("config line " + std::to_string(lineno) + ": bad section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "run" && section != "flux" && section != "init" && section != "sweep")
        throw ConfigError("config line " + std::to_string(lineno) + ": unknown section [" +
                          section + "]");
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (section.empty())
      throw ConfigError("config line " + std::to_string(lineno) + ": key outside a section");

    auto unknown = [&]() -> ConfigError {
      return ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key +
                         "' in section [" + section + "]");
    };

    if (section == "run") {
      if (key == "study") {
        if (val == "single") cfg.study = StudyKind::single;
        else if (val == "sweep_n") cfg.study = StudyKind::sweep_n;
        else if (val == "sweep_h") cfg.study = StudyKind::sweep_h;
        else if (val == "sweep_sigma") cfg.study = StudyKind::sweep_sigma;
        else throw ConfigError("config: unknown study kind '" + val + "'");
      } else if (key == "alpha") cfg.alpha = parse_double(val, key);
      else if (key == "sigma") cfg.sigma = parse_double(val, key);
      else if (key == "n") cfg.n = static_cast<int>(parse_double(val, key));
      else if (key == "h") cfg.h = parse_double(val, key);
      else if (key == "eps") cfg.eps = parse_double(val, key);
      else if (key == "T") cfg.t_final = parse_double(val, key);
      else if (key == "lambda") cfg.lambda = parse_double(val, key);
      else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(parse_double(val, key));
      else if (key == "seeds") cfg.seeds = static_cast<int>(parse_double(val, key));
      else if (key == "sampling") {
        if (val == "iid") cfg.stratified = false;
        else if (val == "stratified") cfg.stratified = true;
        else throw ConfigError("config: unknown sampling mode '" + val + "'");
      } else if (key == "reference") {
        if (val == "none") cfg.reference = ReferenceKind::none;
        else if (val == "exact") cfg.reference = ReferenceKind::exact;
        else if (val == "deterministic") cfg.reference = ReferenceKind::deterministic;
        else throw ConfigError("config: unknown reference kind '" + val + "'");
      } else if (key == "snapshot_times") cfg.snapshot_times = parse_doubles(val, key);
      else if (key == "out") cfg.out_dir = val;
      else if (key == "override_regime") cfg.override_regime = parse_bool(val, key);
      else if (key == "check_invariants") cfg.check_invariants = parse_bool(val, key);
      else throw unknown();
    } else if (section == "flux") {
      if (key == "kind") {
        if (val != "burgers" && val != "polynomial")
          throw ConfigError("config: unknown flux kind '" + val + "'");
        cfg.flux_kind = val;
      } else if (key == "coeffs") cfg.flux_coeffs = parse_doubles(val, key);
      else throw unknown();
    } else if (section == "init") {
      if (key == "offset") cfg.init_offset = parse_double(val, key);
      else if (key == "atom") {
        auto xs = parse_doubles(val, key);
        if (xs.size() != 2) throw ConfigError("config: atom expects 'x mass'");
        cfg.init_atoms.emplace_back(xs[0], xs[1]);
      } else if (key == "piece") {
        auto xs = parse_doubles(val, key);
        if (xs.size() != 3) throw ConfigError("config: piece expects 'left right density'");
        cfg.init_pieces.push_back({xs[0], xs[1], xs[2]});
      } else throw unknown();
    } else if (section == "sweep") {
      if (key == "n_list") cfg.n_list = parse_doubles(val, key);
      else if (key == "c_h") cfg.c_h = parse_double(val, key);
      else if (key == "c_eps") cfg.c_eps = parse_double(val, key);
      else if (key == "h_list") cfg.h_list = parse_doubles(val, key);
      else if (key == "eps_over_h") cfg.eps_over_h = parse_double(val, key);
      else if (key == "sigma_list") cfg.sigma_list = parse_doubles(val, key);
      else if (key == "ref_m") cfg.ref_m = static_cast<int>(parse_double(val, key));
      else if (key == "ref_xmin") cfg.ref_xmin = parse_double(val, key);
      else if (key == "ref_xmax") cfg.ref_xmax = parse_double(val, key);
      else throw unknown();
    }
  }
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

}  // namespace fracl

#include "myco/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "myco/grid.hpp"

namespace myco {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': cannot parse number '" + v + "'");
  }
}

long parse_long(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    long x = std::stol(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': cannot parse integer '" + v + "'");
  }
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    std::uint64_t x = std::stoull(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': cannot parse integer '" + v + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "on" || v == "1") return true;
  if (v == "false" || v == "off" || v == "0") return false;
  throw ConfigError("config key '" + key + "': expected true/false, got '" + v + "'");
}

std::vector<double> parse_double_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  std::istringstream iss(v);
  std::string tok;
  while (iss >> tok) out.push_back(parse_double(key, tok));
  return out;
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

SimConfig parse_config_text(const std::string& text) {
  SimConfig cfg;
  using Setter = std::function<void(SimConfig&, const std::string&, const std::string&)>;
  static const std::map<std::string, Setter> setters = {
      {"d", [](SimConfig& c, const std::string& k, const std::string& v) { c.d = static_cast<int>(parse_long(k, v)); }},
      {"lambda", [](SimConfig& c, const std::string& k, const std::string& v) { c.lambda = parse_double(k, v); }},
      {"sigma", [](SimConfig& c, const std::string& k, const std::string& v) { c.sigma = parse_double(k, v); }},
      {"sigma_c", [](SimConfig& c, const std::string& k, const std::string& v) { c.sigma_c = parse_double(k, v); }},
      {"T", [](SimConfig& c, const std::string& k, const std::string& v) { c.T = parse_double(k, v); }},
      {"dt", [](SimConfig& c, const std::string& k, const std::string& v) { c.dt = parse_double(k, v); }},
      {"N", [](SimConfig& c, const std::string& k, const std::string& v) { c.N = parse_long(k, v); }},
      {"L", [](SimConfig& c, const std::string& k, const std::string& v) { c.L = parse_double(k, v); }},
      {"beta_bar", [](SimConfig& c, const std::string& k, const std::string& v) { c.beta_bar = parse_double(k, v); }},
      {"master_seed", [](SimConfig& c, const std::string& k, const std::string& v) { c.master_seed = parse_u64(k, v); }},
      {"hard_cap_factor", [](SimConfig& c, const std::string& k, const std::string& v) { c.hard_cap_factor = parse_double(k, v); }},
      {"nutrient.nx", [](SimConfig& c, const std::string& k, const std::string& v) { c.nutrient_nx = static_cast<int>(parse_long(k, v)); }},
      {"meanfield.nx", [](SimConfig& c, const std::string& k, const std::string& v) { c.mf_nx = static_cast<int>(parse_long(k, v)); }},
      {"meanfield.nv", [](SimConfig& c, const std::string& k, const std::string& v) { c.mf_nv = static_cast<int>(parse_long(k, v)); }},
      {"meanfield.vmax", [](SimConfig& c, const std::string& k, const std::string& v) { c.mf_vmax = parse_double(k, v); }},
      {"meanfield.kmax", [](SimConfig& c, const std::string& k, const std::string& v) { c.mf_kmax = parse_double(k, v); }},
      {"meanfield.nxi", [](SimConfig& c, const std::string& k, const std::string& v) { c.mf_nxi = static_cast<int>(parse_long(k, v)); }},
      {"meanfield.xi_max", [](SimConfig& c, const std::string& k, const std::string& v) { c.mf_ximax = parse_double(k, v); }},
      {"meanfield.picard_window", [](SimConfig& c, const std::string& k, const std::string& v) { c.mf_picard_window = static_cast<int>(parse_long(k, v)); }},
      {"kernel.K.r", [](SimConfig& c, const std::string& k, const std::string& v) { c.K_r = parse_double(k, v); }},
      {"kernel.KC.a", [](SimConfig& c, const std::string& k, const std::string& v) { c.KC_a = parse_double(k, v); }},
      {"kernel.KC.c0", [](SimConfig& c, const std::string& k, const std::string& v) { c.KC_c0 = parse_double(k, v); }},
      {"kernel.G.sigma", [](SimConfig& c, const std::string& k, const std::string& v) { c.G_sigma = parse_double(k, v); }},
      {"init.u0.kind", [](SimConfig& c, const std::string&, const std::string& v) { c.u0_kind = v; }},
      {"init.u0.width", [](SimConfig& c, const std::string& k, const std::string& v) { c.u0_width = parse_double(k, v); }},
      {"init.C0.kind", [](SimConfig& c, const std::string&, const std::string& v) { c.C0_kind = v; }},
      {"init.C0.base", [](SimConfig& c, const std::string& k, const std::string& v) { c.C0_base = parse_double(k, v); }},
      {"init.C0.amp", [](SimConfig& c, const std::string& k, const std::string& v) { c.C0_amp = parse_double(k, v); }},
      {"init.C0.width", [](SimConfig& c, const std::string& k, const std::string& v) { c.C0_width = parse_double(k, v); }},
      {"proc.tip_branching", [](SimConfig& c, const std::string& k, const std::string& v) { c.tip_branching = parse_bool(k, v); }},
      {"proc.network_branching", [](SimConfig& c, const std::string& k, const std::string& v) { c.network_branching = parse_bool(k, v); }},
      {"proc.coalescence", [](SimConfig& c, const std::string& k, const std::string& v) { c.coalescence = parse_bool(k, v); }},
      {"deposit.mode", [](SimConfig& c, const std::string&, const std::string& v) { c.deposit_mode = v; }},
      {"diffusion.scheme", [](SimConfig& c, const std::string&, const std::string& v) { c.diffusion_scheme = v; }},
      {"skeleton.betas", [](SimConfig& c, const std::string& k, const std::string& v) { c.skeleton_betas = parse_double_list(k, v); }},
      {"output.stride", [](SimConfig& c, const std::string& k, const std::string& v) { c.output_stride = parse_long(k, v); }},
  };

  std::istringstream iss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(iss, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    auto it = setters.find(key);
    if (it == setters.end()) {
      throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    it->second(cfg, key, val);
  }
  return cfg;
}

SimConfig load_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config_text(ss.str());
}

std::string canonical_config_text(const SimConfig& c) {
  std::ostringstream o;
  o << "d = " << c.d << "\n";
  o << "lambda = " << fmt(c.lambda) << "\n";
  o << "sigma = " << fmt(c.sigma) << "\n";
  o << "sigma_c = " << fmt(c.sigma_c) << "\n";
  o << "T = " << fmt(c.T) << "\n";
  o << "dt = " << fmt(c.dt) << "\n";
  o << "N = " << c.N << "\n";
  o << "L = " << fmt(c.L) << "\n";
  o << "beta_bar = " << fmt(c.beta_bar) << "\n";
  o << "master_seed = " << c.master_seed << "\n";
  o << "hard_cap_factor = " << fmt(c.hard_cap_factor) << "\n";
  o << "nutrient.nx = " << c.nutrient_nx << "\n";
  o << "meanfield.nx = " << c.mf_nx << "\n";
  o << "meanfield.nv = " << c.mf_nv << "\n";
  o << "meanfield.vmax = " << fmt(c.mf_vmax) << "\n";
  o << "meanfield.kmax = " << fmt(c.mf_kmax) << "\n";
  o << "meanfield.nxi = " << c.mf_nxi << "\n";
  o << "meanfield.xi_max = " << fmt(c.mf_ximax) << "\n";
  o << "meanfield.picard_window = " << c.mf_picard_window << "\n";
  o << "kernel.K.r = " << fmt(c.K_r) << "\n";
  o << "kernel.KC.a = " << fmt(c.KC_a) << "\n";
  o << "kernel.KC.c0 = " << fmt(c.KC_c0) << "\n";
  o << "kernel.G.sigma = " << fmt(c.G_sigma) << "\n";
  o << "init.u0.kind = " << c.u0_kind << "\n";
  o << "init.u0.width = " << fmt(c.u0_width) << "\n";
  o << "init.C0.kind = " << c.C0_kind << "\n";
  o << "init.C0.base = " << fmt(c.C0_base) << "\n";
  o << "init.C0.amp = " << fmt(c.C0_amp) << "\n";
  o << "init.C0.width = " << fmt(c.C0_width) << "\n";
  o << "proc.tip_branching = " << (c.tip_branching ? "true" : "false") << "\n";
  o << "proc.network_branching = " << (c.network_branching ? "true" : "false") << "\n";
  o << "proc.coalescence = " << (c.coalescence ? "true" : "false") << "\n";
  o << "deposit.mode = " << c.deposit_mode << "\n";
  o << "diffusion.scheme = " << c.diffusion_scheme << "\n";
  o << "skeleton.betas =";
  for (double b : c.skeleton_betas) o << " " << fmt(b);
  o << "\n";
  o << "output.stride = " << c.output_stride << "\n";
  return o.str();
}

std::uint64_t config_hash(const SimConfig& cfg) {
  std::string t = canonical_config_text(cfg);
  return fnv1a(t.data(), t.size());
}

ValidatedConfig validate_config(const SimConfig& cfg) {
  auto fail = [](const std::string& msg) { throw ConfigError(msg); };

  if (cfg.d != 1 && cfg.d != 2) fail("d must be 1 or 2");
  if (!(cfg.lambda > 0.0)) fail("lambda must be positive");
  if (!(cfg.sigma > 0.0)) fail("sigma must be positive");
  if (!(cfg.sigma_c > 0.0)) fail("sigma_c must be positive");
  if (!(cfg.dt > 0.0)) fail("dt must be positive");
  if (!(cfg.T >= cfg.dt)) fail("T must be at least dt");
  if (cfg.N < 1) fail("N must be at least 1");
  if (!(cfg.L > 0.0)) fail("L must be positive");
  if (!(cfg.beta_bar > 0.0)) fail("beta_bar must be positive");
  if (!(cfg.hard_cap_factor >= 1.0)) fail("hard_cap_factor must be at least 1");
  if (cfg.nutrient_nx < 4) fail("nutrient.nx must be at least 4");
  if (!(cfg.K_r > 0.0)) fail("kernel.K.r must be positive");
  if (!(cfg.KC_a > 0.0)) fail("kernel.KC.a must be positive");
  if (!(cfg.KC_c0 > 0.0)) fail("kernel.KC.c0 must be positive");
  if (cfg.u0_kind != "gaussian" && cfg.u0_kind != "uniform")
    fail("init.u0.kind must be gaussian or uniform");
  if (!(cfg.u0_width > 0.0)) fail("init.u0.width must be positive");
  if (cfg.C0_kind != "constant" && cfg.C0_kind != "cosine" && cfg.C0_kind != "gaussian")
    fail("init.C0.kind must be constant, cosine or gaussian");
  if (cfg.C0_base < 0.0) fail("init.C0.base must be non-negative");
  if (!(cfg.C0_width > 0.0)) fail("init.C0.width must be positive");
  if (cfg.deposit_mode != "cic" && cfg.deposit_mode != "nearest")
    fail("deposit.mode must be cic or nearest");
  if (cfg.diffusion_scheme != "explicit" && cfg.diffusion_scheme != "implicit")
    fail("diffusion.scheme must be explicit or implicit");
  for (double b : cfg.skeleton_betas) {
    if (!(b > 0.0) || b > cfg.beta_bar)
      fail("skeleton.betas entries must lie in (0, beta_bar]");
  }
  if (cfg.output_stride < 1) fail("output.stride must be at least 1");
  if (cfg.mf_picard_window < 1) fail("meanfield.picard_window must be at least 1");

  DerivedConfig dd;
  dd.n_steps = static_cast<long>(std::llround(cfg.T / cfg.dt));
  if (dd.n_steps < 1) dd.n_steps = 1;
  dd.h_nutrient = 2.0 * cfg.L / cfg.nutrient_nx;
  dd.nutrient_stability_ratio =
      cfg.sigma_c * cfg.sigma_c * cfg.dt / (2.0 * dd.h_nutrient * dd.h_nutrient);
  dd.nutrient_stability_limit = 1.0 / (2.0 * cfg.d);
  if (cfg.diffusion_scheme == "explicit" &&
      dd.nutrient_stability_ratio > dd.nutrient_stability_limit) {
    std::ostringstream m;
    m << "dt violates the explicit diffusion stability bound: sigma_c^2 dt / (2 h^2) = "
      << dd.nutrient_stability_ratio << " > 1/(2 d) = " << dd.nutrient_stability_limit;
    fail(m.str());
  }

  dd.g_sigma = cfg.G_sigma >= 0.0 ? cfg.G_sigma : cfg.sigma / std::sqrt(2.0 * cfg.lambda);
  if (!(dd.g_sigma > 0.0)) fail("kernel.G.sigma must be positive");

  if (cfg.d == 1) {
    if (cfg.mf_nx < 8) fail("meanfield.nx must be at least 8");
    if (cfg.mf_nv < 8) fail("meanfield.nv must be at least 8");
    if (cfg.mf_nxi < 9) fail("meanfield.nxi must be at least 9");
    if (!(cfg.mf_vmax > 0.0)) fail("meanfield.vmax must be positive");
    if (!(cfg.mf_kmax > 0.0)) fail("meanfield.kmax must be positive");
    if (!(cfg.mf_ximax > 0.0)) fail("meanfield.xi_max must be positive");
    dd.mf_hx = 2.0 * cfg.L / cfg.mf_nx;
    dd.mf_hv = 2.0 * cfg.mf_vmax / cfg.mf_nv;
    dd.mf_jmax = static_cast<int>(std::floor(cfg.mf_kmax * cfg.L / M_PI));
    if (dd.mf_jmax < 1) fail("meanfield.kmax too small: no lattice modes below cutoff");
    dd.mf_cfl = cfg.mf_vmax * cfg.dt / dd.mf_hx;
    if (dd.mf_cfl > 1.0)
      fail("dt violates the transport CFL bound: vmax dt > mean-field cell size");
    dd.mf_vdiff_ratio = 0.5 * cfg.sigma * cfg.sigma * cfg.dt / (dd.mf_hv * dd.mf_hv);
    if (dd.mf_vdiff_ratio > 0.5)
      fail("dt violates the velocity diffusion stability bound: (sigma^2/2) dt / hv^2 > 1/2");
  }

  // Per-axis Gaussian tail of G beyond the velocity cutoff.
  dd.g_tail_mass = std::erfc(cfg.mf_vmax / (dd.g_sigma * std::sqrt(2.0)));
  dd.L_heuristic = 4.0 * (cfg.mf_vmax * cfg.T + cfg.sigma * std::sqrt(cfg.T));
  dd.L_below_heuristic = cfg.L < dd.L_heuristic;

  return ValidatedConfig{cfg, dd};
}

}  // namespace myco

#ifndef MYCO_CONFIG_HPP
#define MYCO_CONFIG_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace myco {

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Full model + numerics configuration. Defaults give the desk-scale d=2
// simulation; the mean-field blocks are consumed only when d=1.
struct SimConfig {
  int d = 2;
  double lambda = 1.0;       // friction
  double sigma = 1.0;        // velocity noise amplitude
  double sigma_c = 1.0;      // nutrient diffusion amplitude
  double T = 1.0;            // horizon
  double dt = 1e-3;
  long N = 100;              // initial particle count
  double L = 8.0;            // domain half width, box [-L, L)^d
  double beta_bar = 1.0;     // moment exponent bound
  std::uint64_t master_seed = 42;
  double hard_cap_factor = 100.0;  // abort when alive > factor * N

  int nutrient_nx = 128;  // nutrient grid cells per axis

  // Mean-field solver grids (d=1 only).
  int mf_nx = 128;
  int mf_nv = 128;
  double mf_vmax = 4.5;
  double mf_kmax = 12.0;   // k lattice cutoff; lattice is pi*j/L, |k_j| <= kmax
  int mf_nxi = 161;        // xi grid points (odd, symmetric)
  double mf_ximax = 10.0;
  int mf_picard_window = 10;  // dt substeps per Picard window

  // Kernel and initial-data parameters.
  double K_r = 0.5;        // mollifier K support radius
  double KC_a = 2.0;       // absorption kernel decay rate
  double KC_c0 = 1.0;      // absorption kernel amplitude
  double G_sigma = -1.0;   // velocity law std dev; <0 means sigma/sqrt(2 lambda)
  std::string u0_kind = "gaussian";  // gaussian | uniform (x marginal)
  double u0_width = 1.0;             // gaussian std dev or uniform half width
  std::string C0_kind = "constant";  // constant | cosine | gaussian
  double C0_base = 1.0;
  double C0_amp = 0.0;
  double C0_width = 1.0;

  bool tip_branching = true;
  bool network_branching = true;
  bool coalescence = true;
  std::string deposit_mode = "cic";       // cic | nearest
  std::string diffusion_scheme = "explicit";  // explicit | implicit
  std::vector<double> skeleton_betas = {1.0};
  long output_stride = 50;
};

// Quantities derived during validation.
struct DerivedConfig {
  long n_steps = 0;
  double h_nutrient = 0.0;
  double nutrient_stability_ratio = 0.0;  // per-axis sigma_c^2 dt / (2 h^2)
  double nutrient_stability_limit = 0.0;  // 1 / (2 d)
  double g_sigma = 0.0;                   // resolved velocity-law std dev
  double mf_hx = 0.0, mf_hv = 0.0;
  int mf_jmax = 0;       // k lattice: k_j = pi j / L, |j| <= jmax
  double mf_cfl = 0.0;   // vmax dt / hx
  double mf_vdiff_ratio = 0.0;  // (sigma^2/2) dt / hv^2
  double g_tail_mass = 0.0;     // per-axis G mass beyond vmax
  double L_heuristic = 0.0;     // 4 (vmax T + sigma sqrt(T))
  bool L_below_heuristic = false;
};

struct ValidatedConfig {
  SimConfig cfg;
  DerivedConfig derived;
};

// Checks every invariant; throws ConfigError naming the first violation.
ValidatedConfig validate_config(const SimConfig& cfg);

// Flat key = value text, one key per line, '#' comments; unknown keys are
// errors.
SimConfig parse_config_text(const std::string& text);
SimConfig load_config_file(const std::string& path);
std::string canonical_config_text(const SimConfig& cfg);
std::uint64_t config_hash(const SimConfig& cfg);

}  // namespace myco

#endif

#include "cli_commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "resatom/resatom.h"

namespace cli {

namespace {

using nlohmann::json;

// 15 significant digits everywhere a number is serialized.
std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

void capi_check(int status) {
  if (status != RESATOM_OK) {
    throw config_error(std::string("config error: ") + resatom_last_error_message());
  }
}

double finite_or_throw(double v, const std::string& what) {
  if (!std::isfinite(v)) {
    throw numeric_error("numeric error: non-finite " + what);
  }
  return v;
}

// All output files are written in one shot with LF terminators.
void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw config_error("config error: cannot open output file: " + path);
  out << text;
  if (!out) throw config_error("config error: failed writing output file: " + path);
}

std::string csv_row(const std::vector<double>& values) {
  std::string row;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) row += ',';
    row += fmt(values[i]);
  }
  row += '\n';
  return row;
}

resatom_vec3 to_vec3(const double v[3]) { return {v[0], v[1], v[2]}; }

resatom_vec3 param_vec3(const json& obj, const std::string& path, const std::string& key,
                        double fx, double fy, double fz) {
  double fallback[3] = {fx, fy, fz};
  double out[3];
  get_vec3(obj, path, key, fallback, out);
  return to_vec3(out);
}

std::vector<double> make_grid(const GridSpec& g) {
  std::vector<double> rs(static_cast<std::size_t>(g.n_points));
  const auto n = static_cast<double>(g.n_points - 1);
  for (long long i = 0; i < g.n_points; ++i) {
    const double f = static_cast<double>(i) / n;
    rs[static_cast<std::size_t>(i)] =
        g.log_spacing ? g.r_min * std::pow(g.r_max / g.r_min, f)
                      : g.r_min + (g.r_max - g.r_min) * f;
  }
  rs.front() = g.r_min;
  rs.back() = g.r_max;
  return rs;
}

std::string sweep_comment_header(const RunConfig& cfg) {
  std::ostringstream os;
  os << "# resatom sweep model=" << cfg.model << " version=" << resatom_version() << "\n";
  os << "# params: " << cfg.params.dump() << "\n";
  os << "# grid: r_min=" << fmt(cfg.grid.r_min) << " r_max=" << fmt(cfg.grid.r_max)
     << " n_points=" << cfg.grid.n_points
     << " spacing=" << (cfg.grid.log_spacing ? "log" : "linear") << "\n";
  os << "# seed: none\n";
  return os.str();
}

resatom_two_level_atom parse_atom(const json& params) {
  const json atom_obj = params.contains("atom") ? params.at("atom") : json::object();
  resatom_two_level_atom atom;
  atom.mu = get_number(atom_obj, "params.atom", "mu", 1.0);
  atom.gamma = get_number(atom_obj, "params.atom", "gamma", 1.0);
  atom.omega_a = get_number(atom_obj, "params.atom", "omega_a", 0.0);
  atom.rho1 = get_number(atom_obj, "params.atom", "rho1", 1.0);
  atom.rho2 = get_number(atom_obj, "params.atom", "rho2", 0.0);
  atom.xi = get_number(atom_obj, "params.atom", "xi", 0.0);
  return atom;
}

resatom_drive_field parse_field(const json& params) {
  const json field_obj = params.contains("field") ? params.at("field") : json::object();
  resatom_drive_field field;
  field.amplitude = get_number(field_obj, "params.field", "amplitude", 0.0);
  field.polarization = param_vec3(field_obj, "params.field", "polarization", 0.0, 0.0, 1.0);
  field.omega0 = get_number(field_obj, "params.field", "omega0", 0.0);
  field.kvec = param_vec3(field_obj, "params.field", "kvec", 0.0, 0.0, 0.0);
  field.intensity = get_number(field_obj, "params.field", "intensity", 0.0);
  return field;
}

std::vector<resatom_complex> parse_initial(const json& params, int n) {
  std::vector<resatom_complex> init(static_cast<std::size_t>(n));
  init[0] = {1.0, 0.0};
  for (int i = 1; i < n; ++i) init[static_cast<std::size_t>(i)] = {0.0, 0.0};
  if (!params.contains("initial")) return init;
  const json& arr = params.at("initial");
  if (!arr.is_array() || static_cast<int>(arr.size()) != n) {
    throw config_error("config error: params.initial must be an array of " + std::to_string(n) +
                       " [re, im] pairs");
  }
  for (int i = 0; i < n; ++i) {
    const json& pair = arr[static_cast<std::size_t>(i)];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw config_error("config error: params.initial[" + std::to_string(i) +
                         "] must be an [re, im] pair");
    }
    init[static_cast<std::size_t>(i)] = {pair[0].get<double>(), pair[1].get<double>()};
  }
  return init;
}

std::string yesno(int flag) { return flag ? "yes" : "no"; }

}  // namespace

int cmd_sweep(const RunConfig& cfg) {
  const json& p = cfg.params;
  const std::vector<double> grid = make_grid(cfg.grid);

  std::ostringstream body;
  body << sweep_comment_header(cfg);

  const double k = get_number(p, "params", "k", 1.0);
  const resatom_vec3 k_dir = param_vec3(p, "params", "k_dir", 0.0, 0.0, 1.0);
  const resatom_vec3 r_dir = param_vec3(p, "params", "r_dir", 0.0, 0.0, 1.0);

  if (cfg.model == "pair_raw") {
    const resatom_vec3 d1 = param_vec3(p, "params", "d1", 0.0, 0.0, 1.0);
    const resatom_vec3 d2 = param_vec3(p, "params", "d2", 0.0, 0.0, 1.0);
    body << "r,U_re,U_im\n";
    for (const double r : grid) {
      resatom_pair_geometry geom;
      const resatom_vec3 rvec = {r_dir.x * r, r_dir.y * r, r_dir.z * r};
      capi_check(resatom_make_pair_geometry(&rvec, k, &k_dir, &geom));
      resatom_complex u;
      capi_check(resatom_pair_energy(&d1, &d2, &geom, &u));
      body << csv_row({r, finite_or_throw(u.re, "pair energy"), finite_or_throw(u.im, "pair energy")});
    }
  } else if (cfg.model == "pair_averaged") {
    const double dmag = get_number(p, "params", "dmag", 1.0);
    body << "r,U_re,U_im\n";
    for (const double r : grid) {
      resatom_pair_geometry geom;
      const resatom_vec3 rvec = {r_dir.x * r, r_dir.y * r, r_dir.z * r};
      capi_check(resatom_make_pair_geometry(&rvec, k, &k_dir, &geom));
      double u;
      capi_check(resatom_phased_average(dmag, &geom, &u));
      body << csv_row({r, finite_or_throw(u, "phased average"), 0.0});
    }
  } else {  // driven
    resatom_driven_pair_params dp;
    dp.mu = get_number(p, "params", "mu", 1.0);
    dp.intensity = get_number(p, "params", "intensity", 1.0);
    dp.beta_pop = get_number(p, "params", "beta_pop", -1.0);
    dp.gamma1 = get_number(p, "params", "gamma1", 1.0);
    dp.gamma2 = get_number(p, "params", "gamma2", 1.0);
    dp.delta1 = get_number(p, "params", "delta1", 0.0);
    dp.delta2 = get_number(p, "params", "delta2", 0.0);
    body << "r,U_re,U_im,a,b,exponent_arg\n";
    for (const double r : grid) {
      resatom_pair_geometry geom;
      const resatom_vec3 rvec = {r_dir.x * r, r_dir.y * r, r_dir.z * r};
      capi_check(resatom_make_pair_geometry(&rvec, k, &k_dir, &geom));
      resatom_driven_evaluation ev;
      capi_check(resatom_driven_potential_eval(&dp, &geom, &ev));
      body << csv_row({r, finite_or_throw(ev.value, "driven potential"), 0.0, ev.a, ev.b,
                       ev.exponent_arg});
    }
  }

  write_output(cfg.output, body.str());
  return EXIT_OK;
}

int cmd_dynamics(const RunConfig& cfg) {
  const json& p = cfg.params;
  const double hbar = get_number(p, "params", "hbar", 1.0);
  if (!(hbar > 0.0)) throw config_error("config error: params.hbar must be > 0");

  resatom_trajectory* traj = nullptr;
  if (cfg.model == "bloch2") {
    const resatom_two_level_atom atom = parse_atom(p);
    const resatom_drive_field field = parse_field(p);
    resatom_complex h[4];
    capi_check(resatom_rwa_hamiltonian(&atom, &field, hbar, h));
    const std::vector<resatom_complex> init = parse_initial(p, 2);
    capi_check(resatom_propagate2(h, init.data(), cfg.time.duration, cfg.time.dt, hbar, &traj));
  } else {  // dirac4
    resatom_diraclike_params dp;
    dp.p = param_vec3(p, "params", "p", 0.0, 0.0, 0.0);
    dp.omega = get_number(p, "params", "omega", 0.0);
    dp.mu = get_number(p, "params", "mu", 0.0);
    dp.efield = param_vec3(p, "params", "efield", 0.0, 0.0, 0.0);
    dp.c = get_number(p, "params", "c", 1.0);
    dp.hbar = hbar;
    resatom_complex h[16];
    capi_check(resatom_diraclike_hamiltonian(&dp, h));
    const std::vector<resatom_complex> init = parse_initial(p, 4);
    capi_check(resatom_propagate4(h, init.data(), cfg.time.duration, cfg.time.dt, hbar, &traj));
  }
  std::unique_ptr<resatom_trajectory, decltype(&resatom_trajectory_free)> guard(
      traj, &resatom_trajectory_free);

  const int ncomp = resatom_trajectory_components(traj);
  const long long len = resatom_trajectory_length(traj);

  std::ostringstream body;
  body << "# resatom dynamics model=" << cfg.model << " version=" << resatom_version() << "\n";
  body << "# params: " << cfg.params.dump() << "\n";
  body << "# time: duration=" << fmt(cfg.time.duration) << " dt=" << fmt(cfg.time.dt) << "\n";
  body << "# seed: none\n";
  body << "t";
  for (int i = 1; i <= ncomp; ++i) body << ",p" << i;
  body << ",norm\n";

  std::vector<double> pops(static_cast<std::size_t>(ncomp));
  for (long long i = 0; i < len; ++i) {
    double t = 0.0, norm = 0.0;
    capi_check(resatom_trajectory_row(traj, i, &t, pops.data(), &norm));
    std::vector<double> row;
    row.reserve(static_cast<std::size_t>(ncomp) + 2);
    row.push_back(t);
    for (const double pop : pops) row.push_back(finite_or_throw(pop, "population"));
    row.push_back(finite_or_throw(norm, "norm"));
    if (std::abs(norm - 1.0) > 1e-10) {
      throw numeric_error("numeric error: trajectory norm drifted beyond 1e-10");
    }
    body << csv_row(row);
  }

  write_output(cfg.output, body.str());
  return EXIT_OK;
}

int cmd_audit(const RunConfig& cfg) {
  const json& p = cfg.params;
  const double dmag = get_number(p, "params", "dmag", 1.0);
  const double r = get_number(p, "params", "r", 1.0);
  const double k = get_number(p, "params", "k", 1.0);
  const long long n_agreement = get_integer(p, "params", "n_agreement", 10000);

  resatom_audit_report rep;
  capi_check(resatom_self_audit(dmag, r, k, cfg.mc.n_samples, cfg.mc.seed, n_agreement, &rep));

  std::ostringstream os;
  os << "# resatom audit version=" << resatom_version() << "\n";
  os << "[1] parity: alpha polar under Dirac beta (x,y,z): " << yesno(rep.parity.alpha_x_is_polar)
     << "," << yesno(rep.parity.alpha_y_is_polar) << "," << yesno(rep.parity.alpha_z_is_polar)
     << "  max residual " << fmt(rep.parity.max_residual) << "  "
     << (rep.parity_pass ? "PASS" : "FAIL") << "\n";
  os << "[2] parity: sigma compensator exists: " << yesno(rep.parity.sigma_has_compensator)
     << " (expected no)  closest flip residual " << fmt(rep.parity.sigma_best_residual) << "\n";
  os << "[3] mc orientation average vs closed form: d=" << fmt(dmag) << " r=" << fmt(r)
     << " k=" << fmt(k) << " n=" << rep.mc.n_samples << " seed=" << rep.mc.seed
     << " algorithm=" << rep.mc.algorithm << "\n";
  os << "    mean (" << fmt(rep.mc.mean.re) << "," << fmt(rep.mc.mean.im) << ") expected ("
     << fmt(rep.mc_expected.re) << "," << fmt(rep.mc_expected.im) << ")\n";
  os << "    deviation (" << fmt(rep.mc_dev_sigmas_re) << "," << fmt(rep.mc_dev_sigmas_im)
     << ") sigma, limit " << fmt(rep.mc_sigma_limit) << "  " << (rep.mc_pass ? "PASS" : "FAIL")
     << "\n";
  os << "[4] driven potential stable vs literal: n=" << rep.agreement_points
     << " max rel diff " << fmt(rep.agreement_max_rel_diff) << ", limit "
     << fmt(rep.agreement_tol) << "  " << (rep.agreement_pass ? "PASS" : "FAIL") << "\n";
  os << "audit: " << (rep.pass ? "PASS" : "FAIL") << "\n";

  write_output(cfg.output, os.str());
  return rep.pass ? EXIT_OK : EXIT_AUDIT;
}

int cmd_regime(const RunConfig& cfg) {
  const json& p = cfg.params;
  const resatom_two_level_atom atom = parse_atom(p);
  const resatom_drive_field field = parse_field(p);
  const double hbar = get_number(p, "params", "hbar", 1.0);
  const double k_medium = get_number(p, "params", "k_medium", 1.0);
  const double lambda = get_number(p, "params", "lambda", 1.0);
  const double r = get_number(p, "params", "r", 1.0);

  resatom_regime_report rep;
  capi_check(resatom_assess_regime(&atom, &field, hbar, k_medium, lambda, r, &rep));

  std::ostringstream os;
  os << "# resatom regime version=" << resatom_version() << "\n";
  os << "weak field: ratio mu*E0/(hbar*Gamma) = " << fmt(rep.weak_field.ratio)
     << "  within weak-field regime: " << yesno(rep.weak_field.within_weak_field) << "\n";
  os << "photon exchange: k_medium = " << fmt(k_medium) << ", lambda = " << fmt(lambda)
     << ", mean exchange range 1/k = " << fmt(rep.exchange.mean_exchange_range)
     << "  feasible (k_medium*lambda > 1): " << yesno(rep.exchange.feasible) << "\n";
  os << "    threshold for this wavelength: k > " << fmt(rep.exchange.k_required)
     << "; stated optical-region reference: k > " << fmt(rep.exchange.optical_threshold_per_cm)
     << " cm^-1\n";
  os << "attenuation: I(r) = I0*exp(-k_medium*r) = " << fmt(rep.intensity_at_r)
     << " at r = " << fmt(r) << " (I0 = " << fmt(field.intensity) << ")\n";

  write_output(cfg.output, os.str());
  return EXIT_OK;
}

}  // namespace cli

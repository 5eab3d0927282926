#include "resatom/resatom.h"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <memory>
#include <new>
#include <stdexcept>
#include <vector>

#include "resatom/audit.hpp"
#include "resatom/diraclike.hpp"
#include "resatom/dipole.hpp"
#include "resatom/driven.hpp"
#include "resatom/errors.hpp"
#include "resatom/linalg.hpp"
#include "resatom/twolevel.hpp"
#include "resatom/version.hpp"

namespace {

thread_local char g_last_error[512] = {0};

void set_error(const char* what) {
  std::snprintf(g_last_error, sizeof(g_last_error), "%s", what);
}

// Runs fn, translating the library's exception taxonomy into status codes.
template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return RESATOM_OK;
  } catch (const resatom::pole_error& e) {
    set_error(e.what());
    return RESATOM_ERR_POLE;
  } catch (const resatom::singularity_error& e) {
    set_error(e.what());
    return RESATOM_ERR_SINGULAR;
  } catch (const std::domain_error& e) {
    set_error(e.what());
    return RESATOM_ERR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return RESATOM_ERR_INVALID;
  } catch (const std::exception& e) {
    set_error(e.what());
    return RESATOM_ERR_INTERNAL;
  }
}

int null_error(const char* name) {
  std::snprintf(g_last_error, sizeof(g_last_error), "%s must not be NULL", name);
  return RESATOM_ERR_NULL;
}

// --- marshalling -----------------------------------------------------------

resatom::Vec3 to_vec3(const resatom_vec3& v) { return {v.x, v.y, v.z}; }

resatom::cplx to_cplx(const resatom_complex& c) { return {c.re, c.im}; }
resatom_complex from_cplx(const resatom::cplx& c) { return {c.real(), c.imag()}; }

resatom::CVec3 to_cvec3(const resatom_cvec3& v) {
  return {to_cplx(v.x), to_cplx(v.y), to_cplx(v.z)};
}
resatom_cvec3 from_cvec3(const resatom::CVec3& v) {
  return {from_cplx(v.x), from_cplx(v.y), from_cplx(v.z)};
}

resatom::ComplexMatrix to_matrix(int n, const resatom_complex* m) {
  resatom::ComplexMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out(i, j) = to_cplx(m[i * n + j]);
  }
  return out;
}

void write_matrix(const resatom::ComplexMatrix& m, resatom_complex* out) {
  const int n = m.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out[i * n + j] = from_cplx(m(i, j));
  }
}

resatom::Axis to_axis(int axis) {
  switch (axis) {
    case RESATOM_AXIS_X: return resatom::Axis::X;
    case RESATOM_AXIS_Y: return resatom::Axis::Y;
    case RESATOM_AXIS_Z: return resatom::Axis::Z;
    default: throw std::invalid_argument("axis must be 0 (x), 1 (y) or 2 (z)");
  }
}

resatom::TwoLevelAtom to_atom(const resatom_two_level_atom& a) {
  return {a.mu, a.gamma, a.omega_a, a.rho1, a.rho2, a.xi};
}

resatom::DriveField to_field(const resatom_drive_field& f) {
  return {f.amplitude, to_vec3(f.polarization), f.omega0, to_vec3(f.kvec), f.intensity};
}

resatom::PairGeometry to_geometry(const resatom_pair_geometry& g) {
  return {to_vec3(g.rvec), g.k, to_vec3(g.kvec)};
}

resatom::DiracLikeParams to_diraclike(const resatom_diraclike_params& p) {
  return {to_vec3(p.p), p.omega, p.mu, to_vec3(p.efield), p.c, p.hbar};
}

resatom::DrivenPairParams to_driven(const resatom_driven_pair_params& p) {
  return {p.mu, p.intensity, p.beta_pop, p.gamma1, p.gamma2, p.delta1, p.delta2};
}

resatom_validity_report from_validity(const resatom::ValidityReport& r) {
  return {r.ratio, r.within_weak_field ? 1 : 0};
}

resatom_parity_report from_parity(const resatom::ParityAuditReport& r) {
  resatom_parity_report out;
  out.alpha_x_is_polar = r.alpha_is_polar[0] ? 1 : 0;
  out.alpha_y_is_polar = r.alpha_is_polar[1] ? 1 : 0;
  out.alpha_z_is_polar = r.alpha_is_polar[2] ? 1 : 0;
  out.sigma_has_compensator = r.sigma_has_compensator ? 1 : 0;
  out.max_residual = r.max_residual;
  out.sigma_best_residual = r.sigma_best_residual;
  return out;
}

resatom_average_estimate from_estimate(const resatom::AverageEstimate& e) {
  resatom_average_estimate out{};
  out.mean = from_cplx(e.mean);
  out.stderr_re = e.stderr_re;
  out.stderr_im = e.stderr_im;
  out.n_samples = e.n_samples;
  out.seed = e.seed;
  std::snprintf(out.algorithm, sizeof(out.algorithm), "%s", e.algorithm.c_str());
  return out;
}

resatom_exchange_report from_exchange(const resatom::ExchangeReport& r) {
  return {r.mean_exchange_range, r.feasible ? 1 : 0, r.k_required, r.optical_threshold_per_cm};
}

}  // namespace

// Opaque trajectory: flattened rows of (t, amplitudes).
struct resatom_trajectory {
  int components = 0;
  std::vector<double> times;
  std::vector<resatom::cplx> amplitudes;  // length times.size() * components
};

extern "C" {

const char* resatom_version(void) { return resatom::TOOLKIT_VERSION; }

const char* resatom_strerror(int status) {
  switch (status) {
    case RESATOM_OK: return "ok";
    case RESATOM_ERR_NULL: return "null pointer argument";
    case RESATOM_ERR_INVALID: return "invalid argument";
    case RESATOM_ERR_DOMAIN: return "domain error";
    case RESATOM_ERR_SINGULAR: return "singular evaluation point";
    case RESATOM_ERR_POLE: return "tangent-pole proximity";
    case RESATOM_ERR_INTERNAL: return "internal error";
    default: return "unknown status";
  }
}

const char* resatom_last_error_message(void) { return g_last_error; }

int resatom_pauli(int axis, resatom_complex out[4]) {
  if (!out) return null_error("out");
  return guarded([&] { write_matrix(resatom::make_pauli(to_axis(axis)), out); });
}

int resatom_alpha(int axis, resatom_complex out[16]) {
  if (!out) return null_error("out");
  return guarded([&] { write_matrix(resatom::make_alpha(to_axis(axis)), out); });
}

int resatom_beta1(resatom_complex out[16]) {
  if (!out) return null_error("out");
  return guarded([&] { write_matrix(resatom::make_beta1(), out); });
}

int resatom_dirac_beta(resatom_complex out[16]) {
  if (!out) return null_error("out");
  return guarded([&] { write_matrix(resatom::make_dirac_beta(), out); });
}

int resatom_matrix_exponential(int n, const resatom_complex* m, resatom_complex* out) {
  if (!m) return null_error("m");
  if (!out) return null_error("out");
  return guarded([&] {
    if (n != 2 && n != 4) throw std::invalid_argument("matrix dimension must be 2 or 4");
    write_matrix(resatom::matrix_exponential(to_matrix(n, m)), out);
  });
}

int resatom_hermitian_eigensystem(int n, const resatom_complex* m, double* eigenvalues,
                                  resatom_complex* eigenvectors) {
  if (!m) return null_error("m");
  if (!eigenvalues) return null_error("eigenvalues");
  if (!eigenvectors) return null_error("eigenvectors");
  return guarded([&] {
    if (n != 2 && n != 4) throw std::invalid_argument("matrix dimension must be 2 or 4");
    const resatom::HermitianEigensystem es = resatom::hermitian_eigensystem(to_matrix(n, m));
    for (int k = 0; k < n; ++k) {
      eigenvalues[k] = es.values[static_cast<std::size_t>(k)];
      for (int i = 0; i < n; ++i) eigenvectors[k * n + i] = from_cplx(es.vectors(i, k));
    }
  });
}

int resatom_check_weak_field(const resatom_two_level_atom* atom,
                             const resatom_drive_field* field, double hbar,
                             resatom_validity_report* out) {
  if (!atom) return null_error("atom");
  if (!field) return null_error("field");
  if (!out) return null_error("out");
  return guarded([&] {
    *out = from_validity(resatom::check_weak_field(to_atom(*atom), to_field(*field), hbar));
  });
}

int resatom_rwa_hamiltonian(const resatom_two_level_atom* atom,
                            const resatom_drive_field* field, double hbar,
                            resatom_complex out[4]) {
  if (!atom) return null_error("atom");
  if (!field) return null_error("field");
  if (!out) return null_error("out");
  return guarded([&] {
    if (!(hbar > 0.0)) throw std::domain_error("rwa_hamiltonian: hbar must be > 0");
    write_matrix(resatom::rwa_hamiltonian(to_atom(*atom), to_field(*field), hbar), out);
  });
}

int resatom_propagate2(const resatom_complex h[4], const resatom_complex initial[2],
                       double duration, double dt, double hbar, resatom_trajectory** out) {
  if (!h) return null_error("h");
  if (!initial) return null_error("initial");
  if (!out) return null_error("out");
  return guarded([&] {
    const resatom::Spinor2 psi0 = resatom::Spinor2::normalized(to_cplx(initial[0]), to_cplx(initial[1]));
    const resatom::Trajectory2 traj =
        resatom::propagate2(psi0, to_matrix(2, h), duration, dt, hbar);
    auto handle = std::make_unique<resatom_trajectory>();
    handle->components = 2;
    handle->times.reserve(traj.size());
    handle->amplitudes.reserve(traj.size() * 2);
    for (const auto& pt : traj) {
      handle->times.push_back(pt.t);
      handle->amplitudes.push_back(pt.state[0]);
      handle->amplitudes.push_back(pt.state[1]);
    }
    *out = handle.release();
  });
}

int resatom_propagate4(const resatom_complex h[16], const resatom_complex initial[4],
                       double duration, double dt, double hbar, resatom_trajectory** out) {
  if (!h) return null_error("h");
  if (!initial) return null_error("initial");
  if (!out) return null_error("out");
  return guarded([&] {
    const resatom::Spinor4 psi0 = resatom::Spinor4::normalized(
        {to_cplx(initial[0]), to_cplx(initial[1]), to_cplx(initial[2]), to_cplx(initial[3])});
    const resatom::Trajectory4 traj =
        resatom::propagate4(psi0, to_matrix(4, h), duration, dt, hbar);
    auto handle = std::make_unique<resatom_trajectory>();
    handle->components = 4;
    handle->times.reserve(traj.size());
    handle->amplitudes.reserve(traj.size() * 4);
    for (const auto& pt : traj) {
      handle->times.push_back(pt.t);
      for (int i = 0; i < 4; ++i) handle->amplitudes.push_back(pt.state[i]);
    }
    *out = handle.release();
  });
}

long long resatom_trajectory_length(const resatom_trajectory* traj) {
  return traj ? static_cast<long long>(traj->times.size()) : 0;
}

int resatom_trajectory_components(const resatom_trajectory* traj) {
  return traj ? traj->components : 0;
}

int resatom_trajectory_row(const resatom_trajectory* traj, long long index, double* t,
                           double* populations, double* norm) {
  if (!traj) return null_error("traj");
  if (index < 0 || index >= static_cast<long long>(traj->times.size())) {
    set_error("trajectory index out of range");
    return RESATOM_ERR_INVALID;
  }
  const std::size_t base = static_cast<std::size_t>(index) * static_cast<std::size_t>(traj->components);
  if (t) *t = traj->times[static_cast<std::size_t>(index)];
  double n2 = 0.0;
  for (int i = 0; i < traj->components; ++i) {
    const double pop = std::norm(traj->amplitudes[base + static_cast<std::size_t>(i)]);
    if (populations) populations[i] = pop;
    n2 += pop;
  }
  if (norm) *norm = std::sqrt(n2);
  return RESATOM_OK;
}

int resatom_trajectory_state(const resatom_trajectory* traj, long long index,
                             resatom_complex* amplitudes) {
  if (!traj) return null_error("traj");
  if (!amplitudes) return null_error("amplitudes");
  if (index < 0 || index >= static_cast<long long>(traj->times.size())) {
    set_error("trajectory index out of range");
    return RESATOM_ERR_INVALID;
  }
  const std::size_t base = static_cast<std::size_t>(index) * static_cast<std::size_t>(traj->components);
  for (int i = 0; i < traj->components; ++i) {
    amplitudes[i] = from_cplx(traj->amplitudes[base + static_cast<std::size_t>(i)]);
  }
  return RESATOM_OK;
}

void resatom_trajectory_free(resatom_trajectory* traj) { delete traj; }

int resatom_diraclike_hamiltonian(const resatom_diraclike_params* params,
                                  resatom_complex out[16]) {
  if (!params) return null_error("params");
  if (!out) return null_error("out");
  return guarded([&] { write_matrix(resatom::diraclike_hamiltonian(to_diraclike(*params)), out); });
}

int resatom_plane_wave_modes(const resatom_diraclike_params* params, double eigenvalues[4],
                             resatom_complex amplitudes[16]) {
  if (!params) return null_error("params");
  if (!eigenvalues) return null_error("eigenvalues");
  if (!amplitudes) return null_error("amplitudes");
  return guarded([&] {
    const auto modes = resatom::plane_wave_modes(to_diraclike(*params));
    for (int k = 0; k < 4; ++k) {
      eigenvalues[k] = modes[static_cast<std::size_t>(k)].eigenvalue;
      for (int i = 0; i < 4; ++i) {
        amplitudes[k * 4 + i] = from_cplx(modes[static_cast<std::size_t>(k)].amplitude[static_cast<std::size_t>(i)]);
      }
    }
  });
}

int resatom_parity_audit(resatom_parity_report* out) {
  if (!out) return null_error("out");
  return guarded([&] { *out = from_parity(resatom::parity_audit()); });
}

int resatom_make_pair_geometry(const resatom_vec3* rvec, double k,
                               const resatom_vec3* k_direction, resatom_pair_geometry* out) {
  if (!rvec) return null_error("rvec");
  if (!k_direction) return null_error("k_direction");
  if (!out) return null_error("out");
  return guarded([&] {
    const resatom::PairGeometry g =
        resatom::make_pair_geometry(to_vec3(*rvec), k, to_vec3(*k_direction));
    *out = {{g.rvec.x, g.rvec.y, g.rvec.z}, g.k, {g.kvec.x, g.kvec.y, g.kvec.z}};
  });
}

int resatom_induced_dipole(double xi, const resatom_cvec3* efield, resatom_cvec3* out) {
  if (!efield) return null_error("efield");
  if (!out) return null_error("out");
  return guarded([&] { *out = from_cvec3(resatom::induced_dipole(xi, to_cvec3(*efield))); });
}

int resatom_dipole_field(const resatom_vec3* d, const resatom_pair_geometry* geom,
                         resatom_cvec3* out) {
  if (!d) return null_error("d");
  if (!geom) return null_error("geom");
  if (!out) return null_error("out");
  return guarded([&] {
    const resatom::PairGeometry g = to_geometry(*geom);
    g.validate();
    *out = from_cvec3(resatom::dipole_field(to_vec3(*d), g));
  });
}

int resatom_pair_energy(const resatom_vec3* d1, const resatom_vec3* d2,
                        const resatom_pair_geometry* geom, resatom_complex* out) {
  if (!d1) return null_error("d1");
  if (!d2) return null_error("d2");
  if (!geom) return null_error("geom");
  if (!out) return null_error("out");
  return guarded([&] {
    const resatom::PairGeometry g = to_geometry(*geom);
    g.validate();
    *out = from_cplx(resatom::pair_energy(to_vec3(*d1), to_vec3(*d2), g));
  });
}

int resatom_averaged_pair_energy(double dmag, double r, double k, resatom_complex* out) {
  if (!out) return null_error("out");
  return guarded([&] { *out = from_cplx(resatom::averaged_pair_energy(dmag, r, k)); });
}

int resatom_averaged_pair_energy_printed(double dmag, double r, double k, double* out) {
  if (!out) return null_error("out");
  return guarded([&] { *out = resatom::averaged_pair_energy_printed(dmag, r, k); });
}

int resatom_phased_average(double dmag, const resatom_pair_geometry* geom, double* out) {
  if (!geom) return null_error("geom");
  if (!out) return null_error("out");
  return guarded([&] { *out = resatom::phased_average(dmag, to_geometry(*geom)); });
}

int resatom_mc_orientation_average(double dmag, const resatom_pair_geometry* geom,
                                   long long n_samples, uint64_t seed, int correlated,
                                   resatom_average_estimate* out) {
  if (!geom) return null_error("geom");
  if (!out) return null_error("out");
  return guarded([&] {
    const auto mode = correlated ? resatom::OrientationMode::Correlated
                                 : resatom::OrientationMode::Independent;
    *out = from_estimate(
        resatom::mc_orientation_average(dmag, to_geometry(*geom), n_samples, seed, mode));
  });
}

int resatom_frequency_coefficients(const resatom_driven_pair_params* params,
                                   resatom_freq_coefficients* out) {
  if (!params) return null_error("params");
  if (!out) return null_error("out");
  return guarded([&] {
    const resatom::FrequencyCoefficients fc = resatom::frequency_coefficients(to_driven(*params));
    *out = {fc.a, fc.b};
  });
}

int resatom_driven_potential(const resatom_driven_pair_params* params,
                             const resatom_pair_geometry* geom, double* out) {
  if (!params) return null_error("params");
  if (!geom) return null_error("geom");
  if (!out) return null_error("out");
  return guarded([&] { *out = resatom::driven_potential(to_driven(*params), to_geometry(*geom)); });
}

int resatom_driven_potential_eval(const resatom_driven_pair_params* params,
                                  const resatom_pair_geometry* geom,
                                  resatom_driven_evaluation* out) {
  if (!params) return null_error("params");
  if (!geom) return null_error("geom");
  if (!out) return null_error("out");
  return guarded([&] {
    const resatom::DrivenEvaluation ev =
        resatom::driven_potential_eval(to_driven(*params), to_geometry(*geom));
    *out = {ev.value, ev.a, ev.b, ev.exponent_arg};
  });
}

int resatom_driven_potential_naive(const resatom_driven_pair_params* params,
                                   const resatom_pair_geometry* geom, double pole_eps,
                                   double* out) {
  if (!params) return null_error("params");
  if (!geom) return null_error("geom");
  if (!out) return null_error("out");
  return guarded([&] {
    *out = resatom::driven_potential_naive(to_driven(*params), to_geometry(*geom), pole_eps);
  });
}

int resatom_attenuate(double i0, double k_medium, double r, double* out) {
  if (!out) return null_error("out");
  return guarded([&] { *out = resatom::attenuate(i0, k_medium, r); });
}

int resatom_exchange_feasibility(double k_medium, double lambda, resatom_exchange_report* out) {
  if (!out) return null_error("out");
  return guarded([&] { *out = from_exchange(resatom::exchange_feasibility(k_medium, lambda)); });
}

int resatom_assess_regime(const resatom_two_level_atom* atom, const resatom_drive_field* field,
                          double hbar, double k_medium, double lambda, double r,
                          resatom_regime_report* out) {
  if (!atom) return null_error("atom");
  if (!field) return null_error("field");
  if (!out) return null_error("out");
  return guarded([&] {
    const resatom::RegimeReport rep =
        resatom::assess_regime(to_atom(*atom), to_field(*field), hbar, k_medium, lambda, r);
    out->weak_field = from_validity(rep.weak_field);
    out->exchange = from_exchange(rep.exchange);
    out->intensity_at_r = rep.intensity_at_r;
  });
}

int resatom_self_audit(double dmag, double r, double k, long long n_samples, uint64_t seed,
                       long long n_agreement, resatom_audit_report* out) {
  if (!out) return null_error("out");
  return guarded([&] {
    resatom::SelfAuditConfig cfg;
    cfg.dmag = dmag;
    cfg.r = r;
    cfg.k = k;
    cfg.n_samples = n_samples;
    cfg.seed = seed;
    cfg.n_agreement = n_agreement;
    const resatom::SelfAuditReport rep = resatom::run_self_audit(cfg);

    out->parity = from_parity(rep.parity);
    out->parity_pass = rep.parity_pass ? 1 : 0;
    out->mc = from_estimate(rep.mc);
    out->mc_expected = from_cplx(rep.mc_expected);
    out->mc_dev_sigmas_re = rep.mc_dev_sigmas_re;
    out->mc_dev_sigmas_im = rep.mc_dev_sigmas_im;
    out->mc_sigma_limit = resatom::AUDIT_MC_SIGMAS;
    out->mc_pass = rep.mc_pass ? 1 : 0;
    out->agreement_max_rel_diff = rep.agreement_max_rel_diff;
    out->agreement_tol = resatom::AUDIT_AGREEMENT_TOL;
    out->agreement_points = rep.agreement_points;
    out->agreement_pass = rep.agreement_pass ? 1 : 0;
    out->pass = rep.pass ? 1 : 0;
  });
}

}  // extern "C"

// Exercises the shared-library C surface: marshalling, error codes, handle
// lifecycle. Numerical depth lives in the unit suites; here the point is
// that the boundary reports the same values and refuses bad input.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <string>

#include "resatom/resatom.h"

namespace {

resatom_pair_geometry geom_x(double r, double k) {
  resatom_pair_geometry g;
  const resatom_vec3 rvec{r, 0, 0};
  const resatom_vec3 kdir{1, 0, 0};
  REQUIRE(resatom_make_pair_geometry(&rvec, k, &kdir, &g) == RESATOM_OK);
  return g;
}

resatom_two_level_atom default_atom() {
  resatom_two_level_atom a;
  a.mu = 1.0;
  a.gamma = 1.0;
  a.omega_a = 0.0;
  a.rho1 = 1.0;
  a.rho2 = 0.0;
  a.xi = 0.0;
  return a;
}

resatom_drive_field default_field(double e0) {
  resatom_drive_field f;
  f.amplitude = e0;
  f.polarization = {0, 0, 1};
  f.omega0 = 0.0;
  f.kvec = {0, 0, 0};
  f.intensity = 1.0;
  return f;
}

}  // namespace

TEST_CASE("version and status strings") {
  CHECK(std::string(resatom_version()) == "0.1.0");
  CHECK(std::string(resatom_strerror(RESATOM_OK)) == "ok");
  CHECK(std::string(resatom_strerror(RESATOM_ERR_POLE)) == "tangent-pole proximity");
}

TEST_CASE("operator constructors across the boundary") {
  resatom_complex sx[4];
  REQUIRE(resatom_pauli(RESATOM_AXIS_X, sx) == RESATOM_OK);
  CHECK(sx[0].re == 0.0);
  CHECK(sx[1].re == 1.0);
  CHECK(sx[2].re == 1.0);
  CHECK(sx[3].re == 0.0);

  resatom_complex sy[4];
  REQUIRE(resatom_pauli(RESATOM_AXIS_Y, sy) == RESATOM_OK);
  CHECK(sy[1].im == -1.0);
  CHECK(sy[2].im == 1.0);

  CHECK(resatom_pauli(7, sx) == RESATOM_ERR_INVALID);
  CHECK(resatom_pauli(RESATOM_AXIS_X, nullptr) == RESATOM_ERR_NULL);

  resatom_complex b1[16];
  REQUIRE(resatom_beta1(b1) == RESATOM_OK);
  CHECK(b1[0].re == 1.0);
  CHECK(b1[5].re == 0.0);
  CHECK(b1[10].re == -1.0);

  resatom_complex beta[16];
  REQUIRE(resatom_dirac_beta(beta) == RESATOM_OK);
  CHECK(beta[5].re == 1.0);
  CHECK(beta[15].re == -1.0);

  resatom_complex ax[16];
  REQUIRE(resatom_alpha(RESATOM_AXIS_X, ax) == RESATOM_OK);
  CHECK(ax[3].re == 1.0);   // (0,3)
  CHECK(ax[12].re == 1.0);  // (3,0)
}

TEST_CASE("matrix exponential and eigensystem") {
  // exp of zero: identity.
  resatom_complex zero[4] = {{0, 0}, {0, 0}, {0, 0}, {0, 0}};
  resatom_complex e[4];
  REQUIRE(resatom_matrix_exponential(2, zero, e) == RESATOM_OK);
  CHECK(e[0].re == 1.0);
  CHECK(e[3].re == 1.0);
  CHECK(e[1].re == 0.0);

  CHECK(resatom_matrix_exponential(3, zero, e) == RESATOM_ERR_INVALID);

  // sigma_z eigensystem: values {1, -1} descending.
  resatom_complex sz[4];
  REQUIRE(resatom_pauli(RESATOM_AXIS_Z, sz) == RESATOM_OK);
  double vals[2];
  resatom_complex vecs[4];
  REQUIRE(resatom_hermitian_eigensystem(2, sz, vals, vecs) == RESATOM_OK);
  CHECK(vals[0] == doctest::Approx(1.0));
  CHECK(vals[1] == doctest::Approx(-1.0));

  // Non-hermitian input is a domain error.
  resatom_complex bad[4] = {{0, 0}, {1, 0}, {0, 0}, {0, 0}};
  CHECK(resatom_hermitian_eigensystem(2, bad, vals, vecs) == RESATOM_ERR_DOMAIN);
  CHECK(std::strlen(resatom_last_error_message()) > 0);
}

TEST_CASE("weak-field report and error taxonomy") {
  const resatom_two_level_atom atom = default_atom();
  const resatom_drive_field field = default_field(0.5);
  resatom_validity_report rep;
  REQUIRE(resatom_check_weak_field(&atom, &field, 1.0, &rep) == RESATOM_OK);
  CHECK(rep.ratio == doctest::Approx(0.5));
  CHECK(rep.within_weak_field == 1);

  resatom_two_level_atom degenerate = atom;
  degenerate.gamma = 0.0;
  CHECK(resatom_check_weak_field(&degenerate, &field, 1.0, &rep) == RESATOM_ERR_DOMAIN);
  CHECK(resatom_check_weak_field(nullptr, &field, 1.0, &rep) == RESATOM_ERR_NULL);
}

TEST_CASE("propagation through the handle interface") {
  const resatom_two_level_atom atom = default_atom();
  const resatom_drive_field field = default_field(1.0);  // resonant, rabi = 1
  resatom_complex h[4];
  REQUIRE(resatom_rwa_hamiltonian(&atom, &field, 1.0, h) == RESATOM_OK);

  const resatom_complex init[2] = {{1, 0}, {0, 0}};
  resatom_trajectory* traj = nullptr;
  const double pi = 3.14159265358979323846;
  REQUIRE(resatom_propagate2(h, init, pi, pi / 100.0, 1.0, &traj) == RESATOM_OK);
  REQUIRE(traj != nullptr);
  CHECK(resatom_trajectory_components(traj) == 2);
  REQUIRE(resatom_trajectory_length(traj) == 101);

  double t = 0.0, norm = 0.0, pops[2];
  REQUIRE(resatom_trajectory_row(traj, 100, &t, pops, &norm) == RESATOM_OK);
  CHECK(t == doctest::Approx(pi));
  CHECK(pops[1] == doctest::Approx(1.0).epsilon(1e-9));  // full inversion at t = pi
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));

  resatom_complex amps[2];
  REQUIRE(resatom_trajectory_state(traj, 0, amps) == RESATOM_OK);
  CHECK(amps[0].re == 1.0);

  CHECK(resatom_trajectory_row(traj, 101, &t, pops, &norm) == RESATOM_ERR_INVALID);
  CHECK(resatom_trajectory_row(traj, -1, &t, pops, &norm) == RESATOM_ERR_INVALID);
  resatom_trajectory_free(traj);

  // dt <= 0 refused.
  traj = nullptr;
  CHECK(resatom_propagate2(h, init, 1.0, 0.0, 1.0, &traj) == RESATOM_ERR_INVALID);
  CHECK(traj == nullptr);

  // Zero initial state refused.
  const resatom_complex zero_init[2] = {{0, 0}, {0, 0}};
  CHECK(resatom_propagate2(h, zero_init, 1.0, 0.1, 1.0, &traj) == RESATOM_ERR_INVALID);
}

TEST_CASE("4-spinor model across the boundary") {
  resatom_diraclike_params p;
  p.p = {0, 0, 0};
  p.omega = 1.0;
  p.mu = 0.0;
  p.efield = {0, 0, 0};
  p.c = 1.0;
  p.hbar = 1.0;

  resatom_complex h[16];
  REQUIRE(resatom_diraclike_hamiltonian(&p, h) == RESATOM_OK);
  CHECK(h[0].re == 1.0);    // beta1 diagonal
  CHECK(h[10].re == -1.0);

  double evals[4];
  resatom_complex evecs[16];
  REQUIRE(resatom_plane_wave_modes(&p, evals, evecs) == RESATOM_OK);
  CHECK(evals[0] == doctest::Approx(1.0));
  CHECK(evals[3] == doctest::Approx(-1.0));

  const resatom_complex init[4] = {{1, 0}, {0, 0}, {0, 0}, {0, 0}};
  resatom_trajectory* traj = nullptr;
  REQUIRE(resatom_propagate4(h, init, 1.0, 0.1, 1.0, &traj) == RESATOM_OK);
  CHECK(resatom_trajectory_components(traj) == 4);
  double pops[4], norm;
  REQUIRE(resatom_trajectory_row(traj, 10, nullptr, pops, &norm) == RESATOM_OK);
  CHECK(pops[0] == doctest::Approx(1.0).epsilon(1e-12));
  resatom_trajectory_free(traj);

  p.c = 0.0;
  CHECK(resatom_diraclike_hamiltonian(&p, h) == RESATOM_ERR_DOMAIN);
}

TEST_CASE("parity audit across the boundary") {
  resatom_parity_report rep;
  REQUIRE(resatom_parity_audit(&rep) == RESATOM_OK);
  CHECK(rep.alpha_x_is_polar == 1);
  CHECK(rep.alpha_y_is_polar == 1);
  CHECK(rep.alpha_z_is_polar == 1);
  CHECK(rep.sigma_has_compensator == 0);
  CHECK(rep.max_residual == 0.0);
}

TEST_CASE("dipole chain across the boundary") {
  const resatom_cvec3 efield = {{1, 0}, {0, 0}, {0, 0}};
  resatom_cvec3 d;
  REQUIRE(resatom_induced_dipole(2.0, &efield, &d) == RESATOM_OK);
  CHECK(d.x.re == 2.0);

  const resatom_pair_geometry g = geom_x(1.0, 1.0);
  const resatom_vec3 dz{0, 0, 1};
  resatom_cvec3 field;
  REQUIRE(resatom_dipole_field(&dz, &g, &field) == RESATOM_OK);
  CHECK(field.z.re == doctest::Approx(-0.8414709848078965).epsilon(1e-14));
  CHECK(field.z.im == doctest::Approx(0.5403023058681398).epsilon(1e-14));

  resatom_complex u;
  REQUIRE(resatom_pair_energy(&dz, &dz, &g, &u) == RESATOM_OK);
  CHECK(u.re == doctest::Approx(0.8414709848078965).epsilon(1e-14));

  resatom_pair_geometry singular = g;
  singular.rvec = {0, 0, 0};
  CHECK(resatom_pair_energy(&dz, &dz, &singular, &u) == RESATOM_ERR_SINGULAR);

  resatom_complex avg;
  REQUIRE(resatom_averaged_pair_energy(1.0, 1.0, 1.0, &avg) == RESATOM_OK);
  CHECK(avg.re == doctest::Approx(-0.36020153724542647).epsilon(1e-14));
  double printed;
  REQUIRE(resatom_averaged_pair_energy_printed(1.0, 1.0, 1.0, &printed) == RESATOM_OK);
  CHECK(printed == doctest::Approx(-2.0 / 3.0).epsilon(1e-15));
  CHECK(resatom_averaged_pair_energy(1.0, 0.0, 1.0, &avg) == RESATOM_ERR_INVALID);

  double phased;
  REQUIRE(resatom_phased_average(1.0, &g, &phased) == RESATOM_OK);
  CHECK(phased == doctest::Approx(-0.36020153724542647).epsilon(1e-14));
}

TEST_CASE("mc estimate across the boundary is deterministic") {
  const resatom_pair_geometry g = geom_x(1.0, 1.0);
  resatom_average_estimate a, b;
  REQUIRE(resatom_mc_orientation_average(1.0, &g, 2000, 99, 1, &a) == RESATOM_OK);
  REQUIRE(resatom_mc_orientation_average(1.0, &g, 2000, 99, 1, &b) == RESATOM_OK);
  CHECK(a.mean.re == b.mean.re);
  CHECK(a.mean.im == b.mean.im);
  CHECK(a.stderr_re == b.stderr_re);
  CHECK(std::string(a.algorithm) == "splitmix64");
  CHECK(a.n_samples == 2000);
  CHECK(a.seed == 99);

  CHECK(resatom_mc_orientation_average(1.0, &g, 10, 99, 1, &a) == RESATOM_ERR_INVALID);
}

TEST_CASE("driven potential across the boundary") {
  resatom_driven_pair_params p;
  p.mu = 1.0;
  p.intensity = 1.0;
  p.beta_pop = 1.0;
  p.gamma1 = 1.0;
  p.gamma2 = 1.0;
  p.delta1 = 0.0;
  p.delta2 = 0.0;

  resatom_freq_coefficients fc;
  REQUIRE(resatom_frequency_coefficients(&p, &fc) == RESATOM_OK);
  CHECK(fc.a == doctest::Approx(1.0));
  CHECK(fc.b == 0.0);

  const resatom_pair_geometry g = geom_x(1.0, 1.0);
  double u;
  REQUIRE(resatom_driven_potential(&p, &g, &u) == RESATOM_OK);
  CHECK(u == doctest::Approx(-0.016101587178010475).epsilon(1e-12));

  resatom_driven_evaluation ev;
  REQUIRE(resatom_driven_potential_eval(&p, &g, &ev) == RESATOM_OK);
  CHECK(ev.value == u);
  CHECK(ev.a == 1.0);

  double naive;
  REQUIRE(resatom_driven_potential_naive(&p, &g, 1e-8, &naive) == RESATOM_OK);
  CHECK(naive == doctest::Approx(u).epsilon(1e-12));

  const resatom_pair_geometry pole = geom_x(3.14159265358979323846 / 2.0, 1.0);
  CHECK(resatom_driven_potential_naive(&p, &pole, 1e-8, &naive) == RESATOM_ERR_POLE);

  p.gamma1 = 0.0;
  CHECK(resatom_driven_potential(&p, &g, &u) == RESATOM_ERR_DOMAIN);
}

TEST_CASE("regime pieces across the boundary") {
  double i;
  REQUIRE(resatom_attenuate(1.0, 1.0, std::log(2.0), &i) == RESATOM_OK);
  CHECK(i == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(resatom_attenuate(1.0, 1.0, -1.0, &i) == RESATOM_ERR_INVALID);

  resatom_exchange_report ex;
  REQUIRE(resatom_exchange_feasibility(2.0, 1.0, &ex) == RESATOM_OK);
  CHECK(ex.feasible == 1);
  CHECK(ex.optical_threshold_per_cm == 100.0);
  REQUIRE(resatom_exchange_feasibility(1.0, 1.0, &ex) == RESATOM_OK);
  CHECK(ex.feasible == 0);
  CHECK(resatom_exchange_feasibility(1.0, 0.0, &ex) == RESATOM_ERR_INVALID);

  const resatom_two_level_atom atom = default_atom();
  const resatom_drive_field field = default_field(0.5);
  resatom_regime_report rep;
  REQUIRE(resatom_assess_regime(&atom, &field, 1.0, 2.0, 1.0, 0.0, &rep) == RESATOM_OK);
  CHECK(rep.weak_field.within_weak_field == 1);
  CHECK(rep.exchange.feasible == 1);
  CHECK(rep.intensity_at_r == doctest::Approx(1.0));
}

TEST_CASE("self audit across the boundary") {
  resatom_audit_report rep;
  REQUIRE(resatom_self_audit(1.0, 1.0, 1.0, 20000, 1, 500, &rep) == RESATOM_OK);
  CHECK(rep.parity_pass == 1);
  CHECK(rep.mc_pass == 1);
  CHECK(rep.agreement_pass == 1);
  CHECK(rep.pass == 1);
  CHECK(rep.mc_sigma_limit == 4.0);
  CHECK(rep.agreement_tol == 1e-10);
  CHECK(rep.agreement_points == 500);
  CHECK(std::string(rep.mc.algorithm) == "splitmix64");

  CHECK(resatom_self_audit(1.0, 1.0, 1.0, 10, 1, 500, &rep) == RESATOM_ERR_INVALID);
  CHECK(resatom_self_audit(1.0, 1.0, 1.0, 20000, 1, 500, nullptr) == RESATOM_ERR_NULL);

  // k = 0: the imaginary component is identically zero on both sides, so
  // its standard error vanishes and the deviation must be reported as 0.
  REQUIRE(resatom_self_audit(1.0, 1.0, 0.0, 5000, 3, 200, &rep) == RESATOM_OK);
  CHECK(rep.mc.stderr_im == 0.0);
  CHECK(rep.mc_dev_sigmas_im == 0.0);
  CHECK(rep.mc_pass == 1);
}

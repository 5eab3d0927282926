#include "resatom/diraclike.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "resatom/twolevel.hpp"

using namespace resatom;

namespace {

DiracLikeParams params_with(Vec3 p, double omega, double mu, Vec3 e, double c = 1.0,
                            double hbar = 1.0) {
  DiracLikeParams out;
  out.p = p;
  out.omega = omega;
  out.mu = mu;
  out.efield = e;
  out.c = c;
  out.hbar = hbar;
  return out;
}

std::vector<double> sorted_desc(std::vector<double> v) {
  std::sort(v.begin(), v.end(), std::greater<double>());
  return v;
}

}  // namespace

TEST_CASE("hamiltonian reduces to beta1 * hbar * omega at zero momentum and field") {
  const ComplexMatrix h = diraclike_hamiltonian(params_with({}, 1.0, 0.0, {}));
  CHECK((h - make_beta1()).max_abs() == 0.0);

  const ComplexMatrix h2 = diraclike_hamiltonian(params_with({}, 2.5, 0.0, {}, 1.0, 2.0));
  CHECK((h2 - cplx(5.0) * make_beta1()).max_abs() == 0.0);
}

TEST_CASE("hamiltonian for pure momentum along z is c alpha_z with +-1 doublets") {
  const ComplexMatrix h = diraclike_hamiltonian(params_with({0, 0, 1}, 0.0, 0.0, {}));
  CHECK((h - make_alpha(Axis::Z)).max_abs() == 0.0);

  const HermitianEigensystem es = hermitian_eigensystem(h);
  const std::vector<double> expected{1.0, 1.0, -1.0, -1.0};
  for (int k = 0; k < 4; ++k) {
    CHECK(es.values[static_cast<std::size_t>(k)] ==
          doctest::Approx(expected[static_cast<std::size_t>(k)]).epsilon(1e-12));
  }
}

TEST_CASE("hamiltonian is exactly hermitian for any real inputs") {
  oracle::Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const ComplexMatrix h = diraclike_hamiltonian(
        params_with({rng.range(-2, 2), rng.range(-2, 2), rng.range(-2, 2)}, rng.range(-2, 2),
                    rng.range(-2, 2),
                    {rng.range(-2, 2), rng.range(-2, 2), rng.range(-2, 2)}, rng.range(0.5, 2),
                    rng.range(0.5, 2)));
    CHECK((h - h.adjoint()).max_abs() < 1e-14);
  }
}

TEST_CASE("hamiltonian validates constants") {
  CHECK_THROWS_AS(diraclike_hamiltonian(params_with({}, 1.0, 0.0, {}, 0.0, 1.0)),
                  std::domain_error);
  CHECK_THROWS_AS(diraclike_hamiltonian(params_with({}, 1.0, 0.0, {}, 1.0, 0.0)),
                  std::domain_error);
}

TEST_CASE("propagate4: zero hamiltonian keeps the state") {
  const Spinor4 psi = Spinor4::normalized({cplx(1.0), cplx(0.0, 1.0), cplx(-1.0), cplx(1.0)});
  const Trajectory4 traj = propagate4(psi, ComplexMatrix(4), 1.0, 0.25);
  REQUIRE(traj.size() == 5);
  for (const auto& pt : traj) {
    for (int i = 0; i < 4; ++i) CHECK(std::abs(pt.state[i] - psi[i]) < 1e-15);
  }
}

TEST_CASE("propagate4: eigenstate of beta1 picks up a pure phase") {
  const double omega = 1.7;
  const ComplexMatrix h = diraclike_hamiltonian(params_with({}, omega, 0.0, {}));
  const Trajectory4 traj = propagate4(Spinor4(), h, 5.0, 0.05);
  for (const auto& pt : traj) {
    // exp(-i omega t) on component 1, nothing anywhere else.
    CHECK(std::abs(pt.state[0] - std::polar(1.0, -omega * pt.t)) < 1e-12);
    CHECK(pt.populations[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pt.populations[1] + pt.populations[2] + pt.populations[3] < 1e-24);
  }
}

TEST_CASE("propagate4: alpha_z drive oscillates between components 1 and 3") {
  // H = c p alpha_z, alpha_z^2 = I: exp(-iHt) = cos(cpt) I - i sin(cpt) alpha_z,
  // so |psi_1|^2 = cos^2(c p t), |psi_3|^2 = sin^2, period pi/(c p).
  const double cp = 0.8;
  const ComplexMatrix h = diraclike_hamiltonian(params_with({0, 0, cp}, 0.0, 0.0, {}));
  const Trajectory4 traj = propagate4(Spinor4(), h, 6.0, 0.02);
  double max_err = 0.0;
  for (const auto& pt : traj) {
    const double c2 = std::pow(std::cos(cp * pt.t), 2);
    max_err = std::max(max_err, std::abs(pt.populations[0] - c2));
    max_err = std::max(max_err, std::abs(pt.populations[2] - (1.0 - c2)));
    max_err = std::max(max_err, pt.populations[1]);
    max_err = std::max(max_err, pt.populations[3]);
  }
  CHECK(max_err < 1e-10);
}

TEST_CASE("propagate4 norm conservation over many steps") {
  const ComplexMatrix h = diraclike_hamiltonian(
      params_with({0.4, -0.3, 0.9}, 1.1, 0.7, {0.2, 0.5, -0.8}));
  const Spinor4 psi = Spinor4::normalized({cplx(1, 0.5), cplx(-0.25, 0), cplx(0, 0.75), cplx(0.5, -0.5)});
  const Trajectory4 traj = propagate4(psi, h, 100.0, 0.1);
  REQUIRE(traj.size() == 1001);
  for (const auto& pt : traj) CHECK(std::abs(pt.state.norm() - 1.0) < NORM_DRIFT_TOL);
}

TEST_CASE("plane-wave modes of the diagonal hamiltonian") {
  const auto modes = plane_wave_modes(params_with({}, 1.0, 0.0, {}));
  REQUIRE(modes.size() == 4);
  const std::vector<double> expected{1.0, 0.0, 0.0, -1.0};
  for (int k = 0; k < 4; ++k) {
    CHECK(modes[static_cast<std::size_t>(k)].eigenvalue ==
          doctest::Approx(expected[static_cast<std::size_t>(k)]).epsilon(1e-12));
  }
  // Nondegenerate modes are coordinate vectors up to phase.
  CHECK(std::abs(modes[0].amplitude[0]) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(modes[3].amplitude[2]) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("plane-wave modes satisfy the eigen-residual and completeness") {
  oracle::Rng rng(59);
  for (int trial = 0; trial < 15; ++trial) {
    const DiracLikeParams params =
        params_with({rng.range(-1, 1), rng.range(-1, 1), rng.range(-1, 1)}, rng.range(-2, 2),
                    rng.range(0, 1), {rng.range(-1, 1), rng.range(-1, 1), rng.range(-1, 1)});
    const ComplexMatrix h = diraclike_hamiltonian(params);
    const auto modes = plane_wave_modes(params);

    ComplexMatrix completeness(4);
    for (const auto& mode : modes) {
      const auto hu = h.apply(mode.amplitude);
      double residual = 0.0;
      double norm = 0.0;
      for (int i = 0; i < 4; ++i) {
        residual += std::norm(hu[static_cast<std::size_t>(i)] -
                              mode.eigenvalue * mode.amplitude[static_cast<std::size_t>(i)]);
        norm += std::norm(mode.amplitude[static_cast<std::size_t>(i)]);
      }
      CHECK(std::sqrt(residual) < 1e-10);
      CHECK(std::abs(std::sqrt(norm) - 1.0) < 1e-12);
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
          completeness(i, j) += mode.amplitude[static_cast<std::size_t>(i)] *
                                std::conj(mode.amplitude[static_cast<std::size_t>(j)]);
        }
      }
    }
    CHECK((completeness - ComplexMatrix::identity(4)).max_abs() < 1e-10);
  }
}

TEST_CASE("spectrum is symmetric about zero when omega = 0") {
  oracle::Rng rng(61);
  for (int trial = 0; trial < 15; ++trial) {
    const auto modes = plane_wave_modes(
        params_with({rng.range(-2, 2), rng.range(-2, 2), rng.range(-2, 2)}, 0.0, rng.range(0, 2),
                    {rng.range(-2, 2), rng.range(-2, 2), rng.range(-2, 2)}));
    std::vector<double> vals;
    for (const auto& m : modes) vals.push_back(m.eigenvalue);
    const auto v = sorted_desc(vals);
    CHECK(std::abs(v[0] + v[3]) < 1e-10);
    CHECK(std::abs(v[1] + v[2]) < 1e-10);
  }
}

TEST_CASE("parity audit: alpha is polar, sigma has no compensator") {
  const ParityAuditReport rep = parity_audit();
  CHECK(rep.alpha_is_polar[0]);
  CHECK(rep.alpha_is_polar[1]);
  CHECK(rep.alpha_is_polar[2]);
  CHECK(rep.max_residual == 0.0);
  CHECK_FALSE(rep.sigma_has_compensator);
  CHECK(rep.sigma_best_residual > 1.0);

  // beta alpha_x beta = -alpha_x with zero residual, written out.
  const ComplexMatrix beta = make_dirac_beta();
  CHECK((beta * make_alpha(Axis::X) * beta + make_alpha(Axis::X)).max_abs() == 0.0);

  // The identity cannot flip sigma_z: I sigma_z I = sigma_z.
  const ComplexMatrix id = ComplexMatrix::identity(2);
  CHECK((id * make_pauli(Axis::Z) * id - make_pauli(Axis::Z)).max_abs() == 0.0);
}

TEST_CASE("parity audit detects a corrupted alpha (fault injection)") {
  // A diagonal-block entry survives conjugation by beta unchanged, so the
  // sign flip must fail on it.
  ComplexMatrix bad = make_alpha(Axis::X);
  bad(0, 0) = 0.3;
  const ParityAuditReport rep =
      parity_audit_on(bad, make_alpha(Axis::Y), make_alpha(Axis::Z), make_dirac_beta());
  CHECK_FALSE(rep.alpha_is_polar[0]);
  CHECK(rep.alpha_is_polar[1]);
  CHECK(rep.alpha_is_polar[2]);
  CHECK(rep.max_residual == doctest::Approx(0.6));
}

TEST_CASE("two-level embedding: components (1,3) reproduce the sigma_x coupling") {
  const double mu = 0.7;
  const double ez = 1.3;
  const ComplexMatrix h4 = diraclike_hamiltonian(params_with({}, 0.9, mu, {0, 0, ez}));

  // Off-diagonal coupling of the embedded (1,3) block equals mu*Ez, the same
  // magnitude as the sigma_x-coupled 2-level model V = -mu E sigma_x.
  CHECK(std::abs(h4(0, 2)) == doctest::Approx(mu * ez).epsilon(1e-14));
  const ComplexMatrix v2 = cplx(-mu * ez) * make_pauli(Axis::X);
  CHECK(std::abs(std::abs(h4(0, 2)) - std::abs(v2(0, 1))) < 1e-14);

  // Population-transfer maxima agree across a frequency grid, and both peak
  // at omega = 0.
  const std::vector<double> omegas{-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0};
  std::vector<double> peak2, peak4;
  for (const double omega : omegas) {
    const ComplexMatrix h = diraclike_hamiltonian(params_with({}, omega, mu, {0, 0, ez}));
    const Trajectory4 t4 = propagate4(Spinor4(), h, 8.0, 0.02);
    double p4 = 0.0;
    for (const auto& pt : t4) p4 = std::max(p4, pt.populations[2]);
    peak4.push_back(p4);

    ComplexMatrix h2(2);
    h2(0, 0) = h(0, 0);
    h2(0, 1) = h(0, 2);
    h2(1, 0) = h(2, 0);
    h2(1, 1) = h(2, 2);
    const Trajectory2 t2 = propagate2(Spinor2(), h2, 8.0, 0.02);
    double p2 = 0.0;
    for (const auto& pt : t2) p2 = std::max(p2, pt.populations[1]);
    peak2.push_back(p2);

    CHECK(std::abs(p4 - p2) < 1e-10);
  }
  const auto arg4 = std::max_element(peak4.begin(), peak4.end()) - peak4.begin();
  const auto arg2 = std::max_element(peak2.begin(), peak2.end()) - peak2.begin();
  CHECK(arg4 == arg2);
  CHECK(omegas[static_cast<std::size_t>(arg4)] == 0.0);
}

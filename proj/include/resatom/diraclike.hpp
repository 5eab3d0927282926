#pragma once

// The 4-spinor alternative dynamics for a two-level atom in a resonant
// field, plus the spatial-inversion audit that motivates it: the alpha.E
// coupling transforms as a scalar, while sigma.E on the 2-level space does
// not.

#include <vector>

#include "resatom/linalg.hpp"

namespace resatom {

struct DiracLikeParams {
  Vec3 p{};            // momentum (the plane-wave spatial factor replaces the operator)
  double omega = 0.0;  // frequency multiplying beta1; left free, see diraclike_hamiltonian
  double mu = 0.0;     // dipole element
  Vec3 efield{};       // static real drive amplitude; oscillating drives are
                       // piecewise-constant segments assembled by the caller
  double c = 1.0;      // speed-of-light constant
  double hbar = 1.0;

  void validate() const;  // c > 0, hbar > 0
};

// H = c (alpha.p) - mu (alpha.E) + beta1 hbar omega, the unique Hermitian
// rearrangement of the first-order equation to i hbar d/dt Psi = H Psi.
// beta1 is used verbatim even though singular; components 2 and 4 carry no
// stated physical label and are reported as raw populations.
ComplexMatrix diraclike_hamiltonian(const DiracLikeParams& params);

struct TrajectoryPoint4 {
  double t = 0.0;
  Spinor4 state;
  std::array<double, 4> populations{};
};
using Trajectory4 = std::vector<TrajectoryPoint4>;

// Exact-exponential stepping, same contract as propagate2.
Trajectory4 propagate4(const Spinor4& initial, const ComplexMatrix& h, double duration,
                       double dt, double hbar = 1.0);

struct PlaneWaveMode {
  double eigenvalue = 0.0;       // energy eps_k
  std::array<cplx, 4> amplitude{};  // unit-norm spinor u_k
};

// Frequency eigenmodes of the 4-spinor Hamiltonian, eigenvalues descending.
// The general solution is sum_k c_k u_k exp(-i eps_k t / hbar) times the
// spatial plane-wave factor exp(+i p.r / hbar).
std::vector<PlaneWaveMode> plane_wave_modes(const DiracLikeParams& params);

struct ParityAuditReport {
  // beta alpha_a beta^-1 == -alpha_a per axis (x, y, z): the coupling to a
  // polar field vector stays scalar.
  std::array<bool, 3> alpha_is_polar{};
  // Whether any unitary on the 2-level space flips all three sigma_a at
  // once. None does, so sigma.E changes sign with E alone: a pseudoscalar.
  bool sigma_has_compensator = false;
  double max_residual = 0.0;         // worst alpha flip residual
  double sigma_best_residual = 0.0;  // closest any candidate comes to flipping every sigma_a
};

ParityAuditReport parity_audit();

// Same audit on caller-supplied operators; lets tests inject corrupted
// matrices.
ParityAuditReport parity_audit_on(const ComplexMatrix& alpha_x, const ComplexMatrix& alpha_y,
                                  const ComplexMatrix& alpha_z, const ComplexMatrix& beta);

}  // namespace resatom

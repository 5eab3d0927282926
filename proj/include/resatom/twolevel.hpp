#pragma once

// Standard semiclassical two-level atom: weak-field validity criterion,
// rotating-frame RWA Hamiltonian, and unitary time propagation of the
// 2-component state.

#include <vector>

#include "resatom/linalg.hpp"

namespace resatom {

struct TwoLevelAtom {
  double mu = 0.0;      // transition dipole matrix element
  double gamma = 0.0;   // transition halfwidth
  double omega_a = 0.0; // transition frequency
  double rho1 = 1.0;    // lower-level population density
  double rho2 = 0.0;    // upper-level population density
  double xi = 0.0;      // polarizability

  // gamma > 0, populations >= 0.
  void validate() const;
};

// Classical monochromatic drive; the quantized field is out of scope.
struct DriveField {
  double amplitude = 0.0;            // real envelope E0 >= 0
  Vec3 polarization{0.0, 0.0, 1.0};  // unit vector
  double omega0 = 0.0;               // carrier frequency
  Vec3 kvec{};                       // wavevector
  double intensity = 0.0;            // I0 >= 0

  void validate() const;
};

struct ValidityReport {
  double ratio = 0.0;              // mu E0 / (hbar Gamma)
  bool within_weak_field = false;  // strict: ratio < 1; a tie is NOT within
};

// The drive must sit above spontaneous emission but below level splitting;
// the upper bound is the ratio below. Throws std::domain_error when
// gamma <= 0 or hbar <= 0.
ValidityReport check_weak_field(const TwoLevelAtom& atom, const DriveField& field, double hbar);

// Rotating-frame Hamiltonian
//   H = -(hbar*delta/2) sigma_z - (hbar*rabi/2) sigma_x
// with detuning delta = omega0 - omega_a and Rabi frequency rabi = mu*E0/hbar.
// The detuning sign convention (drive minus atom) is fixed globally.
ComplexMatrix rwa_hamiltonian(const TwoLevelAtom& atom, const DriveField& field, double hbar);

struct TrajectoryPoint2 {
  double t = 0.0;
  Spinor2 state;
  std::array<double, 2> populations{};
};
using Trajectory2 = std::vector<TrajectoryPoint2>;

// state(t) = exp(-i H t / hbar) state(0), one exact exponential per step.
// H must be Hermitian and constant over the call; time-dependent drives are
// piecewise-constant segments assembled by the caller. The trajectory starts
// at t = 0 and never renormalizes: unitarity alone keeps the norm within
// NORM_DRIFT_TOL. Throws std::invalid_argument for dt <= 0, duration < 0,
// or a non-Hermitian H.
Trajectory2 propagate2(const Spinor2& initial, const ComplexMatrix& h, double duration,
                       double dt, double hbar = 1.0);

}  // namespace resatom

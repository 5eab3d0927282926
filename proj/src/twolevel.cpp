#include "resatom/twolevel.hpp"

#include <cmath>
#include <stdexcept>

namespace resatom {

void TwoLevelAtom::validate() const {
  if (!(gamma > 0.0)) throw std::domain_error("TwoLevelAtom: gamma must be > 0");
  if (rho1 < 0.0 || rho2 < 0.0) throw std::domain_error("TwoLevelAtom: populations must be >= 0");
}

void DriveField::validate() const {
  if (amplitude < 0.0) throw std::invalid_argument("DriveField: amplitude must be >= 0");
  if (intensity < 0.0) throw std::invalid_argument("DriveField: intensity must be >= 0");
  if (std::abs(polarization.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("DriveField: polarization must be a unit vector");
  }
}

ValidityReport check_weak_field(const TwoLevelAtom& atom, const DriveField& field, double hbar) {
  if (!(atom.gamma > 0.0)) throw std::domain_error("check_weak_field: gamma must be > 0");
  if (!(hbar > 0.0)) throw std::domain_error("check_weak_field: hbar must be > 0");
  ValidityReport rep;
  rep.ratio = atom.mu * field.amplitude / (hbar * atom.gamma);
  rep.within_weak_field = rep.ratio < 1.0;
  return rep;
}

ComplexMatrix rwa_hamiltonian(const TwoLevelAtom& atom, const DriveField& field, double hbar) {
  const double delta = field.omega0 - atom.omega_a;
  const double rabi = atom.mu * field.amplitude / hbar;
  ComplexMatrix h(2);
  h(0, 0) = -0.5 * hbar * delta;
  h(1, 1) = 0.5 * hbar * delta;
  h(0, 1) = -0.5 * hbar * rabi;
  h(1, 0) = -0.5 * hbar * rabi;
  return h;
}

namespace {

// Shared stepping policy for both propagators: t_i = i*dt up to duration,
// with the step count robust to duration/dt landing a hair under an integer.
long long step_count(double duration, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("propagate: dt must be > 0");
  if (duration < 0.0) throw std::invalid_argument("propagate: duration must be >= 0");
  return static_cast<long long>(std::ceil(duration / dt - 1e-9));
}

}  // namespace

Trajectory2 propagate2(const Spinor2& initial, const ComplexMatrix& h, double duration,
                       double dt, double hbar) {
  if (h.size() != 2) throw std::invalid_argument("propagate2: H must be 2x2");
  if (!h.is_hermitian()) throw std::invalid_argument("propagate2: H must be Hermitian");
  if (!(hbar > 0.0)) throw std::invalid_argument("propagate2: hbar must be > 0");
  const long long n_steps = step_count(duration, dt);

  // Symmetrizing first makes the generator exactly anti-Hermitian, keeping
  // the step operator unitary to machine precision.
  const ComplexMatrix hsym = cplx(0.5) * (h + h.adjoint());
  const ComplexMatrix u = matrix_exponential(cplx(0.0, -dt / hbar) * hsym);

  Trajectory2 out;
  out.reserve(static_cast<std::size_t>(n_steps) + 1);
  std::array<cplx, 2> amps = initial.amplitudes();
  for (long long i = 0; i <= n_steps; ++i) {
    const Spinor2 state = Spinor2::raw(amps[0], amps[1]);
    out.push_back({static_cast<double>(i) * dt, state, state.populations()});
    if (i < n_steps) amps = u.apply(amps);
  }
  return out;
}

}  // namespace resatom

#include "resatom/diraclike.hpp"

#include <cmath>
#include <stdexcept>

namespace resatom {

void DiracLikeParams::validate() const {
  if (!(c > 0.0)) throw std::domain_error("DiracLikeParams: c must be > 0");
  if (!(hbar > 0.0)) throw std::domain_error("DiracLikeParams: hbar must be > 0");
}

ComplexMatrix diraclike_hamiltonian(const DiracLikeParams& params) {
  params.validate();
  const double coeff_x = params.c * params.p.x - params.mu * params.efield.x;
  const double coeff_y = params.c * params.p.y - params.mu * params.efield.y;
  const double coeff_z = params.c * params.p.z - params.mu * params.efield.z;

  ComplexMatrix h = cplx(coeff_x) * make_alpha(Axis::X) + cplx(coeff_y) * make_alpha(Axis::Y) +
                    cplx(coeff_z) * make_alpha(Axis::Z) +
                    cplx(params.hbar * params.omega) * make_beta1();
  return h;
}

Trajectory4 propagate4(const Spinor4& initial, const ComplexMatrix& h, double duration,
                       double dt, double hbar) {
  if (h.size() != 4) throw std::invalid_argument("propagate4: H must be 4x4");
  if (!h.is_hermitian()) throw std::invalid_argument("propagate4: H must be Hermitian");
  if (!(dt > 0.0)) throw std::invalid_argument("propagate4: dt must be > 0");
  if (duration < 0.0) throw std::invalid_argument("propagate4: duration must be >= 0");
  if (!(hbar > 0.0)) throw std::invalid_argument("propagate4: hbar must be > 0");
  const long long n_steps = static_cast<long long>(std::ceil(duration / dt - 1e-9));

  const ComplexMatrix hsym = cplx(0.5) * (h + h.adjoint());
  const ComplexMatrix u = matrix_exponential(cplx(0.0, -dt / hbar) * hsym);

  Trajectory4 out;
  out.reserve(static_cast<std::size_t>(n_steps) + 1);
  std::array<cplx, 4> amps = initial.amplitudes();
  for (long long i = 0; i <= n_steps; ++i) {
    const Spinor4 state = Spinor4::raw(amps);
    out.push_back({static_cast<double>(i) * dt, state, state.populations()});
    if (i < n_steps) amps = u.apply(amps);
  }
  return out;
}

std::vector<PlaneWaveMode> plane_wave_modes(const DiracLikeParams& params) {
  const ComplexMatrix h = diraclike_hamiltonian(params);
  const HermitianEigensystem es = hermitian_eigensystem(h);

  std::vector<PlaneWaveMode> modes(4);
  for (int k = 0; k < 4; ++k) {
    modes[static_cast<std::size_t>(k)].eigenvalue = es.values[static_cast<std::size_t>(k)];
    for (int i = 0; i < 4; ++i) {
      modes[static_cast<std::size_t>(k)].amplitude[static_cast<std::size_t>(i)] =
          es.vectors(i, k);
    }
  }
  return modes;
}

namespace {

double flip_residual(const ComplexMatrix& op, const ComplexMatrix& conjugator) {
  // || C op C^H + op ||_max: zero iff conjugation by C flips the sign of op.
  return (conjugator * op * conjugator.adjoint() + op).max_abs();
}

}  // namespace

ParityAuditReport parity_audit_on(const ComplexMatrix& alpha_x, const ComplexMatrix& alpha_y,
                                  const ComplexMatrix& alpha_z, const ComplexMatrix& beta) {
  ParityAuditReport rep;

  const ComplexMatrix* alphas[3] = {&alpha_x, &alpha_y, &alpha_z};
  for (int a = 0; a < 3; ++a) {
    const double res = flip_residual(*alphas[a], beta);
    rep.alpha_is_polar[static_cast<std::size_t>(a)] = res < ALGEBRA_TOL;
    rep.max_residual = std::max(rep.max_residual, res);
  }

  // On the 2-level space the internal parity candidates are the unitaries
  // acting uniformly on the sigma vector: +-identity (which by Schur's lemma
  // exhausts the operators commuting with all three sigma_a) plus, for the
  // explicit products' sake, the Pauli matrices themselves. None flips all
  // three components simultaneously, so no compensator exists.
  const ComplexMatrix id2 = ComplexMatrix::identity(2);
  const ComplexMatrix candidates[5] = {id2, cplx(-1.0) * id2, make_pauli(Axis::X),
                                       make_pauli(Axis::Y), make_pauli(Axis::Z)};
  const ComplexMatrix sigmas[3] = {make_pauli(Axis::X), make_pauli(Axis::Y),
                                   make_pauli(Axis::Z)};
  double best = -1.0;
  for (const ComplexMatrix& cand : candidates) {
    double worst_axis = 0.0;
    for (const ComplexMatrix& sigma : sigmas) {
      worst_axis = std::max(worst_axis, flip_residual(sigma, cand));
    }
    if (best < 0.0 || worst_axis < best) best = worst_axis;
  }
  rep.sigma_best_residual = best;
  rep.sigma_has_compensator = best < ALGEBRA_TOL;
  return rep;
}

ParityAuditReport parity_audit() {
  return parity_audit_on(make_alpha(Axis::X), make_alpha(Axis::Y), make_alpha(Axis::Z),
                         make_dirac_beta());
}

}  // namespace resatom

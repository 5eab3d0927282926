#pragma once

// Laser-driven interatomic potential with its frequency coefficients, a
// numerically stable evaluation across the tangent poles of the printed
// form, and the attenuation / photon-exchange regime checks.

#include "resatom/dipole.hpp"
#include "resatom/twolevel.hpp"

namespace resatom {

struct DrivenPairParams {
  double mu = 0.0;        // transition dipole element
  double intensity = 0.0; // drive intensity I0
  double beta_pop = 0.0;  // population inversion rho2 - rho1
  double gamma1 = 0.0;    // damping constant of atom 1, > 0
  double gamma2 = 0.0;    // damping constant of atom 2, > 0
  double delta1 = 0.0;    // detuning omega0 - omega1
  double delta2 = 0.0;    // detuning omega0 - omega2

  void validate() const;  // gammas > 0
};

struct FrequencyCoefficients {
  double a = 0.0;  // > 0 whenever the gammas are
  double b = 0.0;
};

//   a = G1 G2^2 / (G2^2 + D2^2)
//   b = G1 G2 D2 / (G2^2 + D2^2)
//     + (G1+G2) [ (G1+G2) D1 + G1 (D1 - D2) ] / [ (G1+G2)^2 + (D1-D2)^2 ]
FrequencyCoefficients frequency_coefficients(const DrivenPairParams& params);

struct DrivenEvaluation {
  double value = 0.0;
  double a = 0.0;
  double b = 0.0;
  double exponent_arg = 0.0;  // the argument of the damping exponential
};

// Driven-pair potential
//   U = -[pi mu^2 I0 beta / (12 r (G1^2 + D1^2))]
//       * (a cos(kr) + b sin(kr)) * exp(-kr |tan(phi - kr)|) * cos(kvec.rvec)
// with phi = atan2(b, a). The identity
//   (b - a tan kr) / (a + b tan kr) = tan(phi - kr)
// removes the spurious tan(kr) poles of the literal expression; where
// phi - kr approaches pi/2 (mod pi) the exponential underflows and U = 0 is
// returned (limit convention). kr is the product of scalar magnitudes; the
// trailing cosine takes the 3-vector dot product.
double driven_potential(const DrivenPairParams& params, const PairGeometry& geom);

// Same evaluation, reporting the coefficients and exponent alongside.
DrivenEvaluation driven_potential_eval(const DrivenPairParams& params, const PairGeometry& geom);

// The literal printed form with tan(kr); retained purely as an agreement
// oracle for driven_potential. Throws pole_error when kr falls within
// pole_eps of pi/2 (mod pi) or |a + b tan(kr)| <= pole_eps.
double driven_potential_naive(const DrivenPairParams& params, const PairGeometry& geom,
                              double pole_eps = 1e-8);

// Bouguer-Lambert-Beer attenuation I = I0 exp(-k r); negative k describes an
// amplifying medium. Throws std::invalid_argument for r < 0.
double attenuate(double i0, double k_medium, double r);

struct ExchangeReport {
  double mean_exchange_range = 0.0;  // 1 / k_medium; infinite when k <= 0
  bool feasible = false;             // k_medium * lambda > 1
  double k_required = 0.0;           // 1 / lambda, the threshold for this wavelength
  // The stated optical-region reference threshold, in reciprocal
  // centimeters; reported as-is, independent of the general criterion.
  double optical_threshold_per_cm = 100.0;
};

// Can two atoms closer than a wavelength trade a resonant photon in this
// medium? The mean exchange range 1/k must beat lambda. k_medium <= 0 is
// reported as infeasible with infinite range, not an error.
ExchangeReport exchange_feasibility(double k_medium, double lambda);

struct RegimeReport {
  ValidityReport weak_field;
  ExchangeReport exchange;
  double intensity_at_r = 0.0;
};

RegimeReport assess_regime(const TwoLevelAtom& atom, const DriveField& field, double hbar,
                           double k_medium, double lambda, double r);

}  // namespace resatom

#include "resatom/driven.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace resatom {

void DrivenPairParams::validate() const {
  if (!(gamma1 > 0.0) || !(gamma2 > 0.0)) {
    throw std::domain_error("DrivenPairParams: damping constants must be > 0");
  }
}

FrequencyCoefficients frequency_coefficients(const DrivenPairParams& p) {
  p.validate();
  const double g1 = p.gamma1;
  const double g2 = p.gamma2;
  const double d1 = p.delta1;
  const double d2 = p.delta2;

  FrequencyCoefficients fc;
  fc.a = g1 * g2 * g2 / (g2 * g2 + d2 * d2);

  const double gsum = g1 + g2;
  const double ddiff = d1 - d2;
  fc.b = g1 * g2 * d2 / (g2 * g2 + d2 * d2) +
         gsum * (gsum * d1 + g1 * ddiff) / (gsum * gsum + ddiff * ddiff);
  return fc;
}

namespace {

struct Prefactor {
  double pref;      // -pi mu^2 I0 beta / (12 r (G1^2 + D1^2))
  double kr;        // scalar k * |rvec|
  double cos_kdotr; // cos(kvec . rvec)
};

Prefactor common_factors(const DrivenPairParams& p, const PairGeometry& geom) {
  p.validate();
  geom.validate();
  const double r = geom.rvec.norm();
  Prefactor f;
  f.pref = -std::numbers::pi * p.mu * p.mu * p.intensity * p.beta_pop /
           (12.0 * r * (p.gamma1 * p.gamma1 + p.delta1 * p.delta1));
  f.kr = geom.k * r;
  f.cos_kdotr = std::cos(dot(geom.kvec, geom.rvec));
  return f;
}

}  // namespace

DrivenEvaluation driven_potential_eval(const DrivenPairParams& p, const PairGeometry& geom) {
  const FrequencyCoefficients fc = frequency_coefficients(p);
  const Prefactor f = common_factors(p, geom);

  const double phi = std::atan2(fc.b, fc.a);
  const double tan_shift = std::tan(phi - f.kr);

  DrivenEvaluation out;
  out.a = fc.a;
  out.b = fc.b;
  // kr = 0 makes the exponent exactly 0 regardless of tan_shift; guarding it
  // avoids 0 * inf at an exact tangent pole.
  out.exponent_arg = (f.kr == 0.0) ? 0.0 : -f.kr * std::abs(tan_shift);
  const double damping = std::exp(out.exponent_arg);  // underflows to 0 at the poles
  out.value = f.pref * (fc.a * std::cos(f.kr) + fc.b * std::sin(f.kr)) * damping * f.cos_kdotr;
  return out;
}

double driven_potential(const DrivenPairParams& p, const PairGeometry& geom) {
  return driven_potential_eval(p, geom).value;
}

double driven_potential_naive(const DrivenPairParams& p, const PairGeometry& geom,
                              double pole_eps) {
  const FrequencyCoefficients fc = frequency_coefficients(p);
  const Prefactor f = common_factors(p, geom);

  // tan(kr) itself blows up at kr = pi/2 (mod pi).
  if (std::abs(std::remainder(f.kr - 0.5 * std::numbers::pi, std::numbers::pi)) <= pole_eps) {
    throw pole_error("driven_potential_naive: kr within pole_eps of pi/2 (mod pi)");
  }
  const double tan_kr = std::tan(f.kr);
  const double denom = fc.a + fc.b * tan_kr;
  if (std::abs(denom) <= pole_eps) {
    throw pole_error("driven_potential_naive: a + b tan(kr) within pole_eps of zero");
  }

  const double ratio = (fc.b - fc.a * tan_kr) / denom;
  const double damping = std::exp(-f.kr * std::abs(ratio));
  return f.pref * (fc.a * std::cos(f.kr) + fc.b * std::sin(f.kr)) * damping * f.cos_kdotr;
}

double attenuate(double i0, double k_medium, double r) {
  if (r < 0.0) throw std::invalid_argument("attenuate: r must be >= 0");
  return i0 * std::exp(-k_medium * r);
}

ExchangeReport exchange_feasibility(double k_medium, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("exchange_feasibility: lambda must be > 0");
  ExchangeReport rep;
  rep.k_required = 1.0 / lambda;
  if (k_medium <= 0.0) {
    rep.mean_exchange_range = std::numeric_limits<double>::infinity();
    rep.feasible = false;
    return rep;
  }
  rep.mean_exchange_range = 1.0 / k_medium;
  rep.feasible = k_medium * lambda > 1.0;
  return rep;
}

RegimeReport assess_regime(const TwoLevelAtom& atom, const DriveField& field, double hbar,
                           double k_medium, double lambda, double r) {
  RegimeReport rep;
  rep.weak_field = check_weak_field(atom, field, hbar);
  rep.exchange = exchange_feasibility(k_medium, lambda);
  rep.intensity_at_r = attenuate(field.intensity, k_medium, r);
  return rep;
}

}  // namespace resatom

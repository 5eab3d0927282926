#include "resatom/dipole.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace resatom {

void PairGeometry::validate() const {
  if (rvec.norm() == 0.0) throw singularity_error("PairGeometry: zero separation");
  const double kn = kvec.norm();
  if (std::abs(kn - k) > 1e-12 * std::max(1.0, std::abs(k))) {
    throw std::invalid_argument("PairGeometry: |kvec| must equal k");
  }
}

PairGeometry make_pair_geometry(const Vec3& rvec, double k, const Vec3& k_direction) {
  PairGeometry g;
  g.rvec = rvec;
  g.k = k;
  g.kvec = (k == 0.0) ? Vec3{} : k_direction.normalized().scaled(k);
  g.validate();
  return g;
}

CVec3 induced_dipole(double xi, const CVec3& efield) { return cplx(xi) * efield; }

namespace {

struct RadialTerms {
  cplx direct;      // k^2/r + i k/r^2 - 1/r^3
  cplx projected;   // k^2/r + 3 i k/r^2 - 3/r^3
  cplx phase;       // e^{ikr}
  Vec3 unit_r;
};

RadialTerms radial_terms(const PairGeometry& geom) {
  const double r = geom.rvec.norm();
  if (r == 0.0) throw singularity_error("dipole field evaluated at zero separation");
  const double k = geom.k;
  const double inv_r = 1.0 / r;
  const double inv_r2 = inv_r * inv_r;
  const double inv_r3 = inv_r2 * inv_r;
  RadialTerms t;
  t.direct = cplx(k * k * inv_r - inv_r3, k * inv_r2);
  t.projected = cplx(k * k * inv_r - 3.0 * inv_r3, 3.0 * k * inv_r2);
  t.phase = std::polar(1.0, k * r);
  t.unit_r = geom.rvec.scaled(inv_r);
  return t;
}

}  // namespace

CVec3 dipole_field(const Vec3& d, const PairGeometry& geom) {
  const RadialTerms t = radial_terms(geom);
  const double proj = dot(t.unit_r, d);
  const CVec3 dc = CVec3::from(d);
  const CVec3 rc = CVec3::from(t.unit_r);
  return t.phase * (t.direct * dc - (cplx(proj) * t.projected) * rc);
}

cplx pair_energy(const Vec3& d1, const Vec3& d2, const PairGeometry& geom) {
  const RadialTerms t = radial_terms(geom);
  const double dd = dot(d1, d2);
  const double p1 = dot(t.unit_r, d1);
  const double p2 = dot(t.unit_r, d2);
  return -(cplx(dd) * t.direct - cplx(p1 * p2) * t.projected) * t.phase;
}

cplx averaged_pair_energy(double dmag, double r, double k) {
  if (!(r > 0.0)) throw std::invalid_argument("averaged_pair_energy: r must be > 0");
  const double magnitude = 2.0 * dmag * dmag * k * k / (3.0 * r);
  return -magnitude * std::polar(1.0, k * r);
}

double averaged_pair_energy_printed(double dmag, double r, double k) {
  if (!(r > 0.0)) throw std::invalid_argument("averaged_pair_energy: r must be > 0");
  return -2.0 * dmag * dmag * k * k / (3.0 * r);
}

double phased_average(double dmag, const PairGeometry& geom) {
  geom.validate();
  const double r = geom.rvec.norm();
  return -2.0 * dmag * dmag * geom.k * geom.k / (3.0 * r) * std::cos(dot(geom.kvec, geom.rvec));
}

AverageEstimate mc_orientation_average(double dmag, const PairGeometry& geom,
                                       long long n_samples, std::uint64_t seed,
                                       OrientationMode mode) {
  geom.validate();
  if (n_samples < 1000) {
    throw std::invalid_argument("mc_orientation_average: need at least 1000 samples");
  }

  SplitMix64 rng(seed);

  // Welford accumulation keeps the running mean well conditioned even deep
  // in the near field, where single samples dwarf the average.
  double mean_re = 0.0, mean_im = 0.0;
  double m2_re = 0.0, m2_im = 0.0;
  for (long long i = 1; i <= n_samples; ++i) {
    const Vec3 u1 = sample_unit_vector(rng);
    const Vec3 u2 = (mode == OrientationMode::Correlated) ? u1 : sample_unit_vector(rng);
    const cplx v = pair_energy(u1.scaled(dmag), u2.scaled(dmag), geom);

    const double dre = v.real() - mean_re;
    mean_re += dre / static_cast<double>(i);
    m2_re += dre * (v.real() - mean_re);

    const double dim = v.imag() - mean_im;
    mean_im += dim / static_cast<double>(i);
    m2_im += dim * (v.imag() - mean_im);
  }

  const double n = static_cast<double>(n_samples);
  AverageEstimate est;
  est.mean = cplx(mean_re, mean_im);
  est.stderr_re = std::sqrt(std::max(0.0, m2_re) / (n - 1.0) / n);
  est.stderr_im = std::sqrt(std::max(0.0, m2_im) / (n - 1.0) / n);
  est.n_samples = n_samples;
  est.seed = seed;
  est.algorithm = RNG_ALGORITHM;
  return est;
}

}  // namespace resatom

#pragma once

// Classical dipole-dipole chain: induced moment, retarded dipole field, pair
// interaction energy, and the orientation average whose near-field terms
// cancel exactly. A seeded Monte Carlo estimator provides the independent
// brute-force route to the same average.
//
// Formulas are Gaussian-style, exactly as they stand; no unit conversion is
// performed, so all inputs must share one consistent unit system.

#include <cstdint>
#include <string>

#include "resatom/linalg.hpp"
#include "resatom/random.hpp"

namespace resatom {

struct PairGeometry {
  Vec3 rvec{};     // separation, must be nonzero
  double k = 0.0;  // scalar wavenumber for the retarded phase
  Vec3 kvec{};     // drive wavevector; |kvec| must equal k

  void validate() const;
};

// kvec = k * normalize(k_direction); with k = 0 any direction gives kvec = 0.
PairGeometry make_pair_geometry(const Vec3& rvec, double k, const Vec3& k_direction);

// d = xi * E, componentwise.
CVec3 induced_dipole(double xi, const CVec3& efield);

// Retarded field of an oscillating dipole at separation rvec:
//   E_d = { d (k^2/r + i k/r^2 - 1/r^3)
//         - e_r (e_r.d) (k^2/r + 3 i k/r^2 - 3/r^3) } e^{i k r},
// r = |rvec|, e_r = rvec/r. Throws singularity_error at r = 0.
CVec3 dipole_field(const Vec3& d, const PairGeometry& geom);

// Interaction energy U' = -d2 . E_d(d1): the energy of moment d2 in the
// retarded field of d1. Symmetric under d1 <-> d2.
cplx pair_energy(const Vec3& d1, const Vec3& d2, const PairGeometry& geom);

// Closed-form average of pair_energy over a common uniformly random
// orientation (d1 = d2 = dmag*u): the 1/r^2 and 1/r^3 terms cancel under
// <(e_r.d)^2> = d^2/3, leaving
//   <U'> = -(2 d^2 k^2 / 3r) e^{ikr}.
cplx averaged_pair_energy(double dmag, double r, double k);

// The phase-stripped real form of the same average, -(2 d^2 k^2)/(3 r).
double averaged_pair_energy_printed(double dmag, double r, double k);

// Driven-pair average carrying the plane-wave phase difference of the two
// dipoles instead of the retarded factor:
//   U = -(2 d^2 k^2 / 3r) cos(kvec.rvec).
double phased_average(double dmag, const PairGeometry& geom);

enum class OrientationMode {
  Correlated,   // d1 = d2 = dmag*u, one direction per sample (the default:
                // equal driven dipoles share their orientation)
  Independent,  // d1, d2 drawn independently; kept for contrast, averages to 0
};

struct AverageEstimate {
  cplx mean{};
  double stderr_re = 0.0;
  double stderr_im = 0.0;
  long long n_samples = 0;
  std::uint64_t seed = 0;
  std::string algorithm;  // generator identifier, see RNG_ALGORITHM
};

// Brute-force oracle for averaged_pair_energy: averages pair_energy over
// sampled orientations, sequentially, bit-reproducible for a given seed.
// Requires n_samples >= 1000 (throws std::invalid_argument below that).
AverageEstimate mc_orientation_average(double dmag, const PairGeometry& geom,
                                       long long n_samples, std::uint64_t seed,
                                       OrientationMode mode = OrientationMode::Correlated);

}  // namespace resatom

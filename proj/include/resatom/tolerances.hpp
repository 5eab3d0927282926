#pragma once

namespace resatom {

// Central tolerance constants. Exact operator identities hold to ALGEBRA_TOL;
// decompositions reconstruct their input to RECON_TOL; propagated states keep
// unit norm to NORM_DRIFT_TOL over a full trajectory.
inline constexpr double ALGEBRA_TOL = 1e-12;
inline constexpr double RECON_TOL = 1e-10;
inline constexpr double NORM_DRIFT_TOL = 1e-10;

}  // namespace resatom

#pragma once

// Composable self-checks behind the audit command: the parity audit, the
// Monte Carlo vs closed-form orientation average, and the stable vs literal
// driven-potential agreement sample. All numbers, thresholds, and pass/fail
// decisions are computed here; the CLI only formats them.

#include <cstdint>

#include "resatom/diraclike.hpp"
#include "resatom/dipole.hpp"
#include "resatom/driven.hpp"

namespace resatom {

struct SelfAuditConfig {
  double dmag = 1.0;
  double r = 1.0;
  double k = 1.0;
  long long n_samples = 200000;
  std::uint64_t seed = 1;
  long long n_agreement = 10000;
};

// The Monte Carlo mean must sit within this many standard errors of the
// closed form, per component.
inline constexpr double AUDIT_MC_SIGMAS = 4.0;
// Stable and literal driven-potential evaluations must agree to this
// relative difference away from the poles.
inline constexpr double AUDIT_AGREEMENT_TOL = 1e-10;

struct SelfAuditReport {
  ParityAuditReport parity;
  bool parity_pass = false;

  AverageEstimate mc;
  cplx mc_expected{};
  double mc_dev_sigmas_re = 0.0;
  double mc_dev_sigmas_im = 0.0;
  bool mc_pass = false;

  double agreement_max_rel_diff = 0.0;
  long long agreement_points = 0;
  bool agreement_pass = false;

  bool pass = false;
};

SelfAuditReport run_self_audit(const SelfAuditConfig& cfg);

}  // namespace resatom

#pragma once

#include <stdexcept>

namespace resatom {

// Evaluation of a formula at a point where it is singular (zero separation).
struct singularity_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Raised by the literal-form driven-potential evaluator near a tangent pole,
// where the printed expression loses all accuracy. The stable evaluator
// handles these points; this error tells the caller to trust only that form.
struct pole_error : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace resatom

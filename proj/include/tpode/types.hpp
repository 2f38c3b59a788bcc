#pragma once

#include <stdexcept>
#include <string>

namespace tpode {

// Error codes shared with the C API (see include/tpode.h).
enum class errc {
  invalid_argument = 1,
  degenerate_roots,
  invalid_r,
  constraint_violation,
  complex_index,
  index_out_of_range,
  degenerate_indices,
  breakdown,
  pole_in_sum,
  endpoint_evaluation,
  near_singular_point,
  stiffness_failure,
  not_symmetrizable,
  deformed_measure_unknown,
  numerical_failure,
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what, int index = -1)
      : std::runtime_error(what), code_(code), index_(index) {}

  errc code() const noexcept { return code_; }
  // Recursion index at which a breakdown occurred, -1 if not applicable.
  int index() const noexcept { return index_; }

private:
  errc code_;
  int index_;
};

// Exponential damping choice in the basis: Top has delta = 0, Bottom has
// delta = d. Every +/- pair in the operator and recursion coefficients flips
// between the two.
enum class Branch { Top, Bottom };

// Upper sign of each +/- pair belongs to Top.
inline double branch_sign(Branch b) noexcept {
  return b == Branch::Top ? 1.0 : -1.0;
}

// Sign choice for a square root whose square is prescribed.
enum class RootSign { Plus, Minus };

// The ten coefficients of the canonical equation
//   x(1-x)(r-x) [y'' + (a/x - b/(1-x) - c/(r-x) + d) y']
//     + A/x - B/(1-x) - C/(r-x) + x D - E = 0
// on 0 < x < 1 with singular points {0, 1, r, inf}, r > 1, d != 0.
struct CanonicalParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 1.0;
  double r = 2.0;
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  double D = 0.0;
  double E = 0.0;
};

}  // namespace tpode

#ifndef CFVAR_NUMKIT_LSERIES_HPP
#define CFVAR_NUMKIT_LSERIES_HPP

#include <cstddef>
#include <vector>

#include "cfvar/numkit/real.hpp"

namespace cfvar::numkit {

/// a_1..a_n of q * prod_{m>=1} (1 - q^{2m})^4 (1 - q^{4m})^4.
std::vector<BigInt> eta_product_coefficients(std::size_t n);

struct LValue {
  Real value;
  /// Functional-equation sign picked by the two-cutoff consistency test.
  int epsilon = 0;
  std::size_t coefficients = 0;
  /// Relative disagreement between the two cutoffs for the chosen and the rejected sign.
  double discrepancy = 0;
  double rejected_discrepancy = 0;
};

/// L(f, s) for f = eta(2tau)^4 eta(4tau)^4 (weight 4, level 8) at s = 2 or 3,
/// from the smoothed functional-equation sum with incomplete gamma kernels.
LValue lvalue_eta8(int s, Precision p);

}  // namespace cfvar::numkit

#endif  // CFVAR_NUMKIT_LSERIES_HPP

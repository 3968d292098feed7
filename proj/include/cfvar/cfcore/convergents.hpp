#ifndef CFVAR_CFCORE_CONVERGENTS_HPP
#define CFVAR_CFCORE_CONVERGENTS_HPP

#include <optional>
#include <vector>

#include "cfvar/cfcore/cfspec.hpp"
#include "cfvar/numkit/real.hpp"

namespace cfvar {

/// p/q is the depth-n truncation b0 + a1/(b1 + ... + a_n/b_n).
struct ConvergentPair {
  long n = 0;
  BigRational p;
  BigRational q;
};

inline constexpr long kDefaultMaxDepth = 2000;

/// Plain Wallis pairs for n = 0..N (no reduction), p_{-1}=1, p_0=b_0, q_{-1}=0, q_0=1.
/// Throws DomainError at a zero partial numerator.
std::vector<ConvergentPair> convergents(const CFSpec& cf, long N,
                                        const std::optional<ZValue>& z = std::nullopt);

/// Convergent values for n = 0..N at precision p, from an integer-scaled Wallis
/// recursion. A zero a_n ends the fraction: later entries repeat the last value.
/// Entries with q_n = 0 are NaN.
std::vector<Real> convergent_values(const CFSpec& cf, long N, Precision p,
                                    const std::optional<ZValue>& z = std::nullopt);

struct LimitResult {
  Real value;
  /// Oscillation estimate: |C_N - C_{N-1}| for alternating tails, 10|C_N - C_{N-2}| otherwise.
  Real error;
  long depth = 0;
  bool alternating = false;
  /// A zero partial numerator made the fraction finite; value is exact to working precision.
  bool terminated = false;
};

/// Extends the depth until the oscillation is below 10^-(digits+1).
/// Throws NoConvergence after max_terms.
LimitResult limit(const CFSpec& cf, Precision p, const std::optional<ZValue>& z = std::nullopt,
                  long max_terms = kDefaultMaxDepth);

}  // namespace cfvar

#endif  // CFVAR_CFCORE_CONVERGENTS_HPP

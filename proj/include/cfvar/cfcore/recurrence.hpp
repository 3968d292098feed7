#ifndef CFVAR_CFCORE_RECURRENCE_HPP
#define CFVAR_CFCORE_RECURRENCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "cfvar/cfcore/cfspec.hpp"
#include "cfvar/numkit/real.hpp"

namespace cfvar {

/// R+(n) y(n+1) = R0(n) y(n) + R-(n) y(n-1).
struct ThreeTermRecurrence {
  Poly2 r_plus;
  Poly2 r_zero;
  Poly2 r_minus;

  std::string to_string() const;
  friend bool operator==(const ThreeTermRecurrence&, const ThreeTermRecurrence&) = default;
};

/// y(n0), y(n0+1), ..., y(N) from the two initial values at n0 and n0+1.
std::vector<BigRational> propagate(const ThreeTermRecurrence& rec, const BigRational& y0,
                                   const BigRational& y1, long N, long n0 = 0,
                                   const std::optional<ZValue>& z = std::nullopt);

/// lcm(1, 3, 5, ..., 2n-1); 1 for n = 0.
BigInt odd_lcm(long n);

struct DenominatorRow {
  long n = 0;
  BigInt denominator;
  BigInt odd_lcm_squared;
  /// Least k with denominator | k * odd_lcm_squared.
  BigInt cofactor;
};

/// Reduced denominators of the solution with y(0) = y0, y(1) = y1, for n = 0..N.
std::vector<DenominatorRow> denominator_profile(const ThreeTermRecurrence& rec, const BigRational& y0,
                                                const BigRational& y1, long N);

struct RecurrenceCF {
  /// Fraction with no heads: b_m = R0(m), a_m = R-(m) R+(m-1).
  CFSpec tail;
  /// s(n) = prod_{j<n} R+(j); the Wallis numerators are P_m = s(m+1) y(m+1).
  Poly2 step;
  long delta = 1;
};

/// Supported pattern: R+ free of z and equal to c (n + r)^k with -r not a
/// nonnegative integer. Anything else raises SpecError.
RecurrenceCF recurrence_to_cf(const ThreeTermRecurrence& rec);

/// prod_{j<n} R+(j) evaluated exactly.
BigRational normalization(const RecurrenceCF& rc, long n, const std::optional<ZValue>& z = std::nullopt);

struct RecurrenceCheck {
  std::vector<long> indices;
  /// |R+ y(n+1) - R0 y(n) - R- y(n-1)| per checked n.
  std::vector<double> residuals;
  double max_residual = 0;
  bool pass = true;
};

/// values[i] = y(n0 + i); residuals for n0+1 .. n0+len-2. Exact check demands 0.
RecurrenceCheck check_recurrence(const ThreeTermRecurrence& rec, const std::vector<BigRational>& values,
                                 long n0 = 0, const std::optional<ZValue>& z = std::nullopt);
RecurrenceCheck check_recurrence(const ThreeTermRecurrence& rec, const std::vector<Real>& values, double tol,
                                 long n0 = 0, const std::optional<Real>& z = std::nullopt);

/// Real value of a polynomial at integer or real n and real z.
Real eval_real(const Poly2& poly, const Real& n, const std::optional<Real>& z);

}  // namespace cfvar

#endif  // CFVAR_CFCORE_RECURRENCE_HPP

#ifndef CFVAR_CFCORE_RATE_HPP
#define CFVAR_CFCORE_RATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "cfvar/cfcore/cfspec.hpp"
#include "cfvar/numkit/const_expr.hpp"

namespace cfvar {

enum class RateSign { plus, alt_n, alt_n1 };
enum class RateKind { geometric, algebraic };

/// limit - p_n/q_n ~ sign(n) * C / rho^(e n + f)   (geometric)
/// limit - p_n/q_n ~ sign(n) * C * n^-k             (algebraic)
/// rho may be negative (an alternating error then comes from rho itself); |rho| > 1.
struct RateModel {
  RateKind kind = RateKind::geometric;
  RateSign sign = RateSign::plus;
  /// Absent when only the base of the decay is known.
  std::optional<numkit::ConstExpr> C;
  numkit::ConstExpr rho = numkit::ConstExpr::literal(2);
  long e = 1;
  long f = 0;
  long k = 0;

  int sign_at(long n) const;
  std::string to_string() const;
};

std::string_view rate_sign_name(RateSign s);
std::optional<RateSign> rate_sign_from_name(std::string_view s);

struct RateFit {
  long from = 0, to = 0;
  /// Observed sign pattern of limit - p_n/q_n over the window, if it fits one.
  std::optional<RateSign> sign_hat;
  /// sign(err(n)) agrees with the model's sign(n) * sign(C) * sign(rho)^(en+f) everywhere.
  bool sign_matches = false;
  /// |err(n)/err(n+1)| per step; ratios.back() estimates |rho|^e (geometric).
  std::vector<double> ratios;
  double ratio_hat = 0;
  /// Model value |rho|^e, or 0 for algebraic models.
  double ratio_model = 0;
  /// log|err(m)/err(to)| / log(to/m) with m the first window index of the same
  /// parity as `to`, so an alternating leading term cannot bias it (algebraic).
  double exponent_hat = 0;
  /// err(to) * rho^(e to + f) / sign(to), or err(to) * to^k / sign(to).
  double c_hat = 0;
  std::optional<double> c_model;
  bool ratios_monotone = false;
};

/// Fits the decay of limit - p_n/q_n for n in [from, to]. true_limit must carry
/// more digits than the smallest error; otherwise PrecisionUnavailable.
RateFit rate_fit(const CFSpec& cf, const Real& true_limit, long from, long to, const RateModel& model,
                 const std::optional<ZValue>& z = std::nullopt);

}  // namespace cfvar

#endif  // CFVAR_CFCORE_RATE_HPP

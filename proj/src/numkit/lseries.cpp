#include "cfvar/numkit/lseries.hpp"

#include <cmath>

#include "cfvar/errors.hpp"
#include "cfvar/numkit/special.hpp"

namespace cfvar::numkit {
namespace {

constexpr int kWeight = 4;
constexpr std::size_t kMaxCoefficients = 6000;

// Multiplies the truncated series by (1 - q^step)^4 in place.
void mul_factor4(std::vector<BigInt>& c, std::size_t step) {
  for (int rep = 0; rep < 4; ++rep)
    for (std::size_t i = c.size(); i-- > step;) c[i] -= c[i - step];
}

struct Halves {
  Real direct;  // sum a_n (A/n)^s Gamma(s, n t / A)
  Real dual;    // sum a_n (A/n)^(k-s) Gamma(k-s, n / (t A))
};

Halves smoothed_sum(const std::vector<BigInt>& a, int s, const Real& t, Precision w) {
  const Real a_scale = sqrt(Real(8L, w)) / (pi(w) * 2);
  Real direct(0L, w), dual(0L, w);
  const Real sr(static_cast<long>(s), w), dr(static_cast<long>(kWeight - s), w);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const long n = static_cast<long>(i + 1);
    const Real ratio = a_scale / n;
    const Real an(a[i], w);
    direct += an * pow(ratio, static_cast<long>(s)) *
              incomplete_gamma_upper(sr, t / ratio, w);
    dual += an * pow(ratio, static_cast<long>(kWeight - s)) *
            incomplete_gamma_upper(dr, Real(1L, w) / (t * ratio), w);
  }
  return {direct, dual};
}

}  // namespace

std::vector<BigInt> eta_product_coefficients(std::size_t n) {
  // series in q of prod (1-q^{2m})^4 (1-q^{4m})^4, degrees 0..n-1
  std::vector<BigInt> c(n, 0);
  if (n == 0) return c;
  c[0] = 1;
  for (std::size_t m = 1; 2 * m < n; ++m) {
    mul_factor4(c, 2 * m);
    if (4 * m < n) mul_factor4(c, 4 * m);
  }
  return c;
}

LValue lvalue_eta8(int s, Precision p) {
  if (s != 2 && s != 3) throw DomainError("lvalue_eta8 is implemented for s = 2 and s = 3");
  const Precision w = p.with_guard();
  // kernel decay exp(-2 pi n / sqrt 8 * min(t, 1/t)); the second cutoff uses t = 11/10
  const double per_term = 2 * M_PI / std::sqrt(8.0) / 1.1;
  const auto needed =
      static_cast<std::size_t>(std::ceil((w.digits() + 5) * std::log(10.0) / per_term)) + 2;
  if (needed > kMaxCoefficients)
    throw PrecisionUnavailable("lvalue_eta8: coefficient budget exceeded for " +
                               std::to_string(p.digits()) + " digits");
  const auto a = eta_product_coefficients(needed);

  const Real one(1L, w);
  const Real t2(BigRational(11, 10), w);
  const Halves h1 = smoothed_sum(a, s, one, w);
  const Halves h2 = smoothed_sum(a, s, t2, w);

  LValue out;
  double best = INFINITY, other = INFINITY;
  Real best_lambda(w);
  for (int eps : {1, -1}) {
    const Real l1 = h1.direct + h1.dual * static_cast<long>(eps);
    const Real l2 = h2.direct + h2.dual * static_cast<long>(eps);
    const double d = relative_error(l1, l2).to_double();
    if (d < best) {
      other = best;
      best = d;
      best_lambda = l1;
      out.epsilon = eps;
    } else {
      other = d;
    }
  }
  if (!(best < std::pow(10.0, -p.digits() / 2.0)))
    throw NoConvergence("lvalue_eta8: functional-equation self-consistency check failed");
  out.discrepancy = best;
  out.rejected_discrepancy = other;
  out.coefficients = needed;
  // Lambda(s) = A^s Gamma(s) L(s)
  const Real a_scale = sqrt(Real(8L, w)) / (pi(w) * 2);
  const Real gs = gamma(Real(static_cast<long>(s), w), w);
  out.value = (best_lambda / (pow(a_scale, static_cast<long>(s)) * gs)).rounded(p);
  return out;
}

}  // namespace cfvar::numkit

#include "cfvar/cfcore/recurrence.hpp"

#include <cmath>

#include "cfvar/errors.hpp"

namespace cfvar {

std::string ThreeTermRecurrence::to_string() const {
  return "(" + r_plus.to_string() + ")y(n+1) = (" + r_zero.to_string() + ")y(n) + (" +
         r_minus.to_string() + ")y(n-1)";
}

std::vector<BigRational> propagate(const ThreeTermRecurrence& rec, const BigRational& y0,
                                   const BigRational& y1, long N, long n0, const std::optional<ZValue>& z) {
  if (rec.r_plus.is_zero()) throw SpecError("leading coefficient R+ is identically zero");
  std::vector<BigRational> y{y0};
  if (N >= n0 + 1) y.push_back(y1);
  for (long n = n0 + 1; n < N; ++n) {
    const BigRational lead = rec.r_plus.eval(n, z);
    if (lead == 0) throw DomainError("R+(" + std::to_string(n) + ") = 0");
    const auto i = static_cast<std::size_t>(n - n0);
    y.push_back((rec.r_zero.eval(n, z) * y[i] + rec.r_minus.eval(n, z) * y[i - 1]) / lead);
  }
  return y;
}

BigInt odd_lcm(long n) {
  BigInt l = 1;
  for (long k = 1; k <= n; ++k) l = lcm(l, BigInt(2 * k - 1));
  return l;
}

std::vector<DenominatorRow> denominator_profile(const ThreeTermRecurrence& rec, const BigRational& y0,
                                                const BigRational& y1, long N) {
  const auto y = propagate(rec, y0, y1, N);
  std::vector<DenominatorRow> rows;
  BigInt l = 1;
  for (long n = 0; n <= N && n < static_cast<long>(y.size()); ++n) {
    if (n >= 1) l = lcm(l, BigInt(2 * n - 1));
    DenominatorRow r;
    r.n = n;
    r.denominator = y[static_cast<std::size_t>(n)].get_den();
    r.odd_lcm_squared = l * l;
    r.cofactor = r.denominator / gcd(r.denominator, r.odd_lcm_squared);
    rows.push_back(std::move(r));
  }
  return rows;
}

RecurrenceCF recurrence_to_cf(const ThreeTermRecurrence& rec) {
  const Poly2& rp = rec.r_plus;
  if (rp.is_zero()) throw SpecError("leading coefficient R+ is identically zero");
  if (rp.depends_on_z()) throw SpecError("R+ depends on the parameter; normalization not supported");
  const int d = rp.degree_n();
  if (d > 0) {
    const BigRational lead = rp.coeff(static_cast<std::size_t>(d), 0);
    const BigRational r = rp.coeff(static_cast<std::size_t>(d - 1), 0) / (lead * d);
    if (!(Poly2(lead) * (Poly2::n() + Poly2(r)).pow(static_cast<unsigned>(d)) == rp))
      throw SpecError("R+ = " + rp.to_string() + " is not of the form c(n+r)^k");
    if (is_integer(r) && r <= 0)
      throw SpecError("R+ vanishes at n = " + to_string(BigRational(-r)) + "; the normalization degenerates");
  }
  RecurrenceCF out;
  out.tail.b_poly = rec.r_zero;
  out.tail.a_poly = rec.r_minus.shift_n(1) * rp;
  if (rec.r_zero.depends_on_z() || rec.r_minus.depends_on_z()) out.tail.param = 'z';
  out.step = rp;
  out.delta = 1;
  return out;
}

BigRational normalization(const RecurrenceCF& rc, long n, const std::optional<ZValue>& z) {
  BigRational s = 1;
  for (long j = 0; j < n; ++j) s *= rc.step.eval(j, z);
  return s;
}

Real eval_real(const Poly2& poly, const Real& n, const std::optional<Real>& z) {
  const Precision p(std::max(n.digits(), Precision::kMinDigits));
  Real acc(0L, p);
  for (std::size_t i = poly.grid().size(); i-- > 0;) {
    const auto& row = poly.grid()[i];
    if (row.size() > 1 && !z) throw DomainError("polynomial depends on the parameter but no value is bound");
    Real c(0L, p);
    for (std::size_t j = row.size(); j-- > 0;) c = (j + 1 < row.size() ? c * *z : c) + row[j];
    acc = acc * n + c;
  }
  return acc;
}

RecurrenceCheck check_recurrence(const ThreeTermRecurrence& rec, const std::vector<BigRational>& values,
                                 long n0, const std::optional<ZValue>& z) {
  RecurrenceCheck out;
  for (std::size_t i = 1; i + 1 < values.size(); ++i) {
    const long n = n0 + static_cast<long>(i);
    const BigRational r = rec.r_plus.eval(n, z) * values[i + 1] - rec.r_zero.eval(n, z) * values[i] -
                          rec.r_minus.eval(n, z) * values[i - 1];
    const double res = std::fabs(r.get_d());
    out.indices.push_back(n);
    out.residuals.push_back(res);
    out.max_residual = std::max(out.max_residual, res);
    if (r != 0) out.pass = false;
  }
  return out;
}

RecurrenceCheck check_recurrence(const ThreeTermRecurrence& rec, const std::vector<Real>& values, double tol,
                                 long n0, const std::optional<Real>& z) {
  RecurrenceCheck out;
  for (std::size_t i = 1; i + 1 < values.size(); ++i) {
    const long n = n0 + static_cast<long>(i);
    const Precision p(std::max(values[i].digits(), Precision::kMinDigits));
    const Real nr(n, p);
    const Real r = eval_real(rec.r_plus, nr, z) * values[i + 1] - eval_real(rec.r_zero, nr, z) * values[i] -
                   eval_real(rec.r_minus, nr, z) * values[i - 1];
    const double res = std::fabs(r.to_double());
    out.indices.push_back(n);
    out.residuals.push_back(res);
    out.max_residual = std::max(out.max_residual, res);
    if (!(res <= tol)) out.pass = false;
  }
  return out;
}

}  // namespace cfvar

#include "cfvar/cfcore/rate.hpp"

#include <cmath>

#include "cfvar/cfcore/convergents.hpp"
#include "cfvar/errors.hpp"

namespace cfvar {

int RateModel::sign_at(long n) const {
  switch (sign) {
    case RateSign::plus: return 1;
    case RateSign::alt_n: return n % 2 == 0 ? 1 : -1;
    case RateSign::alt_n1: return n % 2 == 0 ? -1 : 1;
  }
  return 1;
}

std::string_view rate_sign_name(RateSign s) {
  switch (s) {
    case RateSign::plus: return "+";
    case RateSign::alt_n: return "(-1)^n";
    case RateSign::alt_n1: return "(-1)^(n+1)";
  }
  return "+";
}

std::optional<RateSign> rate_sign_from_name(std::string_view s) {
  for (RateSign r : {RateSign::plus, RateSign::alt_n, RateSign::alt_n1})
    if (rate_sign_name(r) == s) return r;
  return std::nullopt;
}

std::string RateModel::to_string() const {
  std::string s = std::string(rate_sign_name(sign)) + " ";
  s += C ? C->to_string() : std::string("?");
  if (kind == RateKind::algebraic) return s + " * n^-" + std::to_string(k);
  return s + " / (" + rho.to_string() + ")^(" + std::to_string(e) + "n" + (f < 0 ? "" : "+") +
         std::to_string(f) + ")";
}

namespace {

std::optional<Real> real_z(const std::optional<ZValue>& z, bool needed, Precision p) {
  if (!needed) return std::nullopt;
  if (!z) throw DomainError("rate model depends on the parameter but none is bound");
  if (z->square) throw DomainError("rate model needs a real parameter value");
  return Real(z->value, p);
}

std::optional<RateSign> observed_pattern(const std::vector<int>& signs, long from) {
  for (RateSign cand : {RateSign::plus, RateSign::alt_n, RateSign::alt_n1}) {
    RateModel m;
    m.sign = cand;
    bool ok = true;
    const int base = signs.front() * m.sign_at(from);
    for (std::size_t i = 0; i < signs.size() && ok; ++i)
      ok = signs[i] == base * m.sign_at(from + static_cast<long>(i));
    // a constant negative pattern is still "plus" with a negative constant;
    // for the alternating ones the first sign pins the variant
    if (ok && (cand == RateSign::plus || base == 1)) return cand;
  }
  return std::nullopt;
}

}  // namespace

RateFit rate_fit(const CFSpec& cf, const Real& true_limit, long from, long to, const RateModel& model,
                 const std::optional<ZValue>& z) {
  if (from < 1 || to <= from) throw DomainError("rate_fit needs 1 <= from < to");
  const Precision w(std::max(true_limit.digits(), Precision::kMinDigits));
  const auto values = convergent_values(cf, to, w, z);
  const Real floor = epsilon10(std::max(w.digits() - 8, 1), w) * max(abs(true_limit), Real(1L, w));

  std::vector<Real> err;
  std::vector<int> signs;
  for (long n = from; n <= to; ++n) {
    const Real& v = values[static_cast<std::size_t>(n)];
    if (!v.is_finite()) throw DomainError("q_n = 0 inside the fit window");
    Real d = true_limit - v;
    if (abs(d) <= floor)
      throw PrecisionUnavailable("error at n=" + std::to_string(n) +
                                 " is below the reference precision; use a shallower window or a "
                                 "more precise limit");
    signs.push_back(d.sign());
    err.push_back(std::move(d));
  }

  RateFit fit;
  fit.from = from;
  fit.to = to;
  fit.sign_hat = observed_pattern(signs, from);
  for (std::size_t i = 0; i + 1 < err.size(); ++i) fit.ratios.push_back(abs(err[i] / err[i + 1]).to_double());
  fit.ratio_hat = fit.ratios.back();
  fit.ratios_monotone = true;
  for (std::size_t i = 0; i + 2 < fit.ratios.size(); ++i) {
    const double d1 = fit.ratios[i + 1] - fit.ratios[i];
    const double d2 = fit.ratios[i + 2] - fit.ratios[i + 1];
    if (d1 * d2 < 0 && std::fabs(d2) > 1e-12 * fit.ratios[i + 2]) fit.ratios_monotone = false;
  }

  const Precision mp(30);
  const bool needs_z = model.rho.depends_on_z() || (model.C && model.C->depends_on_z());
  const auto zr = real_z(z, needs_z, mp);
  const Real& last = err.back();
  std::optional<Real> c_model;
  if (model.C) c_model = numkit::eval_const_expr(*model.C, mp, zr);
  int c_sign = c_model ? c_model->sign() : signs.back() * model.sign_at(to);

  if (model.kind == RateKind::geometric) {
    const Real rho = numkit::eval_const_expr(model.rho, mp, zr);
    fit.ratio_model = std::pow(std::fabs(rho.to_double()), static_cast<double>(model.e));
    fit.c_hat = (last * pow(rho, model.e * to + model.f) / static_cast<long>(model.sign_at(to))).to_double();
    fit.sign_matches = true;
    for (std::size_t i = 0; i < signs.size(); ++i) {
      const long n = from + static_cast<long>(i);
      const long power = model.e * n + model.f;
      const int rho_sign = (rho.sign() < 0 && power % 2 != 0) ? -1 : 1;
      if (signs[i] != model.sign_at(n) * c_sign * rho_sign) fit.sign_matches = false;
    }
  } else {
    const long m = (to - from) % 2 == 0 ? from : from + 1;
    if (m >= to) throw DomainError("algebraic rate_fit needs a window of at least three points");
    const double r = abs(err[static_cast<std::size_t>(m - from)] / last).to_double();
    fit.exponent_hat = std::log(r) / std::log(static_cast<double>(to) / static_cast<double>(m));
    fit.c_hat = (last * pow(Real(to, w), model.k) / static_cast<long>(model.sign_at(to))).to_double();
    fit.sign_matches = true;
    for (std::size_t i = 0; i < signs.size(); ++i)
      if (signs[i] != model.sign_at(from + static_cast<long>(i)) * c_sign) fit.sign_matches = false;
  }
  if (c_model) fit.c_model = c_model->to_double();
  return fit;
}

}  // namespace cfvar

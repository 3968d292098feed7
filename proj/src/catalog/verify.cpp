#include "cfvar/catalog/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "cfvar/errors.hpp"
#include "cfvar/integrals/integrals.hpp"
#include "cfvar/numkit/special.hpp"

namespace cfvar::catalog {

using json = nlohmann::json;

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

Check make_check(std::string name, double residual, double tol, std::string detail = {}) {
  Check c;
  c.name = std::move(name);
  c.residual = residual;
  c.tolerance = tol;
  c.pass = std::isfinite(residual) && residual <= tol;
  c.detail = std::move(detail);
  return c;
}

Check failed(std::string name, std::string detail) {
  Check c;
  c.name = std::move(name);
  c.pass = false;
  c.residual = std::nan("");
  c.detail = std::move(detail);
  return c;
}

std::optional<ZValue> zval(const std::optional<BigRational>& s) {
  if (!s) return std::nullopt;
  return ZValue::of(*s);
}

bool same_id(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const char x = a[i] == '_' ? '-' : a[i], y = b[i] == '_' ? '-' : b[i];
    if (x != y) return false;
  }
  return true;
}

double log10_of(const Real& x) { return x.is_zero() ? -400.0 : x.log10_abs(); }

Check determinant_check(const CatalogEntry& e, const std::optional<BigRational>& s) {
  constexpr long kDepth = 50;
  try {
    const auto z = zval(s);
    const auto pq = convergents(e.cf, kDepth, z);
    BigRational prod = 1;
    for (long n = 1; n <= kDepth; ++n) {
      prod *= e.cf.a(n, z);
      const auto& c = pq[static_cast<std::size_t>(n)];
      const auto& d = pq[static_cast<std::size_t>(n - 1)];
      const BigRational lhs = c.p * d.q - d.p * c.q;
      const BigRational rhs = (n % 2 == 1) ? prod : BigRational(-prod);
      if (lhs != rhs) return failed("determinant", "identity breaks at n=" + std::to_string(n));
    }
    return make_check("determinant", 0, 0, "exact to depth 50");
  } catch (const DomainError& ex) {
    Check c = make_check("determinant", 0, 0, std::string("skipped: ") + ex.what());
    c.informational = true;
    return c;
  }
}

Check half_shift_check(const CatalogEntry& e, const std::vector<CatalogEntry>& context) {
  const CatalogEntry* parent = find(context, e.half_shift_of);
  if (!parent) parent = find(builtin_catalog(), e.half_shift_of);
  if (!parent) return failed("half_shift", "parent '" + e.half_shift_of + "' not found");
  try {
    const CFSpec hs = half_shift(parent->cf);
    if (hs == e.cf) return make_check("half_shift", 0, 0, "half_shift(" + parent->id + ") = " + hs.to_string());
  } catch (const SpecError&) {
  }
  const auto tail = half_shift_tail(parent->cf);
  const bool ok = tail.b_poly == e.cf.b_poly && tail.a_poly == e.cf.a_poly;
  Check c = make_check("half_shift", ok ? 0 : 1, 0,
                       "tail of half_shift(" + parent->id + "): b=" + tail.b_poly.to_string() +
                           ", a=" + tail.a_poly.to_string() + ", scale " + to_string(tail.c));
  return c;
}

Real reference_limit(const CatalogEntry& e, const std::optional<BigRational>& s, int digits, long depth,
                     std::string& source) {
  if (limit_max_digits(e) >= digits) {
    source = "oracle";
    return *eval_limit(e, Precision(digits), s);
  }
  source = "the fraction's own limit at " + std::to_string(digits) + " digits";
  return limit(e.cf, Precision(digits), zval(s), std::max(depth, 4000L)).value;
}

void rate_checks(const CatalogEntry& e, const std::optional<BigRational>& s, const VerifyConfig& cfg,
                 SampleReport& out) {
  try {
    for (auto& c : rate_report(e, s, cfg).checks) out.checks.push_back(std::move(c));
  } catch (const std::exception& ex) {
    out.checks.push_back(failed("rate", ex.what()));
  }
}

SampleReport verify_sample(const CatalogEntry& e, const std::optional<BigRational>& s, const VerifyConfig& cfg,
                           bool rejected) {
  SampleReport out;
  out.param = s;
  const Precision p(cfg.prec);
  const RateModel model = e.rate_at(s);
  const int oracle_digits = std::min(cfg.prec, limit_max_digits(e));
  try {
    const Real oracle = *eval_limit(e, Precision(std::max(oracle_digits, Precision::kMinDigits)), s);
    out.oracle = oracle.to_string(std::min(oracle_digits, 30));
    const Real scale = max(abs(oracle), Real(1L, p));
    if (model.kind == RateKind::geometric) {
      const LimitResult lr = limit(e.cf, p, zval(s), cfg.depth);
      out.depth = lr.depth;
      out.value = lr.value.to_string(30);
      const int tol_digits = cfg.limit_digits.value_or(oracle_digits - 5);
      const double tol = std::pow(10.0, -tol_digits) * scale.to_double();
      out.checks.push_back(make_check("limit", abs(lr.value - oracle).to_double(), tol,
                                      "depth " + std::to_string(lr.depth) + (lr.terminated ? ", terminated" : "")));
    } else {
      const long N = e.rate_to;
      const auto values = convergent_values(e.cf, N, p, zval(s));
      const Real& v = values.back();
      out.depth = N;
      out.value = v.to_string(30);
      const double tol = 10.0 * std::pow(static_cast<double>(N), -static_cast<double>(model.k)) * scale.to_double();
      out.checks.push_back(make_check("limit", abs(v - oracle).to_double(), tol,
                                      "algebraic convergence: convergent " + std::to_string(N) +
                                          " within 10 N^-" + std::to_string(model.k)));
    }
    if (rejected) {
      for (auto& c : out.checks) c.informational = true;
    } else if (cfg.rates) {
      rate_checks(e, s, cfg, out);
    }
  } catch (const std::exception& ex) {
    out.checks.push_back(failed("limit", ex.what()));
  }
  for (const auto& c : out.checks)
    if (!c.pass && !c.informational) out.pass = false;
  return out;
}

const CFSpec& f_cf() { return builtin("f-z").cf; }

Real f_at(const BigRational& z, Precision p) { return limit(f_cf(), p, ZValue::of(z)).value; }

// Exact value when a partial numerator vanishes within `cap` layers.
std::optional<BigRational> terminating_value(const CFSpec& cf, const ZValue& z, long cap = 200) {
  long last = -1;
  for (long n = 1; n <= cap; ++n)
    if (cf.a(n, z) == 0) {
      last = n - 1;
      break;
    }
  if (last < 0) return std::nullopt;
  BigRational v = cf.b(last, z);
  for (long n = last; n >= 1; --n) v = cf.b(n - 1, z) + cf.a(n, z) / v;
  return v;
}

}  // namespace

std::size_t VerificationReport::failed() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return !e.pass; }));
}

BigRational rational_reconstruct(const Real& x, const BigInt& max_den) {
  BigRational r;
  mpfr_get_q(r.get_mpq_t(), x.get());
  BigInt h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  BigRational rem = r;
  BigRational best = 0;
  for (int i = 0; i < 200; ++i) {
    BigInt a;
    mpz_fdiv_q(a.get_mpz_t(), rem.get_num_mpz_t(), rem.get_den_mpz_t());
    const BigInt h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > max_den) break;
    best = BigRational(h2, k2);
    best.canonicalize();
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    rem -= BigRational(a);
    if (rem == 0) break;
    rem = 1 / rem;
  }
  return best;
}

LimitResult f_value(const BigRational& z2, Precision p, long depth) {
  return limit(f_cf(), p, ZValue::squared(z2), depth);
}

std::vector<Check> f_observations(int prec) {
  std::vector<Check> out;
  const Precision p(prec);
  const Precision w(prec + 20);

  {
    const LimitResult r = f_value(BigRational(-1, 4), p);
    out.push_back(make_check("f(i/2) = 0", abs(r.value).to_double(), 1e-20,
                             r.terminated ? "fraction terminates" : "value " + r.value.to_string(10)));
  }
  for (const BigRational& z : {BigRational(1, 5), BigRational(3, 10)}) {
    const Real a = f_at(z, p), b = f_at(-z, p);
    out.push_back(make_check("even at z=" + to_string(z), abs(a - b).to_double(), 1e-25, "f = " + a.to_string(25)));
  }
  {
    // central differences 2(f(h) - f(0))/h^2 with Richardson extrapolation in h^2
    const int levels = 4;
    std::vector<std::vector<Real>> t(levels);
    for (int k = 0; k < levels; ++k) {
      const BigRational h(1, 1L << (5 + k));
      const Real d = (f_at(h, w) - 1L) * 2L / Real(h * h, w);
      t[static_cast<std::size_t>(k)].push_back(d);
      for (int j = 1; j <= k; ++j) {
        const auto& prev = t[static_cast<std::size_t>(k - 1)];
        const Real& cur = t[static_cast<std::size_t>(k)].back();
        t[static_cast<std::size_t>(k)].push_back(cur + (cur - prev[static_cast<std::size_t>(j - 1)]) / ((1L << (2 * j)) - 1));
      }
    }
    const Real est = t.back().back();
    const Real S = numkit::constant_value(numkit::ConstId::gamma_q4, w);
    const Real s4 = S * S;
    const Real target = (s4 * -24L + 1920L) / (s4 * 7L - 528L);
    out.push_back(make_check("f''(0) = (-24S+1920)/(7S-528)", abs(est - target).to_double(), 1e-6,
                             "extrapolated " + est.to_string(15) + ", formula " + target.to_string(15)));
  }
  {
    const Real v = f_at(10, p);
    const Real r = v + 600L + BigRational(113, 12);
    out.push_back(make_check("f(10) + 600 + 113/12", abs(r).to_double(), 0.1,
                             "f(10) = " + v.to_string(15) + ", remainder " + r.to_string(6)));
    std::string profile;
    Real last;
    for (long z : {10L, 20L, 40L, 80L}) {
      const Real rz = f_at(z, p) + 6 * z * z + BigRational(113, 12);
      last = rz * (z * z);
      profile += (profile.empty() ? "" : ", ") + std::string("z=") + std::to_string(z) + ": " + last.to_string(6);
    }
    Check c = make_check("z^2 (f(z) + 6z^2 + 113/12)", std::fabs(last.to_double()), 0, profile);
    c.pass = true;
    c.informational = true;
    out.push_back(std::move(c));
  }
  for (long d : {4L, 6L}) {
    for (long odd : {1L, 3L, 5L, 7L}) {
      const BigRational z2(-odd * odd, d * d);
      const std::string name = "rational at z=i" + std::to_string(odd) + "/" + std::to_string(d);
      Check c;
      try {
        const LimitResult r = f_value(z2, p);
        const BigRational guess = rational_reconstruct(r.value, BigInt(1000000));
        const double res = abs(r.value - Real(guess, p)).to_double();
        const auto exact = terminating_value(f_cf(), ZValue::squared(z2));
        c = make_check(name, res, std::pow(10.0, -(prec - 5)),
                       "reconstructed " + to_string(guess) +
                           (exact ? ", terminating value " + to_string(*exact) : ", fraction does not terminate"));
      } catch (const std::exception& ex) {
        c = failed(name, ex.what());
      }
      c.informational = true;
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<Check> f_explore_at(const BigRational& z, int prec) {
  const Precision p(prec);
  std::vector<Check> out;
  const Real a = f_at(z, p), b = f_at(-z, p);
  out.push_back(make_check("f(z)", 0, 0, a.to_string(std::min(prec, 40))));
  out.push_back(make_check("f(z) - f(-z)", abs(a - b).to_double(), std::pow(10.0, -(prec - 15))));
  const Real r = a + 6L * Real(z * z, p) + BigRational(113, 12);
  Check c = make_check("f(z) + 6z^2 + 113/12", abs(r).to_double(), 0, r.to_string(10));
  c.pass = true;
  c.informational = true;
  out.push_back(std::move(c));
  return out;
}

VariantResolution resolve_bessel_variants(const std::vector<const CatalogEntry*>& variants) {
  static const auto quad = [] {
    const auto c40 = integrals::bessel_moment(4, 0);
    const auto c42 = integrals::bessel_moment(4, 2);
    const double v = 8 * c42.value / c40.value;
    const double err = 8 * (c42.error / c40.value + c42.value * c40.error / (c40.value * c40.value));
    return std::make_pair(v, err);
  }();
  VariantResolution r;
  r.quadrature = quad.first;
  r.quadrature_error = quad.second;
  const Precision p(20);
  std::size_t matches = 0;
  double others = std::numeric_limits<double>::infinity();
  for (const auto* e : variants) {
    r.ids.push_back(e->id);
    double dev;
    try {
      dev = std::fabs(limit(e->cf, p).value.to_double() - quad.first);
    } catch (const std::exception&) {
      dev = std::numeric_limits<double>::infinity();
    }
    r.deviations.push_back(dev);
  }
  for (std::size_t i = 0; i < variants.size(); ++i) {
    if (r.deviations[i] < kVariantMatchTol) {
      ++matches;
      r.winner = r.ids[i];
    } else {
      others = std::min(others, r.deviations[i]);
    }
  }
  if (matches != 1) r.winner.clear();
  r.margin = others;
  r.decisive = matches == 1 && others > kVariantMargin;
  return r;
}

std::vector<MoebiusRelation> moebius_relations(Precision p) {
  struct Spec {
    const char* name;
    const char* from;
    const char* to;
    MoebiusMap printed;
    const char* printed_text;
  };
  // printed statements rewritten as limit(to) = map(limit(S))
  const Spec specs[] = {
      {"small S -> thm2", "s-small", "thm2", {1, 10, 0, 800}, "S = -10 + 800 (Gamma(1/4)/Gamma(3/4))^4"},
      {"tiny S -> thm6", "s-tiny", "thm6", {0, 32, -1, 4}, "S = 4 - 32 (Gamma(3/4)/Gamma(1/4))^2"},
      {"big S -> thm3", "s-big", "thm3", {1, 336, 0, 3}, "S = -336 - 9 eta_+/omega_+"},
  };
  std::vector<MoebiusRelation> out;
  for (const auto& s : specs) {
    MoebiusRelation r;
    r.name = s.name;
    r.from = s.from;
    r.to = s.to;
    r.printed = s.printed;
    const auto edit = moebius_between(builtin(s.from).cf, builtin(s.to).cf);
    r.derived = edit.map;
    r.printed_matches = r.derived.equivalent(r.printed);
    const Precision w = p.with_guard();
    const Real lf = limit(builtin(s.from).cf, w).value;
    const Real lt = limit(builtin(s.to).cf, w).value;
    r.residual = abs(r.derived.apply(lf) - lt).to_double();
    r.printed_residual = abs(r.printed.apply(lf) - lt).to_double();
    r.pass = r.residual < std::pow(10.0, -(p.digits() - 5)) * std::max(1.0, std::fabs(lt.to_double()));
    r.note = std::string("printed: ") + s.printed_text + "; derived: limit(" + s.to + ") = " + r.derived.to_string() +
             " applied to limit(" + s.from + ")" +
             (r.printed_matches ? "" : "; the printed relation does not hold (residual " + sci(r.printed_residual) + ")");
    out.push_back(std::move(r));
  }
  return out;
}

RateReport rate_report(const CatalogEntry& e, const std::optional<BigRational>& s, const VerifyConfig& cfg,
                       std::optional<long> from, std::optional<long> to) {
  RateReport r;
  r.model = e.rate_at(s);
  const RateModel& model = r.model;
  const long lo = from.value_or(e.rate_from), hi = to.value_or(e.rate_to);
  if (lo < 1 || hi < lo + 2) throw DomainError("rate window needs 1 <= from and to >= from + 2");
  const Precision mp(20);
  const std::optional<Real> zr = s ? std::optional<Real>(Real(*s, mp)) : std::nullopt;
  const auto oracle = eval_limit(e, Precision(std::max(Precision::kMinDigits, std::min(20, limit_max_digits(e)))), s);
  const Real approx = oracle ? *oracle : limit(e.cf, mp, zval(s), cfg.depth).value;
  const double mag = std::max(0.0, log10_of(approx));
  int digits = 0;
  if (model.kind == RateKind::geometric) {
    const double lr = std::log10(std::fabs(numkit::eval_const_expr(model.rho, mp, zr).to_double()));
    digits = static_cast<int>(std::ceil((model.e * hi + model.f) * lr + mag)) + 30;
  } else {
    digits = static_cast<int>(std::ceil(model.k * std::log10(static_cast<double>(hi)) + mag)) + 30;
  }
  const Real ref = reference_limit(e, s, std::max(digits, cfg.prec), cfg.depth, r.reference);
  r.fit = rate_fit(e.cf, ref, lo, hi, model, zval(s));
  const RateFit& fit = r.fit;
  const std::string window = "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
  if (model.kind == RateKind::geometric) {
    r.checks.push_back(make_check("rate.ratio", std::fabs(fit.ratio_hat / fit.ratio_model - 1), cfg.rate_ratio_tol,
                                  "ratio " + std::to_string(fit.ratio_hat) + " vs |rho|^e " +
                                      std::to_string(fit.ratio_model) + " over " + window + ", reference " +
                                      r.reference));
  } else {
    const double k = static_cast<double>(model.k);
    r.checks.push_back(make_check("rate.exponent", std::fabs(fit.exponent_hat - k) / k, cfg.exponent_tol,
                                  "exponent " + std::to_string(fit.exponent_hat) + " vs " + std::to_string(model.k) +
                                      " at n=" + std::to_string(hi)));
  }
  if (fit.c_model)
    r.checks.push_back(make_check("rate.C", std::fabs(fit.c_hat / *fit.c_model - 1), cfg.rate_c_tol,
                                  "C " + std::to_string(fit.c_hat) + " vs " + std::to_string(*fit.c_model)));
  r.checks.push_back(make_check("rate.sign", fit.sign_matches ? 0 : 1, 0,
                                fit.sign_hat ? "observed " + std::string(rate_sign_name(*fit.sign_hat))
                                             : std::string("no consistent sign pattern")));
  return r;
}

EntryReport verify_entry(const CatalogEntry& e, const VerifyConfig& cfg, const std::vector<CatalogEntry>& context) {
  const auto t0 = std::chrono::steady_clock::now();
  EntryReport r;
  r.id = e.id;
  r.role = e.role;
  try {
    const auto diags = validate(e);
    for (const auto& d : diags) r.checks.push_back(failed("validate." + d.field, d.message));
    if (diags.empty()) {
      std::vector<std::optional<BigRational>> samples;
      if (e.param) {
        for (const auto& s : cfg.samples ? *cfg.samples : e.param->samples) samples.emplace_back(s);
      } else {
        samples.emplace_back(std::nullopt);
      }

      r.checks.push_back(determinant_check(e, samples.front()));
      if (!e.half_shift_of.empty()) r.checks.push_back(half_shift_check(e, context));

      bool rejected = false;
      if (e.role == Role::variant) {
        const CatalogEntry* sib = find(context, e.sibling);
        if (!sib) sib = find(builtin_catalog(), e.sibling);
        if (!sib) {
          r.checks.push_back(failed("variant", "sibling '" + e.sibling + "' not found"));
        } else {
          const auto v = resolve_bessel_variants({&e, sib});
          std::string detail = "quadrature " + std::to_string(v.quadrature);
          for (std::size_t i = 0; i < v.ids.size(); ++i) detail += "; " + v.ids[i] + " off by " + sci(v.deviations[i]);
          detail += v.decisive ? "; selected " + v.winner : "; not decisive";
          Check c = make_check("variant", v.decisive ? 0 : 1, 0, detail);
          r.checks.push_back(std::move(c));
          rejected = v.decisive && !same_id(v.winner, e.id);
          if (rejected) r.notes.push_back("rejected variant: its limit differs from 8 c42/c40");
        }
      }

      if (e.role == Role::exploratory) {
        if (e.cf == builtin("f-z").cf) {
          for (auto& c : f_observations(cfg.prec)) r.checks.push_back(std::move(c));
        } else {
          r.notes.push_back("no observations registered for this exploratory fraction");
        }
      } else {
        for (const auto& s : samples) r.samples.push_back(verify_sample(e, s, cfg, rejected));
        if (e.limit.kind == LimitKind::expr && limit_max_digits(e) < cfg.prec)
          r.notes.push_back("oracle limited to " + std::to_string(limit_max_digits(e)) + " stored digits");
      }
    }
  } catch (const std::exception& ex) {
    r.checks.push_back(failed("error", ex.what()));
  }
  for (const auto& c : r.checks)
    if (!c.pass && !c.informational) r.pass = false;
  for (const auto& s : r.samples)
    if (!s.pass) r.pass = false;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

VerificationReport verify_all(const std::vector<CatalogEntry>& cat, const VerifyConfig& cfg) {
  VerificationReport rep;
  rep.entries.resize(cat.size());
  unsigned jobs = cfg.jobs ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(cat.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cat.size();) rep.entries[i] = verify_entry(cat[i], cfg, cat);
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const auto& e : rep.entries)
    if (!e.pass) rep.pass = false;
  return rep;
}

std::string report_table(const VerificationReport& r) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%-16s %-12s %-5s %7s  %s\n", "id", "role", "pass", "seconds", "worst check");
  os << line;
  for (const auto& e : r.entries) {
    const Check* worst = nullptr;
    std::string where;
    double worst_rank = -1;
    auto consider = [&](const Check& c, const std::string& at) {
      if (c.informational) return;
      const double rank = !c.pass ? std::numeric_limits<double>::infinity()
                                  : (c.tolerance > 0 ? c.residual / c.tolerance : 0.0);
      if (rank > worst_rank) {
        worst = &c;
        worst_rank = rank;
        where = at;
      }
    };
    for (const auto& c : e.checks) consider(c, "");
    for (const auto& s : e.samples)
      for (const auto& c : s.checks) consider(c, s.param ? " @" + to_string(*s.param) : "");
    std::string w = worst ? worst->name + where + " " + sci(worst->residual) + " (tol " + sci(worst->tolerance) + ")"
                          : std::string("-");
    std::snprintf(line, sizeof line, "%-16s %-12s %-5s %7.2f  %s\n", e.id.c_str(),
                  std::string(role_name(e.role)).c_str(), e.pass ? "PASS" : "FAIL", e.seconds, w.c_str());
    os << line;
  }
  for (const auto& e : r.entries) {
    bool header = false;
    auto show = [&](const Check& c, const std::string& at) {
      if (c.pass && !c.informational) return;
      if (!header) {
        os << "\n" << e.id << ":\n";
        header = true;
      }
      os << "  " << (c.informational ? "note " : "FAIL ") << c.name << at << ": " << c.detail;
      if (std::isfinite(c.residual) && c.tolerance > 0) os << " [residual " << sci(c.residual) << ", tol " << sci(c.tolerance) << "]";
      os << "\n";
    };
    for (const auto& c : e.checks) show(c, "");
    for (const auto& s : e.samples)
      for (const auto& c : s.checks) show(c, s.param ? " @" + to_string(*s.param) : "");
    for (const auto& n : e.notes) {
      if (!header) {
        os << "\n" << e.id << ":\n";
        header = true;
      }
      os << "  note " << n << "\n";
    }
  }
  os << "\n" << (r.entries.size() - r.failed()) << "/" << r.entries.size() << " entries pass\n";
  return os.str();
}

namespace {

json check_json(const Check& c) {
  json j;
  j["name"] = c.name;
  j["pass"] = c.pass;
  j["residual"] = std::isfinite(c.residual) ? json(c.residual) : json(nullptr);
  j["tolerance"] = c.tolerance;
  j["detail"] = c.detail;
  if (c.informational) j["informational"] = true;
  return j;
}

}  // namespace

std::string report_json(const VerificationReport& r, const VerifyConfig& cfg, bool timings) {
  json doc;
  doc["format"] = kReportFormat;
  doc["config"] = {{"prec", cfg.prec}, {"depth", cfg.depth}};
  doc["pass"] = r.pass;
  json entries = json::array();
  for (const auto& e : r.entries) {
    json j;
    j["id"] = e.id;
    j["role"] = role_name(e.role);
    j["pass"] = e.pass;
    json checks = json::array();
    for (const auto& c : e.checks) checks.push_back(check_json(c));
    j["checks"] = std::move(checks);
    json samples = json::array();
    for (const auto& s : e.samples) {
      json sj;
      sj["param"] = s.param ? json(to_string(*s.param)) : json(nullptr);
      sj["value"] = s.value;
      sj["oracle"] = s.oracle;
      sj["depth"] = s.depth;
      sj["pass"] = s.pass;
      json sc = json::array();
      for (const auto& c : s.checks) sc.push_back(check_json(c));
      sj["checks"] = std::move(sc);
      samples.push_back(std::move(sj));
    }
    j["samples"] = std::move(samples);
    j["notes"] = e.notes;
    if (timings) j["seconds"] = e.seconds;
    entries.push_back(std::move(j));
  }
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

}  // namespace cfvar::catalog

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cfvar/catalog/catalog.hpp"
#include "cfvar/catalog/verify.hpp"
#include "cfvar/cfcore/recurrence.hpp"
#include "cfvar/errors.hpp"
#include "cfvar/integrals/integrals.hpp"
#include "cfvar/numkit/constants.hpp"
#include "cfvar/numkit/lseries.hpp"
#include "cfvar/rvgroup/rvgroup.hpp"
#include "cfvar/transforms/transforms.hpp"

using namespace cfvar;
using namespace cfvar::catalog;
using json = nlohmann::json;

namespace {

constexpr const char* kCliFormat = "cfvar-cli/1";

struct CliConfig {
  int prec = 40;
  long depth = kDefaultMaxDepth;
  std::string format = "table";
  std::string catalog;
  unsigned jobs = 0;
  std::optional<int> limit_digits;
  std::optional<double> ratio_tol;
  std::optional<double> c_tol;

  bool structured() const { return format == "json"; }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(item);
  return out;
}

std::vector<BigRational> parse_rationals(const std::string& text) {
  std::vector<BigRational> out;
  for (const auto& s : split_list(text)) out.push_back(parse_rational(s));
  return out;
}

VerifyConfig verify_config(const CliConfig& c) {
  VerifyConfig v;
  v.prec = c.prec;
  v.depth = c.depth;
  v.jobs = c.jobs;
  v.limit_digits = c.limit_digits;
  if (c.ratio_tol) v.rate_ratio_tol = *c.ratio_tol;
  if (c.c_tol) v.rate_c_tol = *c.c_tol;
  return v;
}

std::vector<CatalogEntry> load_catalog(const CliConfig& c) {
  std::string path = c.catalog;
  if (path.empty())
    if (const char* env = std::getenv("CFVAR_CATALOG")) path = env;
  if (path.empty()) return builtin_catalog();
  return load(path);
}

const CatalogEntry& lookup(const std::vector<CatalogEntry>& cat, const std::string& id) {
  const CatalogEntry* e = find(cat, id);
  if (!e) throw UsageError("unknown id '" + id + "'");
  return *e;
}

json check_json(const Check& c) {
  json j{{"name", c.name}, {"pass", c.pass}, {"tolerance", c.tolerance}, {"detail", c.detail}};
  j["residual"] = std::isfinite(c.residual) ? json(c.residual) : json(nullptr);
  if (c.informational) j["informational"] = true;
  return j;
}

void print_checks(std::ostream& os, const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    const char* tag = c.informational ? "note" : (c.pass ? "PASS" : "FAIL");
    os << "  " << tag << "  " << c.name;
    if (c.tolerance > 0 && std::isfinite(c.residual)) os << "  residual " << sci(c.residual) << " tol " << sci(c.tolerance);
    if (!c.detail.empty()) os << "  " << c.detail;
    os << "\n";
  }
}

bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.pass && !c.informational) return false;
  return true;
}

/// Emits the structured document or the table text; returns the exit code.
int finish(const CliConfig& cfg, const std::string& command, json payload, const std::string& table, bool pass) {
  if (cfg.structured()) {
    json doc;
    doc["format"] = kCliFormat;
    doc["command"] = command;
    doc["prec"] = cfg.prec;
    doc["pass"] = pass;
    for (auto& [k, v] : payload.items()) doc[k] = v;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << table;
  }
  return pass ? 0 : 1;
}

Check simple_check(std::string name, double residual, double tol, std::string detail = {}) {
  Check c;
  c.name = std::move(name);
  c.residual = residual;
  c.tolerance = tol;
  c.pass = std::isfinite(residual) && residual <= tol;
  c.detail = std::move(detail);
  return c;
}

// verify

int cmd_verify(const CliConfig& cfg, const std::optional<std::string>& id, const std::optional<std::string>& samples,
               bool no_rates, bool timings) {
  const auto cat = load_catalog(cfg);
  VerifyConfig vc = verify_config(cfg);
  vc.rates = !no_rates;
  if (samples) vc.samples = parse_rationals(*samples);
  VerificationReport rep;
  if (id) {
    const CatalogEntry& e = lookup(cat, *id);
    rep.entries.push_back(verify_entry(e, vc, cat));
    rep.pass = rep.entries.front().pass;
  } else {
    rep = verify_all(cat, vc);
  }
  std::cout << (cfg.structured() ? report_json(rep, vc, timings) : report_table(rep));
  return rep.pass ? 0 : 1;
}

// eval

int cmd_eval(const CliConfig& cfg, const std::string& id, const std::optional<std::string>& z_text,
             std::optional<long> terms) {
  const auto cat = load_catalog(cfg);
  const CatalogEntry& e = lookup(cat, id);
  std::optional<BigRational> z;
  if (z_text) z = parse_rational(*z_text);
  if (e.param && !z) throw UsageError(e.id + " depends on " + std::string(1, e.param->name) + "; pass --z p/q");
  if (!e.param && z) throw UsageError(e.id + " has no parameter");
  const auto zv = z ? std::optional<ZValue>(ZValue::of(*z)) : std::nullopt;
  const Precision p(cfg.prec);
  const long depth = terms.value_or(cfg.depth);
  if (depth < 1) throw UsageError("--terms must be positive");
  const RateModel model = e.rate_at(z);

  Real value(p), error(p);
  long used = depth;
  bool terminated = false;
  if (model.kind == RateKind::algebraic) {
    const auto v = convergent_values(e.cf, depth, p, zv);
    value = v.back();
    error = abs(v.back() - v[v.size() - 2]);
  } else {
    const LimitResult r = limit(e.cf, p, zv, depth);
    value = r.value;
    error = r.error;
    used = r.depth;
    terminated = r.terminated;
  }

  json payload{{"id", e.id}, {"value", value.to_string(cfg.prec)}, {"error", error.to_double()}, {"depth", used}};
  if (z) payload["z"] = to_string(*z);
  if (terminated) payload["terminated"] = true;
  std::ostringstream os;
  os << e.id << (z ? " at " + std::string(1, e.param->name) + "=" + to_string(*z) : "") << "\n";
  os << "  value  " << value.to_string(cfg.prec) << "\n";
  os << "  error  " << sci(error.to_double()) << (model.kind == RateKind::algebraic ? " (last step)" : "")
     << "\n  depth  " << used << (terminated ? " (terminated)" : "") << "\n";

  bool pass = true;
  const int oracle_digits = std::min(cfg.prec, limit_max_digits(e));
  if (e.limit.kind != LimitKind::none && oracle_digits >= Precision::kMinDigits) {
    const Real oracle = *eval_limit(e, Precision(oracle_digits), z);
    const double diff = abs(value - oracle).to_double();
    double tol = std::pow(10.0, -cfg.limit_digits.value_or(oracle_digits - 5)) * std::max(1.0, std::fabs(oracle.to_double()));
    if (model.kind == RateKind::algebraic)
      tol = 10.0 * std::pow(static_cast<double>(depth), -static_cast<double>(model.k)) * std::max(1.0, std::fabs(oracle.to_double()));
    pass = diff <= tol;
    const std::string label = e.limit.label.empty() ? e.limit.expr.to_string() : e.limit.label;
    os << "  oracle " << oracle.to_string(oracle_digits) << "  (" << label << ")\n";
    os << "  diff   " << sci(diff) << " tol " << sci(tol) << (pass ? "  PASS" : "  FAIL") << "\n";
    payload["oracle"] = oracle.to_string(oracle_digits);
    payload["oracle_label"] = label;
    payload["difference"] = diff;
    payload["tolerance"] = tol;
  }
  return finish(cfg, "eval", payload, os.str(), pass);
}

// shift

int cmd_shift(const CliConfig& cfg, const std::string& id, bool emit) {
  const auto cat = load_catalog(cfg);
  const CatalogEntry& e = lookup(cat, id);
  std::optional<CFSpec> full;
  try {
    full = half_shift(e.cf);
  } catch (const SpecError&) {
  }
  const ShiftedTail tail = half_shift_tail(e.cf);

  if (emit) {
    if (full) {
      std::cout << full->to_string() << "\n";
    } else {
      std::cout << "b=" << tail.b_poly.to_string() << " a=" << tail.a_poly.to_string() << "\n";
    }
    return 0;
  }

  std::vector<std::string> matches;
  std::vector<std::string> children;
  for (const auto& c : cat) {
    if (c.half_shift_of.empty() || !find(cat, c.half_shift_of) || find(cat, c.half_shift_of)->id != e.id) continue;
    children.push_back(c.id);
    const bool ok = full ? (*full == c.cf) : (tail.b_poly == c.cf.b_poly && tail.a_poly == c.cf.a_poly);
    if (ok) matches.push_back(c.id);
  }
  std::ostringstream os;
  json payload{{"id", e.id}};
  if (full) {
    os << "half_shift(" << e.id << ") = " << full->to_string() << "\n";
    payload["half_shift"] = full->to_string();
  } else {
    os << "heads do not fit a one-point rescaling; tail only\n";
  }
  os << "  tail b = " << tail.b_poly.to_string() << "\n  tail a = " << tail.a_poly.to_string()
     << "\n  scale c = " << to_string(tail.c) << "\n";
  payload["tail"] = {{"b", tail.b_poly.to_string()}, {"a", tail.a_poly.to_string()}, {"c", to_string(tail.c)}};
  std::string verdict;
  if (children.empty()) {
    verdict = "no catalog S-form";
  } else if (matches.empty()) {
    verdict = "no (expected " + children.front() + ")";
  } else {
    verdict = "yes (" + matches.front() + (full ? "" : ", tail") + ")";
  }
  os << "matches catalog: " << verdict << "\n";
  payload["matches"] = matches;
  payload["expected"] = children;
  return finish(cfg, "shift", payload, os.str(), children.empty() || !matches.empty());
}

// rate

int cmd_rate(const CliConfig& cfg, const std::string& id, const std::optional<std::string>& z_text,
             std::optional<long> from, std::optional<long> to) {
  const auto cat = load_catalog(cfg);
  const CatalogEntry& e = lookup(cat, id);
  std::vector<std::optional<BigRational>> samples;
  if (z_text) {
    if (!e.param) throw UsageError(e.id + " has no parameter");
    samples.emplace_back(parse_rational(*z_text));
  } else if (e.param) {
    for (const auto& s : e.param->samples) samples.emplace_back(s);
  } else {
    samples.emplace_back(std::nullopt);
  }
  const VerifyConfig vc = verify_config(cfg);
  std::ostringstream os;
  json rows = json::array();
  bool pass = true;
  for (const auto& s : samples) {
    const RateReport r = rate_report(e, s, vc, from, to);
    os << e.id << (s ? " at " + std::string(1, e.param->name) + "=" + to_string(*s) : "") << "  model "
       << r.model.to_string() << "\n";
    os << "  window [" << r.fit.from << "," << r.fit.to << "], reference " << r.reference << "\n";
    if (r.model.kind == RateKind::geometric)
      os << "  ratio  " << r.fit.ratio_hat << " vs " << r.fit.ratio_model << "\n";
    else
      os << "  exponent " << r.fit.exponent_hat << " vs " << r.model.k << "\n";
    os << "  C      " << r.fit.c_hat << (r.fit.c_model ? " vs " + std::to_string(*r.fit.c_model) : std::string(" (no model)"))
       << "\n";
    print_checks(os, r.checks);
    const bool ok = all_pass(r.checks);
    pass = pass && ok;
    json j{{"param", s ? json(to_string(*s)) : json(nullptr)},
           {"model", r.model.to_string()},
           {"from", r.fit.from},
           {"to", r.fit.to},
           {"reference", r.reference},
           {"ratio_hat", r.fit.ratio_hat},
           {"ratio_model", r.fit.ratio_model},
           {"exponent_hat", r.fit.exponent_hat},
           {"c_hat", r.fit.c_hat},
           {"pass", ok}};
    j["c_model"] = r.fit.c_model ? json(*r.fit.c_model) : json(nullptr);
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(check_json(c));
    j["checks"] = checks;
    rows.push_back(j);
  }
  return finish(cfg, "rate", {{"id", e.id}, {"samples", rows}}, os.str(), pass);
}

// group

std::string tuple_string(const std::vector<BigRational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

int cmd_group(const CliConfig& cfg, const std::string& which, bool order, const std::optional<std::string>& orbit,
              std::optional<std::size_t> scan) {
  if (which != "zeta3" && which != "zeta2") throw UsageError("--case must be zeta3 or zeta2");
  if (order == orbit.has_value()) throw UsageError("pass exactly one of --order and --orbit");
  if (scan && !orbit) throw UsageError("--scan needs --orbit");
  const bool triple = which == "zeta3";
  const auto gens = triple ? rvgroup::generators_G3() : rvgroup::generators_G2();
  const auto g = rvgroup::group_closure(gens);
  std::ostringstream os;
  json payload{{"case", which}, {"order", g.order()}};
  bool pass = true;

  if (order) {
    os << "|G| = " << g.order() << "\n";
    json go = json::array();
    for (const auto& gen : gens) {
      long k = 1;
      for (auto q = gen; !q.is_identity(); q = gen * q) ++k;
      os << "  generator " << gen.name << ": order " << k << "\n";
      go.push_back({{"name", gen.name}, {"order", k}});
    }
    payload["generators"] = go;
    return finish(cfg, "group", payload, os.str(), pass);
  }

  const auto params = parse_rationals(*orbit);
  const std::size_t want = triple ? 6 : 5;
  if (params.size() != want) throw UsageError("--orbit needs " + std::to_string(want) + " comma-separated p/q values");
  std::set<std::vector<BigRational>> images;
  std::size_t inconsistent = 0;
  for (const auto& el : g.elements) {
    std::vector<BigRational> img;
    bool ok = false;
    if (triple) {
      integrals::Params3 a;
      std::copy(params.begin(), params.end(), a.a.begin());
      const auto r = rvgroup::recover_params(rvgroup::apply(el, integrals::cmatrix3(a)));
      img.assign(r.params.a.begin(), r.params.a.end());
      ok = r.consistent;
    } else {
      integrals::Params2 a;
      std::copy(params.begin(), params.end(), a.a.begin());
      const auto r = rvgroup::recover_params(rvgroup::apply(el, integrals::cmatrix2(a)));
      img.assign(r.params.a.begin(), r.params.a.end());
      ok = r.consistent;
    }
    if (!ok) ++inconsistent;
    images.insert(img);
  }
  pass = inconsistent == 0;
  os << "|G| = " << g.order() << ", distinct images " << images.size() << ", outside the family " << inconsistent << "\n";
  json list = json::array();
  for (const auto& img : images) {
    os << "  " << tuple_string(img) << "\n";
    list.push_back(tuple_string(img));
  }
  payload["distinct_images"] = images.size();
  payload["inconsistent"] = inconsistent;
  payload["images"] = list;

  if (scan) {
    rvgroup::InvarianceReport rep;
    if (triple) {
      integrals::Params3 a;
      std::copy(params.begin(), params.end(), a.a.begin());
      rep = rvgroup::invariance_scan(a, *scan);
    } else {
      integrals::Params2 a;
      std::copy(params.begin(), params.end(), a.a.begin());
      rep = rvgroup::invariance_scan(a, *scan);
    }
    os << "invariance scan over " << rep.entries.size() << " images: base " << rep.base_value << ", max deviation "
       << sci(rep.max_deviation) << " (bound " << sci(rep.tolerance) << ")" << (rep.pass ? "  PASS" : "  FAIL") << "\n";
    for (const auto& s : rep.skipped) os << "  skipped " << s << "\n";
    pass = pass && rep.pass;
    payload["scan"] = {{"sampled", rep.entries.size()}, {"base_value", rep.base_value},
                       {"max_deviation", rep.max_deviation}, {"tolerance", rep.tolerance},
                       {"skipped", rep.skipped}, {"pass", rep.pass}};
  }
  return finish(cfg, "group", payload, os.str(), pass);
}

// integrality

int cmd_integrality(const CliConfig& cfg, const std::string& which, long nmax, long eq1_nmax) {
  if (which != "zeta3" && which != "zeta2") throw UsageError("--case must be zeta3 or zeta2");
  const bool triple = which == "zeta3";
  const auto rep = triple ? rvgroup::integrality3(nmax) : rvgroup::integrality2(nmax);
  std::ostringstream os;
  const char* names = triple ? "(alpha, beta)" : "(p, q)";
  os << "d_{2n-1}^" << (triple ? 3 : 2) << " " << names << "(n) for n = 1.." << nmax << "\n";
  json rows = json::array();
  for (const auto& r : rep.rows) {
    os << "  n=" << r.n << "  " << (r.ok ? "integral" : "NOT integral") << "  " << to_string(r.first * r.scale) << ", "
       << to_string(r.second * r.scale) << "\n";
    rows.push_back({{"n", r.n}, {"ok", r.ok}, {"first", to_string(r.first * r.scale)}, {"second", to_string(r.second * r.scale)}});
  }
  bool pass = rep.pass;
  json payload{{"case", which}, {"nmax", nmax}, {"rows", rows}, {"failures", rep.failures}};
  if (!rep.failures.empty()) {
    os << "failures at n =";
    for (long n : rep.failures) os << " " << n;
    os << "\n";
  }

  if (!triple) {
    // the n^2 recursion (2n+1)^2 y(n+1) = (44n^2+1) y(n) + (2n-1)^2 y(n-1)
    const ThreeTermRecurrence eq1{parse_poly2("(2n+1)^2").poly, parse_poly2("44n^2+1").poly, parse_poly2("(2n-1)^2").poly};
    json prof = json::array();
    for (const auto& [y0, y1] : {std::pair<long, long>{0, 1}, {1, 0}}) {
      const auto rows2 = denominator_profile(eq1, y0, y1, eq1_nmax);
      BigInt worst = 1;
      long at = 0;
      for (const auto& r : rows2)
        if (r.cofactor > worst) {
          worst = r.cofactor;
          at = r.n;
        }
      const bool ok = worst <= 4;
      pass = pass && ok;
      std::string cof;
      for (const auto& r : rows2) cof += (cof.empty() ? "" : " ") + r.cofactor.get_str();
      os << "recursion denominators, y(0)=" << y0 << ", y(1)=" << y1 << ", n <= " << eq1_nmax << ": max cofactor "
         << worst.get_str() << " at n=" << at << (ok ? "  PASS" : "  FAIL") << "\n  cofactors " << cof << "\n";
      prof.push_back({{"y0", y0}, {"y1", y1}, {"max_cofactor", worst.get_str()}, {"at", at}, {"cofactors", cof}, {"pass", ok}});
    }
    payload["recursion_denominators"] = prof;
  }
  return finish(cfg, "integrality", payload, os.str(), pass);
}

// integral and bessel

int cmd_integral(const CliConfig& cfg, const std::string& family, const std::string& params_text,
                 std::optional<double> tol, bool normalized) {
  const auto params = parse_rationals(params_text);
  auto need = [&](std::size_t k, const char* what) {
    if (params.size() != k) throw UsageError(family + " needs --params " + what);
  };
  auto d = [&](std::size_t i) { return params[i].get_d(); };
  auto spec = [&](double def) { return integrals::QuadSpec{.tol = tol.value_or(def)}; };
  auto integer = [&](std::size_t i) {
    if (params[i].get_den() != 1) throw UsageError("profile index must be an integer");
    return params[i].get_num().get_si();
  };
  integrals::QuadResult r;
  if (family == "I1") {
    need(2, "nu,z");
    r = integrals::quad_I1(d(0), d(1), spec(1e-14));
  } else if (family == "r1") {
    need(2, "n,z");
    r = integrals::quad_r1(d(0), d(1), spec(1e-14));
  } else if (family == "I2") {
    need(5, "a0,a1,a2,a3,a4");
    integrals::Params2 a;
    std::copy(params.begin(), params.end(), a.a.begin());
    r = normalized ? integrals::normalized2(a, spec(1e-10)) : integrals::quad_I2(a, spec(1e-10));
  } else if (family == "I3") {
    need(6, "a0,a1,a2,a3,a4,a5");
    integrals::Params3 a;
    std::copy(params.begin(), params.end(), a.a.begin());
    r = normalized ? integrals::normalized3(a, spec(1e-8)) : integrals::quad_I3(a, spec(1e-8));
  } else if (family == "r3") {
    need(1, "nu");
    r = integrals::quad_r3(d(0), spec(1e-8));
  } else if (family == "I2-profile") {
    need(1, "n");
    r = integrals::quad_I2_profile(integer(0), spec(1e-10));
  } else if (family == "I3-profile") {
    need(1, "n");
    r = integrals::quad_I3_profile(integer(0), spec(1e-8));
  } else {
    throw UsageError("unknown family '" + family + "'");
  }
  if (normalized && family != "I2" && family != "I3") throw UsageError("--normalized applies to I2 and I3 only");
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s(%s)%s = %.17g\n  error %.3e, level %d, %ld evaluations\n", family.c_str(),
                params_text.c_str(), normalized ? " normalized" : "", r.value, r.error, r.level, r.evaluations);
  json payload{{"family", family},          {"params", params_text}, {"normalized", normalized}, {"value", r.value},
               {"error", r.error},          {"level", r.level},      {"evaluations", r.evaluations}};
  return finish(cfg, "integral", payload, buf, true);
}

/// Closed forms of c_{n,k} that do not need quadrature.
std::optional<std::pair<std::string, double>> bessel_closed_form(int n, int k) {
  const Precision p(30);
  const double pi = numkit::constant_value(numkit::ConstId::pi, p).to_double();
  const double lchi = numkit::constant_value(numkit::ConstId::l_chi3_2, p).to_double();
  const double z3 = numkit::constant_value(numkit::ConstId::zeta3, p).to_double();
  if (n == 1) {
    const double g = std::tgamma((k + 1) / 2.0);
    return std::pair{std::string("2^(k-1) Gamma((k+1)/2)^2"), std::ldexp(g * g, k - 1)};
  }
  if (n == 2) {
    const double g = std::tgamma((k + 1) / 2.0);
    return std::pair{std::string("sqrt(pi) Gamma((k+1)/2)^3 / (4 Gamma(k/2+1))"),
                     std::sqrt(pi) * g * g * g / (4 * std::tgamma(k / 2.0 + 1))};
  }
  if (n == 3 && k == 0)
    return std::pair{std::string("3 Gamma(1/3)^6 / (32 2^(2/3) pi)"),
                     3 * std::pow(std::tgamma(1.0 / 3), 6) / (32 * std::cbrt(4.0) * pi)};
  if (n == 3 && k == 1) return std::pair{std::string("3/4 L(chi_-3, 2)"), 0.75 * lchi};
  if (n == 3 && k == 3) return std::pair{std::string("L(chi_-3, 2) - 2/3"), lchi - 2.0 / 3};
  if (n == 4 && k == 0)
    return std::pair{std::string("4 pi^2 L(f, 2)"), 4 * pi * pi * numkit::lvalue_eta8(2, p).value.to_double()};
  if (n == 4 && k == 1) return std::pair{std::string("7/8 zeta(3)"), 7.0 / 8 * z3};
  if (n == 4 && k == 2) {
    const double om = numkit::constant_value(numkit::ConstId::omega_minus_im, p).to_double();
    const double et = numkit::constant_value(numkit::ConstId::eta_minus_im, p).to_double();
    return std::pair{std::string("pi/512 (128 |omega_-| + 3 |eta_-|)"), pi / 512 * (128 * om + 3 * et)};
  }
  if (n == 4 && k == 3) return std::pair{std::string("7/32 zeta(3) - 3/16"), 7.0 / 32 * z3 - 3.0 / 16};
  return std::nullopt;
}

int cmd_bessel(const CliConfig& cfg, int n, int k, double tol) {
  const auto r = integrals::bessel_moment(n, k, integrals::QuadSpec{.tol = tol});
  char buf[256];
  std::snprintf(buf, sizeof buf, "c_{%d,%d} = %.16g  (error %.2e, level %d)\n", n, k, r.value, r.error, r.level);
  std::string out = buf;
  json payload{{"n", n}, {"k", k}, {"value", r.value}, {"error", r.error}};
  bool pass = true;
  if (const auto cf = bessel_closed_form(n, k)) {
    const double diff = std::fabs(r.value - cf->second);
    const double bound = std::max(1e3 * tol, 1e-12) * std::max(1.0, std::fabs(cf->second));
    pass = diff <= bound;
    std::snprintf(buf, sizeof buf, "  closed form %s = %.16g, diff %.2e (tol %.1e)  %s\n", cf->first.c_str(), cf->second,
                  diff, bound, pass ? "PASS" : "FAIL");
    out += buf;
    payload["closed_form"] = {{"expr", cf->first}, {"value", cf->second}, {"difference", diff}, {"tolerance", bound}};
  }
  return finish(cfg, "bessel", payload, out, pass);
}

// f-explore

/// "p/q" is a real point, "ip/q" (or "i") an imaginary one; returns z^2.
BigRational parse_point(const std::string& text, std::string& shown) {
  shown = text;
  if (!text.empty() && text.front() == 'i') {
    const std::string rest = text.substr(1);
    const BigRational y = rest.empty() ? BigRational(1) : parse_rational(rest);
    return -y * y;
  }
  const BigRational x = parse_rational(text);
  return x * x;
}

int cmd_f_explore(const CliConfig& cfg, const std::optional<std::string>& z_text, const std::optional<std::string>& z2_text) {
  if (z_text && z2_text) throw UsageError("pass at most one of --z and --z2");
  std::vector<Check> checks;
  std::ostringstream os;
  json payload;
  if (!z_text && !z2_text) {
    checks = f_observations(cfg.prec);
    os << "observation battery for f(z) at " << cfg.prec << " digits\n";
  } else {
    std::string shown;
    BigRational z2;
    if (z2_text) {
      z2 = parse_rational(*z2_text);
      shown = "z^2=" + to_string(z2);
    } else {
      z2 = parse_point(*z_text, shown);
      shown = "z=" + shown;
    }
    if (z_text && z_text->front() != 'i') {
      checks = f_explore_at(parse_rational(*z_text), cfg.prec);
    } else {
      const Precision p(cfg.prec);
      const LimitResult r = f_value(z2, p, cfg.depth);
      checks.push_back(simple_check("f(z)", 0, 0, r.value.to_string(std::min(cfg.prec, 40)) +
                                                      (r.terminated ? " (fraction terminates)" : "")));
      const BigRational guess = rational_reconstruct(r.value, BigInt(1000000));
      Check c = simple_check("rational reconstruction", abs(r.value - Real(guess, p)).to_double(),
                             std::pow(10.0, -(cfg.prec - 5)), to_string(guess));
      c.informational = true;
      checks.push_back(c);
      Check rem = simple_check("f(z) + 6z^2 + 113/12", 0, 0,
                               (r.value + 6L * Real(z2, p) + BigRational(113, 12)).to_string(10));
      rem.informational = true;
      checks.push_back(rem);
    }
    os << "f at " << shown << "\n";
    payload["point"] = shown;
  }
  print_checks(os, checks);
  json arr = json::array();
  for (const auto& c : checks) arr.push_back(check_json(c));
  payload["checks"] = arr;
  return finish(cfg, "f-explore", payload, os.str(), all_pass(checks));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cfvar: continued fraction variants, verification and companion integrals"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "cfvar 1.0");

  CliConfig cfg;
  app.add_option("--prec", cfg.prec, "working precision in decimal digits")->check(CLI::Range(10, 100000));
  app.add_option("--depth", cfg.depth, "depth cap for limits")->check(CLI::Range(4L, 10'000'000L));
  app.add_option("--format", cfg.format, "table or json")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--catalog", cfg.catalog, "catalog file (default $CFVAR_CATALOG, else built in)");
  app.add_option("--jobs", cfg.jobs, "worker threads for verify (0 = all cores)");
  app.add_option("--limit-digits", cfg.limit_digits, "limit tolerance 10^-digits");
  app.add_option("--ratio-tol", cfg.ratio_tol, "relative tolerance on the fitted decay ratio");
  app.add_option("--c-tol", cfg.c_tol, "relative tolerance on the fitted rate constant");

  std::optional<std::string> id, z, z2, samples, orbit, params;
  std::optional<long> terms, from, to;
  std::optional<std::size_t> scan;
  std::optional<double> tol;
  std::string which, family;
  bool no_rates = false, timings = false, emit = false, order = false, normalized = false;
  long nmax = 15, eq1_nmax = 30;
  int bn = 0, bk = 0;
  double btol = 1e-13;

  auto* verify = app.add_subcommand("verify", "verify catalog entries against their oracles");
  verify->add_option("--id", id, "single entry");
  verify->add_option("--samples", samples, "comma-separated p/q parameter samples");
  verify->add_flag("--no-rates", no_rates, "skip rate fits");
  verify->add_flag("--timings", timings, "include timings in json output");

  auto* eval = app.add_subcommand("eval", "evaluate one fraction");
  eval->add_option("--id", id, "entry id")->required();
  eval->add_option("--z", z, "parameter value p/q");
  eval->add_option("--terms", terms, "depth cap");

  auto* shift = app.add_subcommand("shift", "half-shift a fraction and compare with the catalog");
  shift->add_option("--id", id, "entry id")->required();
  shift->add_flag("--emit", emit, "print only the shifted fraction");

  auto* rate = app.add_subcommand("rate", "fit the convergence rate");
  rate->add_option("--id", id, "entry id")->required();
  rate->add_option("--z", z, "parameter value p/q (default: the entry's samples)");
  rate->add_option("--from", from, "first index of the window");
  rate->add_option("--to", to, "last index of the window");

  auto* group = app.add_subcommand("group", "permutation group of the integrals");
  group->add_option("--case", which, "zeta3 or zeta2")->required();
  group->add_flag("--order", order, "group and generator orders");
  group->add_option("--orbit", orbit, "comma-separated p/q exponents");
  group->add_option("--scan", scan, "normalized-value scan over this many orbit images");

  auto* integ = app.add_subcommand("integrality", "integrality of the exact integral coordinates");
  integ->add_option("--case", which, "zeta3 or zeta2")->required();
  integ->add_option("--nmax", nmax, "largest n")->check(CLI::Range(1L, 200L));
  integ->add_option("--eq1-nmax", eq1_nmax, "largest n for the recursion denominators (zeta2)")->check(CLI::Range(1L, 400L));

  auto* integral = app.add_subcommand("integral", "numerical value of an integral family");
  integral->add_option("--family", family, "I1, r1, I2, I3, r3, I2-profile or I3-profile")->required();
  integral->add_option("--params", params, "comma-separated p/q parameters")->required();
  integral->add_option("--tol", tol, "relative quadrature tolerance");
  integral->add_flag("--normalized", normalized, "divide by the Gamma normalization (I2, I3)");

  auto* bessel = app.add_subcommand("bessel", "Bessel moment c_{n,k}");
  bessel->add_option("--n", bn, "power of K0, 1..4")->required();
  bessel->add_option("--k", bk, "power of t, 0..3")->required();
  bessel->add_option("--tol", btol, "relative quadrature tolerance");

  auto* fx = app.add_subcommand("f-explore", "observations on the open function f(z)");
  fx->add_option("--z", z, "point p/q, or ip/q for an imaginary point");
  fx->add_option("--z2", z2, "value of z^2 as p/q");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return cmd_verify(cfg, id, samples, no_rates, timings);
    if (*eval) return cmd_eval(cfg, *id, z, terms);
    if (*shift) return cmd_shift(cfg, *id, emit);
    if (*rate) return cmd_rate(cfg, *id, z, from, to);
    if (*group) return cmd_group(cfg, which, order, orbit, scan);
    if (*integ) return cmd_integrality(cfg, which, nmax, eq1_nmax);
    if (*integral) return cmd_integral(cfg, family, *params, tol, normalized);
    if (*bessel) return cmd_bessel(cfg, bn, bk, btol);
    if (*fx) return cmd_f_explore(cfg, z, z2);
  } catch (const UsageError& e) {
    std::cerr << "cfvar: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "cfvar: domain error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "cfvar: " << e.what() << "\n";
    return 2;
  } catch (const SpecError& e) {
    std::cerr << "cfvar: " << e.what() << "\n";
    return 2;
  } catch (const NoConvergence& e) {
    std::cerr << "cfvar: no convergence: " << e.what() << "\n";
    return 1;
  } catch (const PrecisionUnavailable& e) {
    std::cerr << "cfvar: precision unavailable: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

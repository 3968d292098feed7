#include "cfvar/catalog/catalog.hpp"

#include <climits>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cfvar/errors.hpp"
#include "cfvar/numkit/special.hpp"

namespace cfvar::catalog {

using json = nlohmann::json;
using numkit::ConstExpr;
using numkit::parse_const_expr;

namespace {

struct RateText {
  RateKind kind = RateKind::geometric;
  RateSign sign = RateSign::plus;
  const char* C = nullptr;
  const char* rho = "2";
  long e = 1, f = 0, k = 0;
};

RateModel make_rate(const RateText& t) {
  RateModel m;
  m.kind = t.kind;
  m.sign = t.sign;
  if (t.C) m.C = parse_const_expr(t.C);
  m.rho = parse_const_expr(t.rho);
  m.e = t.e;
  m.f = t.f;
  m.k = t.k;
  return m;
}

LimitSpec expr_limit(const char* text, std::string label = {}) {
  return {LimitKind::expr, parse_const_expr(text), label.empty() ? std::string(text) : std::move(label)};
}

CatalogEntry entry(std::string id, const char* cf, LimitSpec limit, const RateText& rate, std::string provenance) {
  CatalogEntry e;
  e.id = std::move(id);
  e.cf = parse_cfspec(cf);
  e.limit = std::move(limit);
  e.rate = make_rate(rate);
  e.provenance = std::move(provenance);
  return e;
}

ParamSpec samples(char name, std::initializer_list<BigRational> v) { return {name, v}; }

BigRational q(long a, long b = 1) { return BigRational(a, b); }

std::vector<CatalogEntry> make_builtin() {
  using enum RateSign;
  constexpr auto alg = RateKind::algebraic;
  std::vector<CatalogEntry> c;

  c.push_back(entry("tiny-apery", "[[0,3(2n-1)],[2,-n^2]]", expr_limit("log2"),
                    {.C = "2*pi", .rho = "1+sqrt2", .e = 4, .f = 2}, "tiny Apery fraction for log 2"));
  c.push_back(entry("small-apery", "[[0,11n^2-11n+3],[5,n^4]]", expr_limit("zeta2"),
                    {.sign = alt_n, .C = "4*pi^2", .rho = "golden", .e = 10, .f = 5}, "small Apery fraction for zeta(2)"));
  c.push_back(entry("big-apery", "[[0,(2n-1)(17n^2-17n+5)],[6,-n^6]]", expr_limit("zeta3"),
                    {.C = "4*pi^3", .rho = "1+sqrt2", .e = 8, .f = 4}, "big Apery fraction for zeta(3)"));
  c.push_back(entry("thm2", "[[80,47,44n^2+1],[-160,(2n+1)^4]]", expr_limit("gamma_q4^2"),
                    {.sign = alt_n1, .C = "8*gamma_q4^2", .rho = "golden", .e = 10, .f = 10}, "half-shift companion for (Gamma(1/4)/Gamma(3/4))^4"));
  {
    auto e = entry("ramanujan-q4", "[[80,17,16n],[-64,(2n+1)^4]]", expr_limit("gamma_q4^2"),
                   {.kind = alg, .sign = alt_n, .k = 4}, "Ramanujan-type fraction for (Gamma(1/4)/Gamma(3/4))^4");
    e.rate_from = 200;
    e.rate_to = 400;
    c.push_back(std::move(e));
  }
  {
    auto e = entry("s-small", "[[0,44n^2+1],[20,(2n+1)^4]]", expr_limit("800/gamma_q4^2-10"),
                   {.sign = alt_n, .rho = "golden", .e = 10}, "small Apery half-shift S");
    e.half_shift_of = "small-apery";
    c.push_back(std::move(e));
  }
  {
    auto e = entry("s-tiny", "[[0,12n],[4,-(2n+1)^2]]", expr_limit("4-32/gamma_q4"),
                   {.rho = "1+sqrt2", .e = 4}, "tiny Apery half-shift S");
    e.half_shift_of = "tiny-apery";
    c.push_back(std::move(e));
  }
  {
    auto e = entry("s-big", "[[0,4n(68n^2+3)],[48,-(2n+1)^6]]", expr_limit("-336-9*eta_plus/omega_plus"),
                   {.C = "576*pi^3/omega_plus^2", .rho = "1+sqrt2", .e = 8, .f = 8}, "big Apery half-shift S");
    e.half_shift_of = "big-apery";
    c.push_back(std::move(e));
  }
  c.push_back(entry("thm3", "[[112,4n(68n^2+3)],[16,-(2n+1)^6]]", expr_limit("-3*eta_plus/omega_plus"),
                    {.C = "192*pi^3/omega_plus^2", .rho = "1+sqrt2", .e = 8, .f = 8}, "period ratio -3 eta_+/omega_+"));
  c.push_back(entry("lchi3", "[[0,10n^2-10n+3],[2,-9n^4]]", expr_limit("l_chi3_2"), {.rho = "3", .e = 2},
                    "known fraction for L(chi_-3,2)"));
  c.push_back(entry("thm4", "[[36,33,40n^2+2],[324,-9(2n+1)^4]]", expr_limit("gamma_q3"),
                    {.C = "4*gamma_q3", .rho = "3", .e = 2, .f = 2}, "half-shift companion for 2^(-1/3) (Gamma(1/3)/Gamma(2/3))^6"));
  c.push_back(entry("zeta3-alt", "[[0,(2n-1)(5n^2-5n+2)],[12/7,-16n^6]]", expr_limit("zeta3"),
                    {.rho = "2", .e = 2}, "known alternating fraction for zeta(3)"));
  {
    const char* lim = "2+3*eta_minus_im/(64*omega_minus_im)";
    auto sq = entry("bessel42", "[[0,n(20n^2+3)],[1,-(2n+1)^6]]", expr_limit(lim, "8 c42/c40"),
                    {.C = "3*pi^3/(16*omega_minus_im^2)", .rho = "2", .e = 2}, "Bessel moment ratio 8 c42/c40, quadratic variant");
    sq.role = Role::variant;
    sq.sibling = "bessel42-cubic";
    auto cu = entry("bessel42-cubic", "[[0,n(20n^3+3)],[1,-(2n+1)^6]]", expr_limit(lim, "8 c42/c40"),
                    {.rho = "2", .e = 2}, "Bessel moment ratio 8 c42/c40, cubic variant as printed");
    cu.role = Role::variant;
    cu.sibling = "bessel42";
    c.push_back(std::move(sq));
    c.push_back(std::move(cu));
  }
  c.push_back(entry("thm5", "[[-128,n(20n^2+3)],[64,-(2n+1)^6]]", expr_limit("3*eta_minus_im/omega_minus_im"),
                    {.C = "12*pi^3/omega_minus_im^2", .rho = "2", .e = 2}, "period ratio 3 eta_-/omega_-"));
  c.push_back(entry("thm6", "[[8,11,12n],[8,-(2n+1)^2]]", expr_limit("gamma_q4"),
                    {.C = "4*gamma_q4", .rho = "1+sqrt2", .e = 4, .f = 4}, "half-shift companion for (Gamma(1/4)/Gamma(3/4))^2"));
  {
    auto e = entry("gamma-s", "[[0,4s-1,8s-2],[4,(2n-1)^2]]",
                   {LimitKind::gamma_ratio_sq, {}, "(Gamma(s)/Gamma(s+1/2))^2"},
                   {.kind = alg, .sign = alt_n, .k = 1}, "classical fraction for (Gamma(1/4)/Gamma(3/4))^2");
    e.param = samples('s', {q(1, 2), q(3, 4), q(1)});
    e.rate_k_param = parse_poly2("4s-1").poly;
    e.rate_from = 200;
    e.rate_to = 400;
    c.push_back(std::move(e));
  }
  {
    auto e = entry("gamma-q4-inv", "[[8,4],[4,(2n+1)^2]]", expr_limit("gamma_q4"),
                   {.kind = alg, .sign = alt_n, .k = 2}, "classical fraction inverted at s=3/4");
    e.rate_from = 200;
    e.rate_to = 400;
    c.push_back(std::move(e));
  }
  {
    auto e = entry("gamma-q4-alt", "[[4,1,2],[8,(2n-1)(2n+1)]]", expr_limit("gamma_q4"),
                   {.kind = alg, .sign = alt_n, .k = 1}, "alternating companion for (Gamma(1/4)/Gamma(3/4))^2");
    e.rate_from = 200;
    e.rate_to = 400;
    c.push_back(std::move(e));
  }
  {
    auto e = entry("thm7", "[[0,(2n-1)(2-z)],[2z,-n^2z^2]]", expr_limit("-log(1-z)", "neg_log1minus"),
                   {.C = "2*pi", .rho = "(1+sqrt(1-z))^2/z", .e = 2, .f = 1}, "-log(1-z) family");
    e.param = samples('z', {q(-1), q(1, 2), q(1, 4)});
    c.push_back(std::move(e));
  }
  {
    auto e = entry("thm8", "[[2-z,4n(2-z)],[-(2n+1)^2z^2]]", expr_limit("2*ellE(z)/ellK(z)", "two_E_over_K"),
                   {.C = "-2*pi/ellK(z)^2", .rho = "(1+sqrt(1-z))^2/z", .e = 2, .f = 2}, "2E(z)/K(z) family");
    e.param = samples('z', {q(-1), q(1, 4), q(1, 2)});
    c.push_back(std::move(e));
  }
  {
    auto e = entry("thm9", "[[0,3(1-z^2),11n^2-11n+3+9z^2],[5,(n^2+4z^2)(n^2+9z^2)]]",
                   expr_limit("pi^2/6*sinhc(pi*z/2)^2", "cosh_shift"),
                   {.sign = alt_n, .C = "4*pi^2*sinhc(2*pi*z)*sinhc(3*pi*z)", .rho = "golden", .e = 10, .f = 5},
                   "(cosh(pi z)-1)/(3z^2) family");
    e.param = samples('z', {q(0), q(1, 5), q(2, 5)});
    e.rate_from = 100;
    e.rate_to = 200;
    c.push_back(std::move(e));
  }
  {
    auto e = entry("f-z", "[[1,12(1-z^2),44n^2+1+36z^2],[60z^2,((2n+1)^2+16z^2)((2n+1)^2+36z^2)]]",
                   {LimitKind::none, {}, "f_of_z"}, {.sign = alt_n, .rho = "golden", .e = 10},
                   "half-shift of the cosh family, open function f(z)");
    e.param = samples('z', {q(1, 5), q(3, 10)});
    e.role = Role::exploratory;
    e.half_shift_of = "thm9";
    c.push_back(std::move(e));
  }
  return c;
}

std::string normalized_id(std::string_view id) {
  std::string s(id);
  for (char& ch : s)
    if (ch == '_') ch = '-';
  return s;
}

bool same_rate(const RateModel& x, const RateModel& y) {
  return x.kind == y.kind && x.sign == y.sign && x.C == y.C && x.rho == y.rho && x.e == y.e && x.f == y.f &&
         x.k == y.k;
}

// --- JSON helpers ---

json int_json(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

BigInt int_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw ParseError("expected an integer");
}

json grid_json(const Poly2& p) {
  json rows = json::array();
  for (const auto& row : p.grid()) {
    json r = json::array();
    for (const auto& c : row) r.push_back(json::array({int_json(c.get_num()), int_json(c.get_den())}));
    rows.push_back(std::move(r));
  }
  return rows;
}

Poly2 grid_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("polynomial grid must be an array of rows");
  std::vector<std::vector<BigRational>> grid;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError("grid row must be an array");
    std::vector<BigRational> r;
    for (const auto& cell : row) {
      if (!cell.is_array() || cell.size() != 2) throw ParseError("grid cell must be [num, den]");
      const BigInt den = int_from_json(cell[1]);
      if (den == 0) throw ParseError("zero denominator in grid");
      BigRational v(int_from_json(cell[0]), den);
      v.canonicalize();
      r.push_back(v);
    }
    grid.push_back(std::move(r));
  }
  return Poly2::from_grid(std::move(grid));
}

json cf_json(const CFSpec& cf) {
  json j;
  j["text"] = cf.to_string();
  json bh = json::array(), ah = json::array();
  for (const auto& h : cf.b_heads) bh.push_back(grid_json(h));
  for (const auto& h : cf.a_heads) ah.push_back(grid_json(h));
  j["b_heads"] = std::move(bh);
  j["b_poly"] = grid_json(cf.b_poly);
  j["a_heads"] = std::move(ah);
  j["a_poly"] = grid_json(cf.a_poly);
  if (cf.param) j["param"] = std::string(1, *cf.param);
  return j;
}

CFSpec cf_from_json(const json& j) {
  CFSpec cf;
  for (const auto& h : j.at("b_heads")) cf.b_heads.push_back(grid_from_json(h));
  cf.b_poly = grid_from_json(j.at("b_poly"));
  for (const auto& h : j.at("a_heads")) cf.a_heads.push_back(grid_from_json(h));
  cf.a_poly = grid_from_json(j.at("a_poly"));
  if (j.contains("param")) {
    const auto s = j.at("param").get<std::string>();
    if (s != "z" && s != "s") throw ParseError("param must be \"z\" or \"s\"");
    cf.param = s[0];
  }
  return cf;
}

std::string_view rate_kind_name(RateKind k) { return k == RateKind::geometric ? "geometric" : "algebraic"; }

json rate_json(const CatalogEntry& e) {
  const RateModel& r = e.rate;
  json j;
  j["kind"] = rate_kind_name(r.kind);
  j["sign"] = rate_sign_name(r.sign);
  if (r.C) j["C"] = r.C->to_string();
  j["rho"] = r.rho.to_string();
  j["e"] = r.e;
  j["f"] = r.f;
  j["k"] = r.k;
  if (e.rate_k_param) j["k_param"] = grid_json(*e.rate_k_param);
  j["window"] = json::array({e.rate_from, e.rate_to});
  return j;
}

template <class T>
T enum_from(std::string_view s, std::initializer_list<T> all, std::string_view (*name)(T), const char* what) {
  for (T v : all)
    if (name(v) == s) return v;
  throw ParseError(std::string("unknown ") + what + " '" + std::string(s) + "'");
}

CatalogEntry entry_from_json(const json& j, std::string& field) {
  CatalogEntry e;
  field = "id";
  e.id = j.at("id").get<std::string>();
  field = "cf";
  e.cf = cf_from_json(j.at("cf"));
  if (j.contains("param") && !j.at("param").is_null()) {
    field = "param";
    const auto& p = j.at("param");
    ParamSpec ps;
    const auto name = p.at("name").get<std::string>();
    if (name != "z" && name != "s") throw ParseError("param name must be z or s");
    ps.name = name[0];
    for (const auto& s : p.at("samples")) ps.samples.push_back(parse_rational(s.get<std::string>()));
    e.param = std::move(ps);
  }
  field = "limit";
  const auto& l = j.at("limit");
  e.limit.kind = enum_from(l.at("kind").get<std::string>(),
                           {LimitKind::expr, LimitKind::gamma_ratio_sq, LimitKind::none}, limit_kind_name,
                           "limit kind");
  if (e.limit.kind == LimitKind::expr) {
    field = "limit.expr";
    e.limit.expr = parse_const_expr(l.at("expr").get<std::string>());
  }
  e.limit.label = l.value("label", std::string());
  field = "rate";
  const auto& r = j.at("rate");
  field = "rate.kind";
  const auto kind = r.at("kind").get<std::string>();
  if (kind == "geometric") e.rate.kind = RateKind::geometric;
  else if (kind == "algebraic") e.rate.kind = RateKind::algebraic;
  else throw ParseError("unknown rate kind '" + kind + "'");
  field = "rate.sign";
  const auto sign = rate_sign_from_name(r.at("sign").get<std::string>());
  if (!sign) throw ParseError("unknown sign pattern");
  e.rate.sign = *sign;
  field = "rate.C";
  if (r.contains("C")) e.rate.C = parse_const_expr(r.at("C").get<std::string>());
  field = "rate.rho";
  e.rate.rho = parse_const_expr(r.at("rho").get<std::string>());
  field = "rate.e";
  e.rate.e = r.at("e").get<long>();
  e.rate.f = r.value("f", 0L);
  e.rate.k = r.value("k", 0L);
  field = "rate.k_param";
  if (r.contains("k_param")) e.rate_k_param = grid_from_json(r.at("k_param"));
  field = "rate.window";
  if (r.contains("window")) {
    const auto& w = r.at("window");
    if (!w.is_array() || w.size() != 2) throw ParseError("window must be [from, to]");
    e.rate_from = w[0].get<long>();
    e.rate_to = w[1].get<long>();
  }
  field = "role";
  e.role = enum_from(j.value("role", std::string("oracle")), {Role::oracle, Role::variant, Role::exploratory},
                     role_name, "role");
  field = "sibling";
  e.sibling = j.value("sibling", std::string());
  e.half_shift_of = j.value("half_shift_of", std::string());
  e.provenance = j.value("provenance", std::string());
  return e;
}

std::size_t line_of(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n'));
}

std::optional<Real> param_real(const CatalogEntry& e, const std::optional<BigRational>& s, Precision p) {
  const bool needed = e.cf.depends_on_param() || (e.limit.kind == LimitKind::expr && e.limit.expr.depends_on_z());
  if (!needed && !e.param) return std::nullopt;
  if (!s) throw DomainError("entry '" + e.id + "' needs a parameter value");
  return Real(*s, p);
}

}  // namespace

RateModel CatalogEntry::rate_at(const std::optional<BigRational>& s) const {
  RateModel m = rate;
  if (rate_k_param) {
    if (!s) throw DomainError("entry '" + id + "' needs a parameter value for its rate exponent");
    const BigRational k = rate_k_param->eval(0, ZValue::of(*s));
    if (k.get_den() != 1) throw DomainError("rate exponent " + to_string(k) + " is not an integer");
    m.k = k.get_num().get_si();
  }
  return m;
}

bool same_entry(const CatalogEntry& x, const CatalogEntry& y) {
  return x.id == y.id && x.cf == y.cf && x.cf.param == y.cf.param && x.param == y.param && x.limit == y.limit &&
         same_rate(x.rate, y.rate) && x.rate_k_param == y.rate_k_param && x.rate_from == y.rate_from &&
         x.rate_to == y.rate_to && x.role == y.role && x.sibling == y.sibling &&
         x.half_shift_of == y.half_shift_of && x.provenance == y.provenance;
}

std::string_view role_name(Role r) {
  switch (r) {
    case Role::oracle: return "oracle";
    case Role::variant: return "variant";
    case Role::exploratory: return "exploratory";
  }
  return "oracle";
}

std::string_view limit_kind_name(LimitKind k) {
  switch (k) {
    case LimitKind::expr: return "expr";
    case LimitKind::gamma_ratio_sq: return "gamma_ratio_sq";
    case LimitKind::none: return "none";
  }
  return "none";
}

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> cat = make_builtin();
  return cat;
}

const CatalogEntry* find(const std::vector<CatalogEntry>& cat, std::string_view id) {
  const std::string key = normalized_id(id);
  for (const auto& e : cat)
    if (normalized_id(e.id) == key) return &e;
  return nullptr;
}

const CatalogEntry& builtin(std::string_view id) {
  if (const auto* e = find(builtin_catalog(), id)) return *e;
  throw SpecError("no builtin catalog entry '" + std::string(id) + "'");
}

std::vector<Diagnostic> validate(const CatalogEntry& e) {
  std::vector<Diagnostic> out;
  auto bad = [&](std::string field, std::string msg) { out.push_back({e.id, std::move(field), std::move(msg)}); };

  if (e.id.empty()) bad("id", "empty id");
  if (e.cf.a_poly.is_zero()) bad("cf.a_poly", "partial numerator polynomial is identically zero");
  if (e.cf.b_poly.is_zero()) bad("cf.b_poly", "partial denominator polynomial is identically zero");
  for (std::size_t i = 0; i < e.cf.b_heads.size(); ++i)
    if (!e.cf.b_heads[i].free_of_n()) bad("cf.b_heads[" + std::to_string(i) + "]", "head depends on n");
  for (std::size_t i = 0; i < e.cf.a_heads.size(); ++i)
    if (!e.cf.a_heads[i].free_of_n()) bad("cf.a_heads[" + std::to_string(i) + "]", "head depends on n");

  const bool cf_param = e.cf.depends_on_param();
  const bool limit_param = e.limit.kind == LimitKind::gamma_ratio_sq ||
                           (e.limit.kind == LimitKind::expr && e.limit.expr.depends_on_z());
  const bool rate_param = e.rate.rho.depends_on_z() || (e.rate.C && e.rate.C->depends_on_z()) ||
                          e.rate_k_param.has_value();
  if (e.param) {
    if (!cf_param) bad("param", "parameter declared but the fraction does not depend on it");
    if (e.cf.param && *e.cf.param != e.param->name) bad("param.name", "parameter letter differs from the fraction's");
    if (e.param->samples.empty()) bad("param.samples", "no sample values");
  } else if (cf_param || limit_param || rate_param) {
    bad("param", "entry depends on a parameter but declares none");
  }

  switch (e.role) {
    case Role::oracle:
      if (e.limit.kind == LimitKind::none) bad("limit", "oracle entry without a limit");
      break;
    case Role::variant:
      if (e.sibling.empty()) bad("sibling", "variant entry without a sibling");
      if (e.limit.kind == LimitKind::none) bad("limit", "variant entry without a limit");
      break;
    case Role::exploratory:
      if (e.limit.kind != LimitKind::none) bad("limit", "exploratory entry carries a limit");
      break;
  }

  if (e.rate_from < 1 || e.rate_to <= e.rate_from) bad("rate.window", "need 1 <= from < to");
  if (e.rate.kind == RateKind::geometric) {
    if (e.rate.e < 1) bad("rate.e", "e must be positive");
    std::vector<std::optional<BigRational>> at;
    if (e.param) for (const auto& s : e.param->samples) at.emplace_back(s);
    else at.emplace_back(std::nullopt);
    for (const auto& s : at) {
      try {
        const Precision p(20);
        const Real rho = numkit::eval_const_expr(e.rate.rho, p, s ? std::optional<Real>(Real(*s, p)) : std::nullopt);
        if (!(abs(rho) > 1))
          bad("rate.rho", "|rho| = " + abs(rho).to_string(6) + " is not > 1" +
                              (s ? " at " + std::string(1, e.param->name) + "=" + to_string(*s) : ""));
      } catch (const std::exception& ex) {
        bad("rate.rho", ex.what());
      }
    }
  } else {
    if (e.param && e.rate_k_param) {
      for (const auto& s : e.param->samples) {
        try {
          if (e.rate_at(s).k < 1) bad("rate.k_param", "exponent < 1 at sample " + to_string(s));
        } catch (const std::exception& ex) {
          bad("rate.k_param", ex.what());
        }
      }
    } else if (e.rate.k < 1) {
      bad("rate.k", "algebraic exponent must be >= 1");
    }
  }
  return out;
}

std::string to_json(const std::vector<CatalogEntry>& cat) {
  json entries = json::array();
  for (const auto& e : cat) {
    json j;
    j["id"] = e.id;
    j["cf"] = cf_json(e.cf);
    if (e.param) {
      json s = json::array();
      for (const auto& v : e.param->samples) s.push_back(to_string(v));
      j["param"] = {{"name", std::string(1, e.param->name)}, {"samples", std::move(s)}};
    }
    json l;
    l["kind"] = limit_kind_name(e.limit.kind);
    if (e.limit.kind == LimitKind::expr) l["expr"] = e.limit.expr.to_string();
    l["label"] = e.limit.label;
    j["limit"] = std::move(l);
    j["rate"] = rate_json(e);
    j["role"] = role_name(e.role);
    if (!e.sibling.empty()) j["sibling"] = e.sibling;
    if (!e.half_shift_of.empty()) j["half_shift_of"] = e.half_shift_of;
    j["provenance"] = e.provenance;
    entries.push_back(std::move(j));
  }
  json doc;
  doc["format"] = kFormat;
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

std::vector<CatalogEntry> from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw ParseError("catalog line " + std::to_string(line_of(text, ex.byte)) + ": " + ex.what());
  }
  if (!doc.is_object() || doc.value("format", std::string()) != kFormat)
    throw ParseError(std::string("catalog: field format: expected \"") + kFormat + "\"");
  if (!doc.contains("entries") || !doc["entries"].is_array())
    throw ParseError("catalog: field entries: expected an array");
  std::vector<CatalogEntry> out;
  std::set<std::string> seen;
  std::size_t i = 0;
  for (const auto& j : doc["entries"]) {
    std::string field = "entry";
    try {
      out.push_back(entry_from_json(j, field));
    } catch (const std::exception& ex) {
      const std::string id = j.is_object() ? j.value("id", std::string("?")) : "?";
      throw ParseError("catalog entry " + std::to_string(i) + " (" + id + "): field " + field + ": " + ex.what());
    }
    if (!seen.insert(normalized_id(out.back().id)).second)
      throw ParseError("catalog entry " + std::to_string(i) + ": duplicate id '" + out.back().id + "'");
    ++i;
  }
  return out;
}

std::vector<CatalogEntry> load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open catalog file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

void save(const std::vector<CatalogEntry>& cat, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write catalog file " + path.string());
  out << to_json(cat);
}

std::optional<Real> eval_limit(const CatalogEntry& e, Precision p, const std::optional<BigRational>& s) {
  switch (e.limit.kind) {
    case LimitKind::none:
      return std::nullopt;
    case LimitKind::expr:
      return numkit::eval_const_expr(e.limit.expr, p, param_real(e, s, p.with_guard()));
    case LimitKind::gamma_ratio_sq: {
      if (!s) throw DomainError("entry '" + e.id + "' needs a parameter value");
      if (*s <= 0) throw DomainError("Gamma ratio needs s > 0");
      const Precision w = p.with_guard();
      const Real x(*s, w);
      const Real r = exp(numkit::ln_gamma(x, w) - numkit::ln_gamma(x + BigRational(1, 2), w));
      return (r * r).rounded(p);
    }
  }
  return std::nullopt;
}

int limit_max_digits(const CatalogEntry& e) {
  switch (e.limit.kind) {
    case LimitKind::none: return 0;
    case LimitKind::expr: return e.limit.expr.max_digits();
    case LimitKind::gamma_ratio_sq: return INT_MAX;
  }
  return 0;
}

}  // namespace cfvar::catalog

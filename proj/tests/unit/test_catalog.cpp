#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "cfvar/catalog/catalog.hpp"
#include "cfvar/catalog/verify.hpp"
#include "cfvar/errors.hpp"

using namespace cfvar;
using namespace cfvar::catalog;

namespace {

BigRational q(long a, long b = 1) { return BigRational(a, b); }

Real mp_const(int (*fn)(mpfr_ptr, mpfr_rnd_t), Precision p) {
  Real r(p);
  fn(r.get(), MPFR_RNDN);
  return r;
}

// 2E(m)/K(m) from the AGM with the c_n^2 sum, all in MPFR.
Real mp_two_E_over_K(const BigRational& m, Precision p) {
  Real a(1L, p), b(1L - Real(m, p)), c2(m, p);
  mpfr_sqrt(b.get(), b.get(), MPFR_RNDN);
  Real sum = c2 / 2L;
  for (long k = 1; k < 200; ++k) {
    Real an = (a + b) / 2L;
    Real bn(p);
    mpfr_mul(bn.get(), a.get(), b.get(), MPFR_RNDN);
    mpfr_sqrt(bn.get(), bn.get(), MPFR_RNDN);
    c2 = ((a - b) / 2L) * ((a - b) / 2L);
    sum += ldexp(c2, k - 1);
    a = an;
    b = bn;
    if (c2.is_zero() || c2.log10_abs() < -2.0 * p.digits() - 10) break;
  }
  return (1L - sum) * 2L;
}

const Check* find_check(const std::vector<Check>& v, std::string_view name) {
  for (const auto& c : v)
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<std::pair<BigRational, BigRational>> layers(const CatalogEntry& e, long count,
                                                        const std::optional<ZValue>& z = std::nullopt) {
  std::vector<std::pair<BigRational, BigRational>> out;
  out.emplace_back(0, e.cf.b(0, z));
  for (long n = 1; n < count; ++n) out.emplace_back(e.cf.a(n, z), e.cf.b(n, z));
  return out;
}

using L = std::vector<std::pair<BigRational, BigRational>>;

VerifyConfig config(int prec, unsigned jobs = 1, bool rates = true) {
  VerifyConfig c;
  c.prec = prec;
  c.jobs = jobs;
  c.rates = rates;
  return c;
}

}  // namespace

TEST_CASE("builtin catalog contents") {
  const auto& cat = builtin_catalog();
  CHECK(cat.size() == 23);
  std::set<std::string> ids;
  for (const auto& e : cat) {
    ids.insert(e.id);
    const auto d = validate(e);
    CHECK_MESSAGE(d.empty(), e.id);
  }
  CHECK(ids.size() == cat.size());
  CHECK(builtin("thm6").limit.expr.to_string() == "gamma_q4");
  CHECK(builtin("thm5").limit.expr.to_string() == "3*eta_minus_im/omega_minus_im");
  CHECK(find(cat, "small_apery") == &builtin("small-apery"));
  CHECK(find(cat, "nope") == nullptr);
  CHECK_THROWS_AS(builtin("nope"), SpecError);
  CHECK(builtin("f-z").role == Role::exploratory);
  CHECK(builtin("bessel42").sibling == "bessel42-cubic");
}

TEST_CASE("displayed partial fraction layers") {
  CHECK(layers(builtin("tiny-apery"), 5) == L{{0, 0}, {2, 3}, {-1, 9}, {-4, 15}, {-9, 21}});
  CHECK(layers(builtin("small-apery"), 5) == L{{0, 0}, {5, 3}, {1, 25}, {16, 69}, {81, 135}});
  CHECK(layers(builtin("big-apery"), 4) == L{{0, 0}, {6, 5}, {-1, 117}, {-64, 535}});
  CHECK(layers(builtin("thm2"), 5) == L{{0, 80}, {-160, 47}, {81, 177}, {625, 397}, {2401, 705}});
  CHECK(layers(builtin("thm3"), 4) == L{{0, 112}, {16, 284}, {-729, 2200}, {-15625, 7380}});
  CHECK(layers(builtin("thm4"), 4) == L{{0, 36}, {324, 33}, {-729, 162}, {-5625, 362}});
  CHECK(layers(builtin("thm5"), 4) == L{{0, -128}, {64, 23}, {-729, 166}, {-15625, 549}});
  CHECK(layers(builtin("thm6"), 5) == L{{0, 8}, {8, 11}, {-9, 24}, {-25, 36}, {-49, 48}});
  const auto z = ZValue::of(q(1, 3));
  CHECK(layers(builtin("thm8"), 4, z) ==
        L{{0, q(5, 3)}, {q(-1, 9), q(20, 3)}, {-1, q(40, 3)}, {q(-25, 9), 20}});
}

TEST_CASE("thm9 at z=0 is small Apery; thm8 at z=0 is the constant 2") {
  const auto& t9 = builtin("thm9");
  const auto& sa = builtin("small-apery");
  const auto z0 = ZValue::of(0);
  for (long n = 0; n <= 30; ++n) {
    CHECK(t9.cf.b(n, z0) == sa.cf.b(n));
    if (n >= 1) CHECK(t9.cf.a(n, z0) == sa.cf.a(n));
  }
  const auto r = limit(builtin("thm8").cf, Precision(30), z0);
  CHECK(r.terminated);
  CHECK(r.value == 2);
}

TEST_CASE("serialization round trip and diagnostics") {
  const auto path = std::filesystem::temp_directory_path() / "cfvar_catalog_roundtrip.json";
  save(builtin_catalog(), path);
  const auto back = load(path);
  REQUIRE(back.size() == builtin_catalog().size());
  for (std::size_t i = 0; i < back.size(); ++i) CHECK_MESSAGE(same_entry(back[i], builtin_catalog()[i]), back[i].id);
  CHECK(to_json(back) == to_json(builtin_catalog()));
  std::filesystem::remove(path);

  CHECK_THROWS_AS(from_json("{\"format\": \"other\", \"entries\": []}"), ParseError);
  try {
    from_json("{\n\"format\": \"cfvar-catalog/1\",\n\"entries\": [\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& ex) {
    CHECK(std::string(ex.what()).find("line 4") != std::string::npos);
  }
  std::string text = to_json({builtin("thm6")});
  const auto pos = text.find("\"rho\": \"");
  text.replace(pos, 8, "\"rho\": \"(");
  try {
    from_json(text);
    FAIL("expected a parse error");
  } catch (const ParseError& ex) {
    CHECK(std::string(ex.what()).find("rate.rho") != std::string::npos);
  }
  CHECK(from_json("{\"format\": \"cfvar-catalog/1\", \"entries\": []}").empty());

  CatalogEntry bad = builtin("tiny-apery");
  bad.cf.a_poly = Poly2();
  auto d = validate(bad);
  REQUIRE(!d.empty());
  CHECK(d[0].field == "cf.a_poly");

  bad = builtin("tiny-apery");
  bad.rate.rho = numkit::parse_const_expr("1");
  d = validate(bad);
  REQUIRE(d.size() == 1);
  CHECK(d[0].field == "rate.rho");

  bad = builtin("thm7");
  bad.param.reset();
  CHECK(!validate(bad).empty());
}

TEST_CASE("verify_entry against independent oracles") {
  VerifyConfig cfg;
  cfg.prec = 40;
  SUBCASE("tiny Apery") {
    const auto r = verify_entry(builtin("tiny-apery"), cfg);
    CHECK(r.pass);
    REQUIRE(r.samples.size() == 1);
    const Precision w(60);
    const Real value = limit(builtin("tiny-apery").cf, Precision(40)).value;
    CHECK(abs(value - mp_const(mpfr_const_log2, w)) < epsilon10(40, w));
    CHECK(find_check(r.samples[0].checks, "rate.C")->pass);
  }
  SUBCASE("thm9 at z=1/5") {
    const Precision w(60);
    Real pz = mp_const(mpfr_const_pi, w) / 5L, ch(w);
    mpfr_cosh(ch.get(), pz.get(), MPFR_RNDN);
    const Real oracle = (ch - 1L) / Real(q(3, 25), w);
    const Real value = limit(builtin("thm9").cf, Precision(40), ZValue::of(q(1, 5))).value;
    CHECK(abs(value - oracle) < epsilon10(30, w));
  }
  SUBCASE("thm8 at z=1/2") {
    const Precision w(60);
    const Real value = limit(builtin("thm8").cf, Precision(40), ZValue::of(q(1, 2))).value;
    CHECK(abs(value - mp_two_E_over_K(q(1, 2), w)) < epsilon10(30, w));
    CHECK(abs(*eval_limit(builtin("thm8"), Precision(40), q(-1)) - mp_two_E_over_K(q(-1), w)) <
          epsilon10(35, w));
  }
  SUBCASE("gamma ratio oracle at s=1/2 and s=1") {
    const Precision w(40);
    const Real pi = mp_const(mpfr_const_pi, w);
    CHECK(abs(*eval_limit(builtin("gamma-s"), w, q(1, 2)) - pi) < epsilon10(35, w));
    CHECK(abs(*eval_limit(builtin("gamma-s"), w, q(1)) - 4L / pi) < epsilon10(35, w));
  }
  SUBCASE("half-shift checks") {
    for (const char* id : {"s-small", "s-tiny", "s-big", "f-z"}) {
      const auto& e = builtin(id);
      const auto r = verify_entry(e, config(20, 1, false));
      const Check* c = find_check(r.checks, "half_shift");
      REQUIRE(c);
      CHECK_MESSAGE(c->pass, id);
    }
  }
}

TEST_CASE("verify_all") {
  CHECK(verify_all({}).pass);
  CHECK(verify_all({}).entries.empty());

  std::vector<CatalogEntry> cat;
  for (const auto& e : builtin_catalog())
    if (e.role != Role::exploratory) cat.push_back(e);
  const auto clean = verify_all(cat, config(40, 2));
  for (const auto& e : clean.entries) CHECK_MESSAGE(e.pass, e.id);
  CHECK(clean.pass);

  for (auto& e : cat)
    if (e.id == "thm6") e.cf.b_heads[1] = Poly2(12);
  const auto broken = verify_all(cat, config(40, 2));
  CHECK(!broken.pass);
  CHECK(broken.failed() == 1);
  for (const auto& e : broken.entries) CHECK(e.pass == (e.id != "thm6"));

  CHECK(report_json(clean, {}) == report_json(clean, {}));
  CHECK(report_table(broken).find("thm6") != std::string::npos);
}

TEST_CASE("bessel42 variants") {
  const auto v = resolve_bessel_variants({&builtin("bessel42"), &builtin("bessel42-cubic")});
  CHECK(v.decisive);
  CHECK(v.winner == "bessel42");
  CHECK(v.deviations[0] < kVariantMatchTol);
  CHECK(v.margin > kVariantMargin);
}

TEST_CASE("Moebius relations between S-forms and their companions") {
  const auto rel = moebius_relations(Precision(40));
  REQUIRE(rel.size() == 3);
  for (const auto& r : rel) {
    CHECK_MESSAGE(r.pass, r.name);
    CHECK(r.residual < 1e-30);
  }
  CHECK(!rel[0].printed_matches);
  CHECK(rel[0].printed_residual > 1);
  CHECK(rel[0].derived.equivalent({0, 800, 1, 10}));
  CHECK(rel[1].printed_matches);
  CHECK(rel[2].printed_matches);
}

TEST_CASE("f(z) observations") {
  const auto obs = f_observations(40);
  CHECK(find_check(obs, "f(i/2) = 0")->pass);
  CHECK(find_check(obs, "even at z=1/5")->pass);
  CHECK(find_check(obs, "even at z=3/10")->pass);
  CHECK(find_check(obs, "f''(0) = (-24S+1920)/(7S-528)")->pass);
  // the remainder at z=10 is about -36.8/z^2, outside the 0.1 budget
  const Check* big = find_check(obs, "f(10) + 600 + 113/12");
  CHECK(!big->pass);
  CHECK(big->residual == doctest::Approx(0.368).epsilon(0.01));
  for (const char* name : {"rational at z=i3/4", "rational at z=i5/4", "rational at z=i5/6", "rational at z=i7/6"})
    CHECK_MESSAGE(find_check(obs, name)->pass, name);
  CHECK(!find_check(obs, "rational at z=i1/4")->pass);

  const Real x(q(355, 113), Precision(30));
  CHECK(rational_reconstruct(x, BigInt(1000)) == q(355, 113));
  CHECK(rational_reconstruct(x, BigInt(100)) == q(22, 7));
}

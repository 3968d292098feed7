#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cfvar/cfcore/convergents.hpp"
#include "cfvar/cfcore/rate.hpp"
#include "cfvar/cfcore/recurrence.hpp"
#include "cfvar/errors.hpp"

using namespace cfvar;

namespace {

const char* kTiny = "[[0,3(2n-1)],[2,-n^2]]";
const char* kSmall = "[[0,11n^2-11n+3],[5,n^4]]";
const char* kBig = "[[0,(2n-1)(17n^2-17n+5)],[6,-n^6]]";
const char* kThm2 = "[[80,47,44n²+1],[−160,(2n+1)⁴]]";

Real mp_log2(Precision p) {
  Real r(p);
  mpfr_const_log2(r.get(), MPFR_RNDN);
  return r;
}

Real mp_zeta(unsigned long s, Precision p) {
  Real r(p);
  mpfr_zeta_ui(r.get(), s, MPFR_RNDN);
  return r;
}

Real mp_pi(Precision p) {
  Real r(p);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

BigRational q(long a, long b = 1) { return BigRational(a, b); }

Poly2 P(const char* s) { return parse_poly2(s).poly; }

}  // namespace

TEST_CASE("poly2 parse and print") {
  CHECK(P("3(2n-1)").to_string() == "6n-3");
  CHECK(P("(2n+1)^4") == P("(2n+1)⁴"));
  CHECK(P("(2n+1)^4").to_string() == "16n^4+32n^3+24n^2+8n+1");
  CHECK(P("44n²+1+36z²").to_string() == "44n^2+1+36z^2");
  CHECK(P("−n^2z^2").to_string() == "-n^2z^2");
  CHECK(P("12/7").to_string() == "(12/7)");
  CHECK(P("n(20n²+3)") == P("20n^3+3n"));
  CHECK(P("2·n·z") == P("2nz"));
  CHECK(P("(n²+4z²)(n²+9z²)").degree_z() == 4);
  CHECK(parse_poly2("4s-1").param == 's');
  CHECK_THROWS_AS(P("1.5n"), ParseError);
  CHECK_THROWS_AS(P("(n+1"), ParseError);
  CHECK_THROWS_AS(P("n/(n+1)"), ParseError);
}

TEST_CASE("poly2 arithmetic and substitution") {
  const Poly2 p = P("11n^2-11n+3");
  CHECK(p.shift_n(q(1, 2)) == P("11n^2+1/4*11-11/2+3"));
  CHECK(p.substitute_n(2, 1) == P("11(2n+1)^2-11(2n+1)+3"));
  CHECK(p.eval(q(3)) == 69);
  CHECK(P("2n+4").content() == 2);
  CHECK(P("n/2+1/3").content() == q(1, 6));
  const Poly2 g = P("n^2+9z^2");
  CHECK(g.eval(2, ZValue::of(q(1, 3))) == 5);
  CHECK(g.eval(2, ZValue::squared(q(-1, 4))) == q(7, 4));
  CHECK_THROWS_AS(P("nz").eval(1, ZValue::squared(q(1))), DomainError);
  CHECK_THROWS_AS(g.eval(1), DomainError);
  CHECK(P("1+z^2").even_in_z());
  CHECK_FALSE(P("1+z").even_in_z());
}

TEST_CASE("materialization convention matches the displayed layers") {
  const CFSpec small = parse_cfspec(kSmall);
  CHECK(small.b(2) == 25);
  CHECK(small.b(1) == 3);
  CHECK(small.a(1) == 5);
  CHECK(small.a(2) == 1);
  CHECK(small.a(3) == 16);
  const CFSpec thm2 = parse_cfspec(kThm2);
  CHECK(thm2.a(2) == 81);
  CHECK(thm2.b(1) == 47);
  CHECK(thm2.b(2) == 177);
  CHECK(thm2.a(1) == -160);
  const CFSpec tiny = parse_cfspec(kTiny);
  CHECK(tiny.a(3) == -4);
  CHECK(materialize(tiny, 2, Part::b) == 9);
  const CFSpec big = parse_cfspec(kBig);
  CHECK(big.b(3) == 535);
  CHECK(big.a(4) == -729);
  const CFSpec thm8 = parse_cfspec("[[2-z,4n(2-z)],[-(2n+1)^2z^2]]");
  CHECK(thm8.param == 'z');
  CHECK(thm8.a_heads.empty());
  CHECK(thm8.a(1, ZValue::of(q(1, 2))) == q(-1, 4));
  CHECK_THROWS_AS(thm8.a(1), DomainError);
  CHECK_THROWS_AS(parse_cfspec("[[n,1],[1,1]]"), ParseError);
  CHECK(parse_cfspec(tiny.to_string()) == tiny);
}

TEST_CASE("convergents") {
  const CFSpec tiny = parse_cfspec(kTiny);
  auto c = convergents(tiny, 2);
  CHECK(c[1].p / c[1].q == q(2, 3));
  // p2 = 9*2 + (-1)*0, q2 = 9*3 + (-1)*1
  CHECK(c[2].p == 18);
  CHECK(c[2].q == 26);
  CHECK(c[2].p / c[2].q == q(9, 13));
  const auto s = convergents(parse_cfspec(kSmall), 1);
  CHECK(s[1].p / s[1].q == q(5, 3));
  CHECK_THROWS_AS(convergents(parse_cfspec("[[1,1],[0]]"), 2), DomainError);
}

TEST_CASE("determinant identity to depth 50") {
  for (const char* text : {kTiny, kSmall, kBig, kThm2, "[[0,12n],[4,-(2n+1)^2]]",
                           "[[0,(2n-1)(5n^2-5n+2)],[12/7,-16n^6]]"}) {
    const CFSpec cf = parse_cfspec(text);
    const auto c = convergents(cf, 50);
    BigRational prod = 1;
    for (long n = 1; n <= 50; ++n) {
      prod *= cf.a(n);
      const auto& cn = c[static_cast<std::size_t>(n)];
      const auto& cm = c[static_cast<std::size_t>(n - 1)];
      const BigRational lhs = cn.p * cm.q - cm.p * cn.q;
      const BigRational rhs = (n % 2 == 1 ? 1 : -1) * prod;
      REQUIRE(lhs == rhs);
    }
  }
}

TEST_CASE("integer-scaled values agree with exact convergents") {
  const CFSpec cf = parse_cfspec("[[0,(2n-1)(5n^2-5n+2)],[12/7,-16n^6]]");
  const auto exact = convergents(cf, 30);
  const Precision p(60);
  const auto vals = convergent_values(cf, 30, p);
  for (long n = 0; n <= 30; ++n) {
    const auto& e = exact[static_cast<std::size_t>(n)];
    CHECK(relative_error(vals[static_cast<std::size_t>(n)], Real(BigRational(e.p / e.q), p)) < epsilon10(55, p));
  }
}

TEST_CASE("limits of the three classical fractions") {
  const Precision p(40);
  const Precision o(60);
  const auto tiny = limit(parse_cfspec(kTiny), p);
  CHECK(abs(tiny.value - mp_log2(o)) < epsilon10(40, o));
  CHECK_FALSE(tiny.alternating);
  const auto small = limit(parse_cfspec(kSmall), p);
  const Real pi = mp_pi(o);
  CHECK(abs(small.value - pi * pi / 6) < epsilon10(40, o));
  CHECK(small.alternating);
  const auto big = limit(parse_cfspec(kBig), p);
  CHECK(abs(big.value - mp_zeta(3, o)) < epsilon10(40, o));
  CHECK(big.depth <= 400);
  CHECK_THROWS_AS(limit(parse_cfspec(kTiny), p, std::nullopt, 10), NoConvergence);
}

TEST_CASE("terminating fraction") {
  const CFSpec thm8 = parse_cfspec("[[2-z,4n(2-z)],[-(2n+1)^2z^2]]");
  const auto r = limit(thm8, Precision(30), ZValue::of(0));
  CHECK(r.terminated);
  CHECK(r.value == Real(2L, Precision(30)));
}

TEST_CASE("rate fits") {
  const Precision o(400);
  using numkit::parse_const_expr;
  SUBCASE("tiny") {
    RateModel m;
    m.C = parse_const_expr("2*pi");
    m.rho = parse_const_expr("1+sqrt2");
    m.e = 4;
    m.f = 2;
    const auto fit = rate_fit(parse_cfspec(kTiny), mp_log2(o), 40, 60, m);
    CHECK(fit.sign_hat == RateSign::plus);
    CHECK(fit.sign_matches);
    CHECK(std::fabs(fit.ratio_hat / fit.ratio_model - 1) < 0.005);
    CHECK(std::fabs(fit.c_hat / *fit.c_model - 1) < 0.02);
    CHECK(fit.ratios_monotone);
  }
  SUBCASE("small alternates") {
    RateModel m;
    m.sign = RateSign::alt_n;
    m.C = parse_const_expr("4*pi^2");
    m.rho = parse_const_expr("golden");
    m.e = 10;
    m.f = 5;
    const Real pi = mp_pi(o);
    const auto fit = rate_fit(parse_cfspec(kSmall), pi * pi / 6, 40, 60, m);
    CHECK(fit.sign_hat == RateSign::alt_n);
    CHECK(fit.sign_matches);
    CHECK(std::fabs(fit.c_hat / *fit.c_model - 1) < 0.02);
  }
  SUBCASE("underflow") {
    RateModel m;
    m.rho = parse_const_expr("1+sqrt2");
    m.e = 4;
    CHECK_THROWS_AS(rate_fit(parse_cfspec(kTiny), mp_log2(Precision(30)), 40, 60, m), PrecisionUnavailable);
  }
}

TEST_CASE("recurrences") {
  const ThreeTermRecurrence eq1{P("(2n+1)^2"), P("44n^2+1"), P("(2n-1)^2")};
  SUBCASE("denominator profile") {
    auto prof = denominator_profile(eq1, 0, 1, 3);
    CHECK(BigInt(225) % prof[3].denominator == 0);
    prof = denominator_profile(eq1, 1, 0, 3);
    CHECK(BigInt(225) % prof[3].denominator == 0);
    const ThreeTermRecurrence fib{P("1"), P("1"), P("1")};
    for (const auto& r : denominator_profile(fib, 2, 5, 20)) CHECK(r.denominator == 1);
    CHECK(odd_lcm(3) == 15);
  }
  SUBCASE("to cf") {
    const auto rc = recurrence_to_cf(eq1);
    CHECK(rc.tail.b_poly == P("44n^2+1"));
    CHECK(rc.tail.a_poly == P("(2n+1)^4"));
    CHECK(rc.tail.a(3) == 625);
    CHECK(rc.delta == 1);
    // y(0)=0, y(1)=1 lines up with q_{-1}=0, q_0=1
    const auto y = propagate(eq1, 0, 1, 21);
    const auto conv = convergents(rc.tail, 20);
    for (long m = 0; m <= 20; ++m) {
      const BigRational u = normalization(rc, m + 1) * y[static_cast<std::size_t>(m + 1)];
      CHECK(u == conv[static_cast<std::size_t>(m)].q * normalization(rc, 1));
    }
    const auto fib = recurrence_to_cf({P("1"), P("1"), P("1")});
    CHECK(fib.tail.b_poly == P("1"));
    CHECK(fib.tail.a_poly == P("1"));
    CHECK_THROWS_AS(recurrence_to_cf({P("n(n+1)"), P("1"), P("1")}), SpecError);
    CHECK_THROWS_AS(recurrence_to_cf({P("n^2"), P("1"), P("1")}), SpecError);
  }
  SUBCASE("check") {
    const auto y = propagate(eq1, q(1), q(3), 10);
    CHECK(check_recurrence(eq1, y).pass);
    auto bad = y;
    bad[5] += 1;
    CHECK_FALSE(check_recurrence(eq1, bad).pass);
    const ThreeTermRecurrence eq2a{P("(n+1)^3"), P("(2n+1)(17n^2+17n+5)"), P("-n^3")};
    std::vector<BigRational> A;
    for (unsigned long n = 0; n <= 5; ++n) {
      BigInt s = 0;
      for (unsigned long k = 0; k <= n; ++k) {
        const BigInt t = binomial(n, k) * binomial(n + k, k);
        s += t * t;
      }
      A.emplace_back(s);
    }
    CHECK(A[1] == 5);
    CHECK(A[2] == 73);
    CHECK(check_recurrence(eq2a, A).pass);
    std::vector<Real> r;
    for (const auto& v : y) r.emplace_back(v, Precision(30));
    CHECK(check_recurrence(eq1, r, 1e-10).pass);
  }
}

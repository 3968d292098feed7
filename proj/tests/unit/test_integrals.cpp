#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cfvar/cfcore/recurrence.hpp"
#include "cfvar/errors.hpp"
#include "cfvar/integrals/integrals.hpp"
#include "cfvar/numkit/constants.hpp"
#include "cfvar/numkit/lseries.hpp"
#include "cfvar/numkit/special.hpp"

using namespace cfvar;
using namespace cfvar::integrals;

namespace {

const Precision P20(20);

BigRational q(long a, long b = 1) { return BigRational(a, b); }

double mp_pi() { return std::acos(-1.0); }

// K(z) = pi / (2 agm(1, sqrt(1-z))) straight from MPFR.
double mp_K(double z) {
  Real one(1L, P20), r(P20), s(std::sqrt(1 - z), P20);
  mpfr_agm(r.get(), one.get(), s.get(), MPFR_RNDN);
  return mp_pi() / (2 * r.to_double());
}

double mp_gamma(double x) {
  Real r(P20), a(x, P20);
  mpfr_gamma(r.get(), a.get(), MPFR_RNDN);
  return r.to_double();
}

double mp_zeta3() {
  Real r(P20);
  mpfr_zeta_ui(r.get(), 3, MPFR_RNDN);
  return r.to_double();
}

double c(numkit::ConstId id) { return numkit::constant_value(id, P20).to_double(); }

ThreeTermRecurrence rec(const char* rp, const char* r0, const char* rm) {
  return {parse_poly2(rp).poly, parse_poly2(r0).poly, parse_poly2(rm).poly};
}

}  // namespace

TEST_CASE("convergence domain and c-matrices") {
  const Params3 half = diagonal3(q(1, 2));
  CHECK(convergent3_ok(half));
  CHECK_FALSE(convergent3_ok({{q(1, 2), q(-3, 2), q(1, 2), q(1, 2), q(1, 2), q(1, 2)}}));
  const Params3 mixed{{q(1, 2), q(3, 2), q(1, 2), q(1, 2), q(3, 2), q(1, 2)}};
  CHECK(convergent3_ok(mixed));
  for (const auto& v : convergence_quantities3(mixed)) {
    CHECK(v >= q(1, 2));
    CHECK(v <= q(5, 2));
  }
  for (const auto& v : cmatrix3(half).cell) CHECK(v == q(1, 2));
  for (const auto& v : cmatrix2(diagonal2(q(1, 2))).cell) CHECK(v == q(1, 2));

  const Params3 generic{{q(1, 3), q(2, 5), q(-1, 7), q(3, 4), q(5, 6), q(1, 9)}};
  const CMatrix3 m = cmatrix3(generic);
  CHECK(m.at(0, 0) == generic.a[0]);
  CHECK(m.at(2, 2) == generic.a[4]);
  CHECK(m.at(2, 1) == generic.a[1] + generic.a[4] + generic.a[5] - generic.a[0] - generic.a[3]);
  CHECK(m.at(0, 0) + m.at(0, 2) == m.at(2, 0) + m.at(2, 2));
  CHECK(params_from(m) == generic);
  const Params2 g2{{q(1, 3), q(2, 5), q(-1, 7), q(3, 4), q(5, 6)}};
  CHECK(params_from(cmatrix2(g2)) == g2);
  CHECK(CMatrix2::index(0, 1) == -1);
  CHECK_THROWS_AS(cmatrix2(g2).at(1, 0), DomainError);
  CHECK_THROWS_AS(quad_I3({{q(1, 2), q(-3, 2), q(1, 2), q(1, 2), q(1, 2), q(1, 2)}}), DomainError);
}

TEST_CASE("one-dimensional Euler integrals") {
  for (double z : {0.5, 0.25}) {
    const double K = mp_K(z);
    const double E = numkit::elliptic_E(Real(z, P20), P20).to_double();
    CHECK(quad_I1(0, z).value == doctest::Approx(2 * K).epsilon(1e-12));
    const double i1 = (2 / z) * (2 / z - 1) * K - (2 / z) * (2 / z) * E;
    CHECK(std::fabs(quad_I1(1, z).value - i1) < 1e-8);
  }
  const double log_half = -std::log(0.5);
  CHECK(quad_r1(0, 0.5).value == doctest::Approx(log_half / 0.5).epsilon(1e-13));

  const auto thm8 = rec("z^2(2n+1)", "4n(2-z)", "-(2n-1)");
  const auto thm7 = rec("z^2(n+1)", "(2-z)(2n+1)", "-n");
  for (double z : {0.5, -1.0}) {
    std::vector<Real> ys;
    for (int n = 0; n <= 2; ++n) ys.emplace_back(quad_I1(n, z).value, P20);
    const auto chk = check_recurrence(thm8, ys, 1e-8, 0, Real(z, P20));
    CHECK(chk.pass);
  }
  std::vector<Real> rs;
  for (int n = 0; n <= 2; ++n) rs.emplace_back(quad_r1(n, 0.5).value, P20);
  CHECK(check_recurrence(thm7, rs, 1e-8, 0, Real(0.5, P20)).pass);
  CHECK_THROWS_AS(quad_I1(0, 1.0), DomainError);
}

TEST_CASE("Euler-Beukers double integral") {
  const double gq = mp_gamma(0.25) * mp_gamma(0.25) / (mp_gamma(0.75) * mp_gamma(0.75));
  CHECK(std::fabs(quad_I2_profile(0).value - mp_pi() / 2 * gq) < 1e-6);

  const auto coords = I2_coords(2);
  CHECK(coords[0] == std::pair{q(0), q(-1, 2)});
  CHECK(coords[1] == std::pair{q(-20), q(-1, 4)});
  CHECK(coords[2] == std::pair{q(-100), q(-47, 36)});

  const auto eq1 = rec("(2n+1)^2", "44n^2+1", "(2n-1)^2");
  std::vector<Real> ys;
  for (long n = 0; n <= 2; ++n) {
    const double v = quad_I2_profile(n).value;
    CHECK(std::fabs(v - I2_from_coords(n, P20).to_double()) < 1e-5);
    ys.emplace_back(v, P20);
  }
  CHECK(check_recurrence(eq1, ys, 1e-5).pass);

  // invariance under the column swap: exchanging (a1,a3) with (a2,a4)
  const Params2 a{{q(1, 2), q(1, 2), q(3, 2), q(1, 2), q(1, 2)}};
  const Params2 b{{q(1, 2), q(3, 2), q(1, 2), q(1, 2), q(1, 2)}};
  CHECK(normalized2(a).value == doctest::Approx(normalized2(b).value).epsilon(1e-9));
}

TEST_CASE("Beukers triple integral") {
  CHECK(std::fabs(quad_I3_profile(0).value - 8 * c(numkit::ConstId::omega_plus)) < 1e-4);
  const auto coords = I3_coords(2);
  CHECK(coords[1] == std::pair{q(-56), q(-3, 2)});
  CHECK(coords[2] == std::pair{q(-1768, 3), q(-142, 9)});

  const auto eq2 = rec("(2n+1)^3", "4n(68n^2+3)", "-(2n-1)^3");
  std::vector<Real> ys;
  for (long n = 0; n <= 2; ++n) {
    const double v = quad_I3_profile(n).value;
    CHECK(std::fabs(v - I3_from_coords(n, P20).to_double()) < 1e-5);
    ys.emplace_back(v, P20);
  }
  CHECK(ys[2].to_double() == doctest::Approx(2.4e-3).epsilon(0.02));
  CHECK(check_recurrence(eq2, ys, 1e-3).pass);

  // real-order recursion (n+1)^3 y(n+1) = (2n+1)(17n^2+17n+5) y(n) - n^3 y(n-1)
  for (double nu : {1.25, 2.25}) {
    const double ym = quad_r3(nu - 1).value, y0 = quad_r3(nu).value, yp = quad_r3(nu + 1).value;
    const double res = std::pow(nu + 1, 3) * yp - (2 * nu + 1) * (17 * nu * nu + 17 * nu + 5) * y0 +
                       std::pow(nu, 3) * ym;
    CHECK(std::fabs(res) < 1e-3);
  }
  CHECK(quad_r3(0).value == doctest::Approx(2 * mp_zeta3()).epsilon(1e-8));
  CHECK_THROWS_AS(quad_r3(-0.5), DomainError);
}

TEST_CASE("big Apery numbers") {
  CHECK(big_apery(0) == 1);
  CHECK(big_apery(1) == 5);
  CHECK(big_apery(2) == 73);
  const auto eq2a = rec("(n+1)^3", "(2n+1)(17n^2+17n+5)", "-n^3");
  std::vector<BigRational> ys;
  for (long n = 0; n <= 20; ++n) ys.emplace_back(big_apery(n));
  CHECK(check_recurrence(eq2a, ys).pass);
}

TEST_CASE("Bessel moments") {
  // int t^k K0 = 2^(k-1) Gamma((k+1)/2)^2
  for (int k = 0; k <= 3; ++k) {
    const double g = mp_gamma((k + 1) / 2.0);
    CHECK(bessel_moment(1, k).value == doctest::Approx(std::ldexp(g * g, k - 1)).epsilon(1e-12));
  }
  CHECK(bessel_moment(2, 0).value == doctest::Approx(mp_pi() * mp_pi() / 4).epsilon(1e-12));
  const double lchi = c(numkit::ConstId::l_chi3_2);
  const double z3 = mp_zeta3();
  CHECK(std::fabs(bessel_moment(3, 1).value - 0.75 * lchi) < 1e-10);
  CHECK(std::fabs(bessel_moment(3, 3).value - (lchi - 2.0 / 3)) < 1e-8);
  CHECK(std::fabs(bessel_moment(4, 1).value - 7.0 / 8 * z3) < 1e-10);
  CHECK(std::fabs(bessel_moment(4, 3).value - (7.0 / 32 * z3 - 3.0 / 16)) < 1e-10);
  const double g13 = mp_gamma(1.0 / 3);
  CHECK(std::fabs(bessel_moment(3, 0).value - 3 * std::pow(g13, 6) / (32 * std::cbrt(4.0) * mp_pi())) < 1e-8);
  const double l2 = numkit::lvalue_eta8(2, P20).value.to_double();
  CHECK(std::fabs(bessel_moment(4, 0).value - 4 * mp_pi() * mp_pi() * l2) < 1e-8);
  const double c42 = mp_pi() / 512 * (128 * c(numkit::ConstId::omega_minus_im) + 3 * c(numkit::ConstId::eta_minus_im));
  CHECK(std::fabs(bessel_moment(4, 2).value - c42) < 1e-8);
  CHECK_THROWS_AS(bessel_moment(5, 0), DomainError);
}

TEST_CASE("hypergeometric identities") {
  const auto r = hyperg_identity_check(Precision(15));
  CHECK(r.residual1.to_double() < 1e-10);
  CHECK(r.residual2.to_double() < 1e-10);
  CHECK(r.truncated1_2n < r.truncated1_n);
  CHECK(r.pass);
}

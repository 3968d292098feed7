#include "cfvar/integrals/integrals.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

#include "cfvar/errors.hpp"
#include "cfvar/numkit/constants.hpp"
#include "cfvar/numkit/special.hpp"

namespace cfvar::integrals {
namespace {

double to_d(const BigRational& q) { return q.get_d(); }

// x^p with x possibly tiny; 0^0 = 1.
double pw(double x, double p) { return p == 0 ? 1.0 : std::pow(x, p); }

// Node on one axis with its endpoint powers folded into the weight.
struct AxisNode {
  double x;
  double xc;
  double w;
};

std::vector<AxisNode> axis(int level, double p, double q) {
  std::vector<AxisNode> out;
  double wmax = 0;
  for (const auto& nd : de_nodes(level)) {
    const double w = nd.w * pw(nd.x, p) * pw(nd.xc, q);
    if (!std::isfinite(w)) continue;
    out.push_back({nd.x, nd.xc, w});
    wmax = std::max(wmax, std::fabs(w));
  }
  std::erase_if(out, [&](const AxisNode& n) { return std::fabs(n.w) < 1e-40 * wmax; });
  return out;
}

unsigned worker_count() { return std::max(1u, std::min(8u, std::thread::hardware_concurrency())); }

// Runs body(i) for i in [0, n) across workers and sums the results in index order.
template <class F>
double parallel_sum(std::size_t n, F body) {
  const unsigned k = worker_count();
  if (k == 1 || n < 64) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) s += body(i);
    return s;
  }
  std::vector<std::future<std::vector<double>>> parts;
  for (unsigned t = 0; t < k; ++t) {
    parts.push_back(std::async(std::launch::async, [&, t] {
      std::vector<double> v;
      for (std::size_t i = t; i < n; i += k) v.push_back(body(i));
      return v;
    }));
  }
  std::vector<std::vector<double>> got;
  for (auto& f : parts) got.push_back(f.get());
  double s = 0;
  for (std::size_t i = 0; i < n; ++i) s += got[i % k][i / k];
  return s;
}

// Level-doubling driver: level_sum(level, evals) returns the tensor sum at h = 2^-level.
template <class F>
QuadResult refine(F level_sum, int first_level, double tol, QuadSpec spec) {
  QuadResult r;
  double prev = std::nan("");
  for (int level = first_level; level <= spec.max_level; ++level) {
    long evals = 0;
    const double s = level_sum(level, evals);
    r.evaluations += evals;
    if (r.evaluations > spec.budget) throw NoConvergence("quadrature node budget exhausted");
    r.level = level;
    r.value = s;
    if (!std::isnan(prev)) {
      r.error = std::fabs(s - prev);
      if (r.error <= tol * std::max(std::fabs(s), 1e-300)) return r;
    }
    prev = s;
  }
  throw NoConvergence("quadrature did not reach tolerance " + std::to_string(tol) + " (last difference " +
                      std::to_string(r.error) + ")");
}

void require_convergent(bool ok, const char* what) {
  if (!ok) throw DomainError(std::string(what) + ": parameters outside the convergence domain");
}

double gamma_product(auto const& qs) {
  const Precision p(20);
  Real lg(0L, p);
  for (const auto& q : qs) lg += numkit::ln_gamma(Real(BigRational(q + 1), p), p);
  return exp(lg).to_double();
}

}  // namespace

std::array<BigRational, 8> convergence_quantities3(const Params3& p) {
  const auto& a = p.a;
  return {a[1], a[2], a[3], a[4], a[5], a[4] + a[5] - a[3], a[1] + a[4] + a[5] - a[0] - a[3],
          a[2] + a[4] + a[5] - a[0] - a[3]};
}

std::array<BigRational, 5> convergence_quantities2(const Params2& p) {
  const auto& a = p.a;
  return {a[1], a[2], a[3], a[4], a[3] + a[4] - a[0]};
}

bool convergent3_ok(const Params3& a) {
  const auto qs = convergence_quantities3(a);
  return std::all_of(qs.begin(), qs.end(), [](const BigRational& q) { return q > -1; });
}

bool convergent2_ok(const Params2& a) {
  const auto qs = convergence_quantities2(a);
  return std::all_of(qs.begin(), qs.end(), [](const BigRational& q) { return q > -1; });
}

Params3 diagonal3(const BigRational& v) { return {{v, v, v, v, v, v}}; }
Params2 diagonal2(const BigRational& v) { return {{v, v, v, v, v}}; }

int CMatrix2::index(int i, int j) {
  if (i == 0 && j == 0) return 0;
  if (i >= 1 && i <= 3 && j >= 1 && j <= 3) return 1 + 3 * (i - 1) + (j - 1);
  return -1;
}

const BigRational& CMatrix2::at(int i, int j) const {
  const int k = index(i, j);
  if (k < 0) throw DomainError("cell (" + std::to_string(i) + "," + std::to_string(j) + ") is not part of the matrix");
  return cell[static_cast<std::size_t>(k)];
}

CMatrix3 cmatrix3(const Params3& p) {
  const auto& a = p.a;
  return {{a[0], a[4] + a[5] - a[3], a[1] + a[4] - a[0], a[2] + a[5] - a[0],                    //
           a[3], a[4] + a[5] - a[0], a[1] + a[4] - a[3], a[2] + a[5] - a[3],                    //
           a[1], a[1] + a[4] + a[5] - a[0] - a[3], a[4], a[2] + a[5] - a[1],                    //
           a[2], a[2] + a[4] + a[5] - a[0] - a[3], a[1] + a[4] - a[2], a[5]}};
}

CMatrix2 cmatrix2(const Params2& p) {
  const auto& a = p.a;
  return {{a[3] + a[4] - a[0],                           //
           a[0], a[1] + a[3] - a[0], a[2] + a[4] - a[0],  //
           a[1], a[3], a[2] + a[4] - a[1],                //
           a[2], a[1] + a[3] - a[2], a[4]}};
}

Params3 params_from(const CMatrix3& c) { return {{c.at(0, 0), c.at(2, 0), c.at(3, 0), c.at(1, 0), c.at(2, 2), c.at(3, 3)}}; }

Params2 params_from(const CMatrix2& c) { return {{c.at(1, 1), c.at(2, 1), c.at(3, 1), c.at(2, 2), c.at(3, 3)}}; }

QuadResult quad_I1(double nu, double z, QuadSpec spec) {
  if (!(nu > -0.5)) throw DomainError("quad_I1 needs nu > -1/2");
  if (!(z < 1)) throw DomainError("quad_I1 needs real z < 1");
  const double e = nu - 0.5;
  return de_integrate_1d(
      [&](double x, double xc) {
        const double d = (1 - z) + z * xc;  // 1 - z x
        return pw(x, e) * pw(xc, e) * std::pow(d, -(nu + 0.5));
      },
      spec);
}

QuadResult quad_r1(double n, double z, QuadSpec spec) {
  if (!(n > -1)) throw DomainError("quad_r1 needs n > -1");
  if (!(z < 1)) throw DomainError("quad_r1 needs real z < 1");
  return de_integrate_1d(
      [&](double x, double xc) {
        const double d = (1 - z) + z * xc;
        return pw(x, n) * pw(xc, n) * std::pow(d, -(n + 1));
      },
      spec);
}

QuadResult quad_I2(const Params2& p, QuadSpec spec) {
  require_convergent(convergent2_ok(p), "quad_I2");
  const double a0 = to_d(p.a[0]), a1 = to_d(p.a[1]), a2 = to_d(p.a[2]), a3 = to_d(p.a[3]), a4 = to_d(p.a[4]);
  const double tol = std::max(spec.tol, 1e-10);
  auto level_sum = [&](int level, long& evals) {
    const auto xs = axis(level, a1, a3);
    const auto ys = axis(level, a2, a4);
    evals = static_cast<long>(xs.size() * ys.size());
    return parallel_sum(xs.size(), [&](std::size_t i) {
      const auto& X = xs[i];
      double s = 0;
      for (const auto& Y : ys) {
        const double d = X.xc + X.x * Y.xc;  // 1 - xy
        s += Y.w * std::exp(-(a0 + 1) * std::log(d));
      }
      return X.w * s;
    });
  };
  return refine(level_sum, 3, tol, spec);
}

QuadResult quad_I3(const Params3& p, QuadSpec spec) {
  require_convergent(convergent3_ok(p), "quad_I3");
  const double a0 = to_d(p.a[0]), a1 = to_d(p.a[1]), a2 = to_d(p.a[2]), a3 = to_d(p.a[3]), a4 = to_d(p.a[4]),
               a5 = to_d(p.a[5]);
  const double tol = std::max(spec.tol, 1e-8);
  auto level_sum = [&](int level, long& evals) {
    const auto xs = axis(level, a1, a4);
    const auto ys = axis(level, a2, a5);
    const auto zs = axis(level, a3, a4 + a5 - a3);
    evals = static_cast<long>(xs.size() * ys.size() * zs.size());
    return parallel_sum(xs.size(), [&](std::size_t i) {
      const auto& X = xs[i];
      double s = 0;
      for (const auto& Y : ys) {
        const double xy = X.x * Y.x;
        double sz = 0;
        for (const auto& Z : zs) {
          const double d = Z.xc + xy * Z.x;  // 1 - (1-xy) z
          sz += Z.w * std::exp(-(a0 + 1) * std::log(d));
        }
        s += Y.w * sz;
      }
      return X.w * s;
    });
  };
  return refine(level_sum, 2, tol, spec);
}

QuadResult quad_I2_profile(long n, QuadSpec spec) {
  if (n < 0) throw DomainError("quad_I2_profile needs n >= 0");
  QuadResult r = quad_I2(diagonal2(BigRational(2 * n - 1, 2)), spec);
  if (n % 2 != 0) r.value = -r.value;
  return r;
}

QuadResult quad_I3_profile(long n, QuadSpec spec) {
  if (n < 0) throw DomainError("quad_I3_profile needs n >= 0");
  return quad_I3(diagonal3(BigRational(2 * n - 1, 2)), spec);
}

QuadResult quad_r3(double nu, QuadSpec spec) {
  if (!(nu >= 0)) throw DomainError("quad_r3 is restricted to nu >= 0");
  BigRational v(nu);
  v.canonicalize();
  return quad_I3(diagonal3(v), spec);
}

QuadResult normalized3(const Params3& a, QuadSpec spec) {
  QuadResult r = quad_I3(a, spec);
  const double g = gamma_product(convergence_quantities3(a));
  r.value /= g;
  r.error /= g;
  return r;
}

QuadResult normalized2(const Params2& a, QuadSpec spec) {
  QuadResult r = quad_I2(a, spec);
  const double g = gamma_product(convergence_quantities2(a));
  r.value /= g;
  r.error /= g;
  return r;
}

QuadResult bessel_moment(int n, int k, QuadSpec spec) {
  if (n < 1 || n > 4 || k < 0 || k > 3) throw DomainError("bessel_moment supports n in 1..4 and k in 0..3");
  const Precision p(20);
  const double cutoff = (16 * std::log(10.0) + 40) / n;
  auto f = [&](double t, double /*from_lo*/, double /*from_hi*/) {
    if (t <= 0) return 0.0;
    const double k0 = numkit::bessel_K0(Real(t, p), p).to_double();
    return std::pow(t, k) * std::pow(k0, n);
  };
  // near 0 pass the exact small argument so the log singularity keeps full accuracy
  auto head = [&](double x, double /*xc*/) { return f(x, x, 1 - x); };
  QuadSpec s = spec;
  s.tol = std::max(spec.tol, 1e-15);
  QuadResult a = de_integrate_1d(head, s);
  QuadResult b = de_integrate_interval(f, 1.0, cutoff, s);
  QuadResult r;
  r.value = a.value + b.value;
  r.error = a.error + b.error;
  r.evaluations = a.evaluations + b.evaluations;
  r.level = std::max(a.level, b.level);
  return r;
}

BigInt big_apery(long n) {
  if (n < 0) throw DomainError("big_apery needs n >= 0");
  BigInt s = 0;
  const auto un = static_cast<unsigned long>(n);
  for (unsigned long k = 0; k <= un; ++k) {
    const BigInt b = binomial(un, k) * binomial(un + k, k);
    s += b * b;
  }
  return s;
}

std::vector<std::pair<BigRational, BigRational>> I2_coords(long n_max) {
  if (n_max < 0) throw DomainError("I2_coords needs n >= 0");
  // (2n+1)^2 y(n+1) = (44n^2+1) y(n) + (2n-1)^2 y(n-1)
  std::vector<std::pair<BigRational, BigRational>> v = {{0, BigRational(-1, 2)}, {-20, BigRational(-1, 4)}};
  for (long n = 1; static_cast<long>(v.size()) <= n_max; ++n) {
    const BigRational c0(44 * n * n + 1), cm((2 * n - 1) * (2 * n - 1)), cp((2 * n + 1) * (2 * n + 1));
    const auto& [p1, q1] = v[static_cast<std::size_t>(n)];
    const auto& [p0, q0] = v[static_cast<std::size_t>(n - 1)];
    BigRational p2 = (c0 * p1 + cm * p0) / cp, q2 = (c0 * q1 + cm * q0) / cp;
    p2.canonicalize();
    q2.canonicalize();
    v.emplace_back(p2, q2);
  }
  v.resize(static_cast<std::size_t>(n_max + 1));
  return v;
}

std::vector<std::pair<BigRational, BigRational>> I3_coords(long n_max) {
  if (n_max < 0) throw DomainError("I3_coords needs n >= 0");
  // (2n+1)^3 y(n+1) = 4n(68n^2+3) y(n) - (2n-1)^3 y(n-1)
  std::vector<std::pair<BigRational, BigRational>> v = {{8, 0}, {-56, BigRational(-3, 2)}};
  for (long n = 1; static_cast<long>(v.size()) <= n_max; ++n) {
    const BigRational c0(4 * n * (68 * n * n + 3)), cm(-(2 * n - 1) * (2 * n - 1) * (2 * n - 1)),
        cp((2 * n + 1) * (2 * n + 1) * (2 * n + 1));
    const auto& [p1, q1] = v[static_cast<std::size_t>(n)];
    const auto& [p0, q0] = v[static_cast<std::size_t>(n - 1)];
    BigRational p2 = (c0 * p1 + cm * p0) / cp, q2 = (c0 * q1 + cm * q0) / cp;
    p2.canonicalize();
    q2.canonicalize();
    v.emplace_back(p2, q2);
  }
  v.resize(static_cast<std::size_t>(n_max + 1));
  return v;
}

Real i2_basis_A(Precision p) {
  return numkit::constant_value(numkit::ConstId::pi, p) / numkit::constant_value(numkit::ConstId::gamma_q4, p);
}

Real i2_basis_B(Precision p) {
  return numkit::constant_value(numkit::ConstId::pi, p) * numkit::constant_value(numkit::ConstId::gamma_q4, p);
}

Real I2_from_coords(long n, Precision p) {
  const auto [pt, qt] = I2_coords(n).back();
  return i2_basis_A(p) * pt - i2_basis_B(p) * qt;
}

Real I3_from_coords(long n, Precision p) {
  const auto [al, be] = I3_coords(n).back();
  return numkit::constant_value(numkit::ConstId::omega_plus, p) * al +
         numkit::constant_value(numkit::ConstId::eta_plus, p) * be;
}

HypergIdentityReport hyperg_identity_check(Precision p) {
  const Precision w = p.with_guard();
  const BigRational q34(3, 4), q94(9, 4), q14(1, 4), q74(7, 4);
  // sum (n+1) (3/4)_n^4/(9/4)_n^4 = 5F4(2, 3/4 x4; 9/4 x4; 1)
  const std::array<BigRational, 5> up1 = {2, q34, q34, q34, q34};
  const std::array<BigRational, 4> lo1 = {q94, q94, q94, q94};
  // sum (2n+1) (1/4)_n^4/(7/4)_n^4 = 6F5(1, 3/2, 1/4 x4; 1/2, 7/4 x4; 1)
  const std::array<BigRational, 6> up2 = {1, BigRational(3, 2), q14, q14, q14, q14};
  const std::array<BigRational, 5> lo2 = {BigRational(1, 2), q74, q74, q74, q74};
  const Real one(1L, w);
  const Real s1 = numkit::hypergeometric_pFq(up1, lo1, one, p);
  const Real s2 = numkit::hypergeometric_pFq(up2, lo2, one, p);
  const Real g = numkit::constant_value(numkit::ConstId::gamma_q4, w);
  const Real g2 = g * g;
  HypergIdentityReport r;
  r.residual1 = abs(Real(80L, w) - s1 * BigRational(2048, 625) - g2).rounded(p);
  r.residual2 = abs(Real(BigRational(1, 16), w) - s2 * BigRational(4, 81) - 1 / g2).rounded(p);

  auto partial = [&](long terms) {
    Real s(0L, w), t(1L, w);
    for (long n = 0; n < terms; ++n) {
      s += t * (n + 1);
      const Real ratio = Real(BigRational(4 * n + 3, 4 * n + 9), w);
      t *= pow(ratio, 4L);
    }
    return abs(Real(80L, w) - s * BigRational(2048, 625) - g2).rounded(p);
  };
  r.terms = 50;
  r.truncated1_n = partial(r.terms);
  r.truncated1_2n = partial(2 * r.terms);
  const Real bound = epsilon10(10, p);
  r.pass = r.residual1 < bound && r.residual2 < bound && r.truncated1_2n < r.truncated1_n;
  return r;
}

}  // namespace cfvar::integrals

#include "cfvar/numkit/special.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "cfvar/errors.hpp"

namespace cfvar::numkit {
namespace {

// Euler-Maclaurin and Stirling tails are summed at shift points of this size,
// which keeps the Bernoulli index needed below ~0.75 * digits.
long em_shift(Precision w) { return 2L * w.digits() + 10; }

Real eps_for(Precision w) { return epsilon10(w.digits(), w); }

bool negligible(const Real& term, const Real& sum, const Real& eps) {
  if (sum.is_zero()) return term.is_zero();
  return abs(term) <= eps * abs(sum);
}

// Brent-Harvey tangent numbers; B_{2k} = (-1)^(k-1) 2k T_k / (4^k (4^k - 1)).
std::vector<BigRational> compute_bernoulli_even(std::size_t n) {
  std::vector<BigInt> t(n + 1);
  if (n == 0) return {};
  t[1] = 1;
  for (std::size_t k = 2; k <= n; ++k) t[k] = BigInt(static_cast<unsigned long>(k - 1)) * t[k - 1];
  for (std::size_t k = 2; k <= n; ++k)
    for (std::size_t j = k; j <= n; ++j)
      t[j] = BigInt(static_cast<unsigned long>(j - k)) * t[j - 1] +
             BigInt(static_cast<unsigned long>(j - k + 2)) * t[j];
  std::vector<BigRational> out;
  out.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    BigInt four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, k);
    BigRational b(BigInt(2 * static_cast<unsigned long>(k)) * t[k], four_k * (four_k - 1));
    b.canonicalize();
    if (k % 2 == 0) b = -b;
    out.push_back(b);
  }
  return out;
}

}  // namespace

std::shared_ptr<const std::vector<BigRational>> bernoulli_even(std::size_t count) {
  static std::mutex mu;
  static std::shared_ptr<const std::vector<BigRational>> cache;
  std::lock_guard lock(mu);
  if (!cache || cache->size() < count) {
    const std::size_t n = std::max<std::size_t>(count, cache ? 2 * cache->size() : 64);
    cache = std::make_shared<const std::vector<BigRational>>(compute_bernoulli_even(n));
  }
  return cache;
}

Real agm(const Real& a, const Real& b, Precision p) {
  if (a.sign() <= 0 || b.sign() <= 0) throw DomainError("agm requires positive arguments");
  const Precision w = p.with_guard();
  Real x = a.rounded(w), y = b.rounded(w);
  const Real eps = eps_for(w);
  for (int it = 0; it < 10000; ++it) {
    if (abs(x - y) <= eps * x) return ((x + y) / 2).rounded(p);
    Real nx = (x + y) / 2;
    y = sqrt(x * y);
    x = std::move(nx);
  }
  throw NoConvergence("agm iteration did not converge");
}

Real pi(Precision p) {
  const Precision w = p.with_guard();
  Real a(1L, w);
  Real b = sqrt(Real(BigRational(1, 2), w));
  Real t(BigRational(1, 4), w);
  long pw = 1;
  const Real eps = eps_for(w);
  for (int it = 0; it < 200; ++it) {
    if (abs(a - b) <= eps) break;
    Real an = (a + b) / 2;
    b = sqrt(a * b);
    Real d = a - an;
    t -= d * d * pw;
    a = std::move(an);
    pw *= 2;
  }
  Real s = a + b;
  return (s * s / (t * 4)).rounded(p);
}

Real euler_gamma(Precision p) {
  const Precision w = p.with_guard();
  const long n = em_shift(w);
  const Real eps = eps_for(w);
  Real h(0L, w);
  for (long k = 1; k <= n; ++k) h += Real(1L, w) / k;
  const Real nr(n, w);
  Real g = h - log(nr) - Real(1L, w) / (2 * n);
  const Real inv_n2 = Real(1L, w) / (nr * nr);
  Real npow = inv_n2;
  for (std::size_t j = 1;; ++j) {
    auto bern = bernoulli_even(j);
    const Real term = npow * ((*bern)[j - 1] / BigRational(static_cast<long>(2 * j)));
    g += term;
    if (negligible(term, g, eps)) break;
    if (j > 4 * static_cast<std::size_t>(n)) throw NoConvergence("euler_gamma tail");
    npow *= inv_n2;
  }
  return g.rounded(p);
}

Real zeta_int(int s, Precision p) {
  if (s < 2) throw DomainError("zeta_int requires s >= 2");
  const Precision w = p.with_guard();
  const long n = em_shift(w);
  const Real eps = eps_for(w);
  Real sum(0L, w);
  for (long k = 1; k < n; ++k) sum += pow(Real(k, w), -static_cast<long>(s));
  const Real nr(n, w);
  sum += pow(nr, 1L - s) / static_cast<long>(s - 1);
  sum += pow(nr, -static_cast<long>(s)) / 2;
  // B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^(1-s-2j)
  BigRational coef(s, 2);
  Real npow = pow(nr, -static_cast<long>(s) - 1);
  const Real inv_n2 = Real(1L, w) / (nr * nr);
  for (std::size_t j = 1;; ++j) {
    auto bern = bernoulli_even(j);
    const Real term = npow * ((*bern)[j - 1] * coef);
    sum += term;
    if (negligible(term, sum, eps)) break;
    if (j > 4 * static_cast<std::size_t>(n)) throw NoConvergence("zeta tail");
    const long jj = static_cast<long>(j);
    coef *= BigRational((s + 2 * jj - 1) * (s + 2 * jj), (2 * jj + 1) * (2 * jj + 2));
    npow *= inv_n2;
  }
  return sum.rounded(p);
}

Real elliptic_K(const Real& z, Precision p) {
  if (z >= 1) throw DomainError("elliptic_K requires z < 1");
  const Precision w = p.with_guard();
  const Real m = agm(Real(1L, w), sqrt(1 - z.rounded(w)), w);
  return (pi(w) / (m * 2)).rounded(p);
}

Real elliptic_E(const Real& z, Precision p) {
  if (z >= 1) throw DomainError("elliptic_E requires z < 1");
  const Precision w = p.with_guard();
  const Real zz = z.rounded(w);
  Real a(1L, w);
  Real b = sqrt(1 - zz);
  // sum_{n>=0} 2^(n-1) c_n^2 with c_0^2 = z
  Real sum = zz / 2;
  const Real eps = eps_for(w);
  long pw = 1;
  for (int it = 0; it < 10000; ++it) {
    const Real c = (a - b) / 2;
    const Real term = c * c * pw;
    sum += term;
    Real an = (a + b) / 2;
    b = sqrt(a * b);
    a = std::move(an);
    if (abs(a - b) <= eps * a && abs(term) <= eps) break;
    pw *= 2;
  }
  const Real k = pi(w) / ((a + b) / 2 * 2);
  return (k * (1 - sum)).rounded(p);
}

Real ln_gamma(const Real& x, Precision p) {
  if (x.sign() <= 0) throw DomainError("ln_gamma requires x > 0");
  const Precision w = p.with_guard(p.kGuardDigits + 5);
  const Real eps = eps_for(w);
  const Real xx = x.rounded(w);
  const double target = static_cast<double>(em_shift(w));
  const long shift = std::max(0L, static_cast<long>(std::ceil(target - xx.to_double())));
  Real prod(1L, w);
  for (long k = 0; k < shift; ++k) prod *= xx + k;
  const Real y = xx + shift;
  const Real two_pi = pi(w) * 2;
  Real r = (y - BigRational(1, 2)) * log(y) - y + log(two_pi) / 2;
  const Real inv_y2 = Real(1L, w) / (y * y);
  Real ypow = Real(1L, w) / y;
  for (std::size_t j = 1;; ++j) {
    auto bern = bernoulli_even(j);
    const long jj = static_cast<long>(j);
    const Real term = ypow * ((*bern)[j - 1] / BigRational(2 * jj * (2 * jj - 1)));
    r += term;
    if (abs(term) <= eps * max(abs(r), Real(1L, w))) break;
    if (j > 10000) throw NoConvergence("Stirling series");
    ypow *= inv_y2;
  }
  if (shift > 0) r -= log(prod);
  return r.rounded(p);
}

Real gamma(const Real& x, Precision p) {
  const Precision w = p.with_guard();
  return exp(ln_gamma(x, w)).rounded(p);
}

Real trigamma(const Real& x, Precision p) {
  if (x.sign() <= 0) throw DomainError("trigamma requires x > 0");
  const Precision w = p.with_guard();
  const Real eps = eps_for(w);
  const Real xx = x.rounded(w);
  const double target = static_cast<double>(em_shift(w));
  const long shift = std::max(0L, static_cast<long>(std::ceil(target - xx.to_double())));
  Real r(0L, w);
  for (long k = 0; k < shift; ++k) {
    const Real t = xx + k;
    r += Real(1L, w) / (t * t);
  }
  const Real y = xx + shift;
  const Real inv_y = Real(1L, w) / y;
  const Real inv_y2 = inv_y * inv_y;
  Real tail = inv_y + inv_y2 / 2;
  Real ypow = inv_y2 * inv_y;
  for (std::size_t j = 1;; ++j) {
    auto bern = bernoulli_even(j);
    const Real term = ypow * (*bern)[j - 1];
    tail += term;
    if (negligible(term, tail, eps)) break;
    if (j > 10000) throw NoConvergence("trigamma series");
    ypow *= inv_y2;
  }
  return (r + tail).rounded(p);
}

Real hypergeometric_pFq(std::span<const BigRational> upper, std::span<const BigRational> lower,
                        const Real& x, Precision p) {
  for (const auto& b : lower)
    if (is_integer(b) && b <= 0)
      throw DomainError("pFq: lower parameter is a non-positive integer");
  bool terminating = false;
  for (const auto& a : upper)
    if (is_integer(a) && a <= 0) terminating = true;

  const Precision w = p.with_guard();
  const Real xx = x.rounded(w);
  const Real ax = abs(xx);
  const std::size_t pu = upper.size(), ql = lower.size();
  bool unit = false;
  BigRational excess(0);  // sum(lower) - sum(upper)
  for (const auto& b : lower) excess += b;
  for (const auto& a : upper) excess -= a;
  if (!terminating && !xx.is_zero()) {
    if (pu > ql + 1) throw DomainError("pFq: divergent series (p > q + 1)");
    if (pu == ql + 1) {
      if (ax > 1) throw DomainError("pFq: |x| > 1 outside the disc of convergence");
      if (ax == 1) {
        // terms behave like n^-(excess+1)
        if (excess < 1)
          throw DomainError("pFq: unit-argument series decays slower than n^-2");
        unit = true;
      }
    }
  }

  // stopping is judged against the caller's precision; w only protects the arithmetic
  const Real eps = epsilon10(p.digits() + 3, w);
  // ratios become monotone once n exceeds every parameter magnitude
  BigRational pmax(1);
  for (const auto& a : upper) pmax = std::max(pmax, BigRational(abs(a)));
  for (const auto& b : lower) pmax = std::max(pmax, BigRational(abs(b)));
  const long n_mono = static_cast<long>(std::ceil(pmax.get_d())) + 2;

  auto ratio = [&](long n) {
    BigRational r(1);
    for (const auto& a : upper) r *= a + n;
    for (const auto& b : lower) r /= b + n;
    r /= n + 1;
    return r;
  };

  Real term(1L, w), sum(1L, w);
  constexpr long kMaxTerms = 4'000'000;
  for (long n = 0; n < kMaxTerms; ++n) {
    const BigRational r = ratio(n);
    if (r == 0) return sum.rounded(p);
    term *= xx * r;
    sum += term;
    if (xx.is_zero()) return sum.rounded(p);
    if (n + 1 < n_mono) continue;
    Real bound(w);
    if (unit) {
      bound = abs(term) * Real(2 * (n + 2), w) / excess;
    } else {
      Real rmax = abs(xx * ratio(n + 1));
      if (pu == ql + 1) rmax = max(rmax, ax);
      if (rmax >= 1) continue;
      bound = abs(term) * rmax / (1 - rmax);
    }
    if (bound <= eps * abs(sum)) return sum.rounded(p);
  }
  throw NoConvergence("pFq: term budget exhausted");
}

Real bessel_K0(const Real& t, Precision p) {
  if (t.sign() <= 0) throw DomainError("bessel_K0 requires t > 0");
  const double td = t.to_double();
  const double need = (p.digits() + Precision::kGuardDigits) * std::log(10.0);
  if (2.0 * td > need + 5.0) {
    // asymptotic series; for real t the remainder is bounded by the first omitted term
    const Precision w = p.with_guard();
    const Real eps = eps_for(w);
    const Real tt = t.rounded(w);
    Real sum(1L, w), term(1L, w);
    for (long k = 1;; ++k) {
      const long odd = 2 * k - 1;
      Real next = term * (-(odd * odd)) / (tt * (8 * k));
      if (abs(next) >= abs(term)) throw NoConvergence("bessel_K0 asymptotic series");
      term = std::move(next);
      sum += term;
      if (abs(term) <= eps) break;
    }
    return (sqrt(pi(w) / (tt * 2)) * exp(-tt) * sum).rounded(p);
  }
  // log series; the result is ~e^-t while its terms reach ~e^t
  const int extra = static_cast<int>(std::ceil(2.0 * td / std::log(10.0))) + 5;
  const Precision w = p.with_guard(Precision::kGuardDigits + extra);
  const Real eps = eps_for(w);
  const Real tt = t.rounded(w);
  const Real q = tt * tt / 4;
  Real i0(1L, w), s(0L, w), term(1L, w), harmonic(0L, w);
  for (long k = 1;; ++k) {
    term *= q / (k * k);
    harmonic += Real(1L, w) / k;
    i0 += term;
    const Real ht = term * harmonic;
    s += ht;
    if (k > 2 && abs(ht) <= eps * abs(s) && abs(term) <= eps * i0) break;
    if (k > 1'000'000) throw NoConvergence("bessel_K0 series");
  }
  const Real k0 = s - (log(tt / 2) + euler_gamma(w)) * i0;
  return k0.rounded(p);
}

Real incomplete_gamma_upper(const Real& s, const Real& x, Precision p) {
  if (x.sign() < 0) throw DomainError("incomplete_gamma_upper requires x >= 0");
  if (x.is_zero()) {
    if (s.sign() <= 0) throw DomainError("Gamma(s, 0) diverges for s <= 0");
    return gamma(s, p);
  }
  const double xd = x.to_double(), sd = s.to_double();
  if (xd >= sd + 1 || s.sign() <= 0) {
    // modified Lentz on the Legendre continued fraction
    const Precision w = p.with_guard();
    const Real eps = eps_for(w);
    const Real ss = s.rounded(w), xx = x.rounded(w);
    const Real tiny = ldexp(Real(1L, w), -static_cast<long>(w.bits()) - 200);
    Real b = xx + 1 - ss;
    Real c = Real(1L, w) / tiny;
    Real d = Real(1L, w) / b;
    Real h = d;
    for (long i = 1;; ++i) {
      const Real an = -(Real(i, w) * (Real(i, w) - ss));
      b += 2;
      d = an * d + b;
      if (abs(d) < tiny) d = tiny;
      c = b + an / c;
      if (abs(c) < tiny) c = tiny;
      d = Real(1L, w) / d;
      const Real del = d * c;
      h *= del;
      if (abs(del - 1) <= eps) break;
      if (i > 1'000'000) throw NoConvergence("incomplete gamma continued fraction");
    }
    return (exp(-xx + ss * log(xx)) * h).rounded(p);
  }
  // Gamma(s) - gamma(s, x); the difference keeps at least ~1/e of Gamma(s) here,
  // extra guard covers the rest
  const Precision w = p.with_guard(Precision::kGuardDigits + 5);
  const Real eps = eps_for(w);
  const Real ss = s.rounded(w), xx = x.rounded(w);
  Real term = Real(1L, w) / ss, sum = term;
  for (long k = 1;; ++k) {
    term *= xx / (ss + k);
    sum += term;
    if (abs(term) <= eps * abs(sum)) break;
    if (k > 1'000'000) throw NoConvergence("incomplete gamma series");
  }
  const Real lower = exp(-xx + ss * log(xx)) * sum;
  return (gamma(ss, w) - lower).rounded(p);
}

}  // namespace cfvar::numkit

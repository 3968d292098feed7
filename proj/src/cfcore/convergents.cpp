#include "cfvar/cfcore/convergents.hpp"

#include <cmath>

#include "cfvar/errors.hpp"

namespace cfvar {

std::vector<ConvergentPair> convergents(const CFSpec& cf, long N, const std::optional<ZValue>& z) {
  if (N < 0) throw DomainError("convergent depth must be >= 0");
  std::vector<ConvergentPair> out;
  out.reserve(static_cast<std::size_t>(N) + 1);
  BigRational p_prev = 1, q_prev = 0;
  BigRational p = cf.b(0, z), q = 1;
  out.push_back({0, p, q});
  for (long n = 1; n <= N; ++n) {
    const BigRational an = cf.a(n, z);
    if (an == 0) throw DomainError("zero partial numerator a_" + std::to_string(n));
    const BigRational bn = cf.b(n, z);
    BigRational p_next = bn * p + an * p_prev;
    BigRational q_next = bn * q + an * q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
    out.push_back({n, p, q});
  }
  return out;
}

namespace {

// Wallis recursion on the equivalent fraction with integer coefficients:
// c_n clears the denominators of a_n and b_n, then a_n -> c_n c_{n-1} a_n, b_n -> c_n b_n.
class IntegerWallis {
 public:
  IntegerWallis(const CFSpec& cf, const std::optional<ZValue>& z) : cf_(cf), z_(z) {
    const BigRational b0 = cf_.b(0, z_);
    c_prev_ = b0.get_den();
    p_ = b0.get_num();
    q_ = c_prev_;
  }

  // False once a zero partial numerator has terminated the fraction.
  bool step() {
    if (done_) return false;
    ++n_;
    const BigRational an = cf_.a(n_, z_);
    if (an == 0) {
      done_ = true;
      return false;
    }
    const BigRational bn = cf_.b(n_, z_);
    const BigInt c = lcm(an.get_den(), bn.get_den());
    const BigInt a_int = BigInt(an.get_num() * (c / an.get_den())) * c_prev_;
    const BigInt b_int = bn.get_num() * (c / bn.get_den());
    BigInt p_next = b_int * p_ + a_int * p_prev_;
    BigInt q_next = b_int * q_ + a_int * q_prev_;
    p_prev_ = std::move(p_);
    q_prev_ = std::move(q_);
    p_ = std::move(p_next);
    q_ = std::move(q_next);
    c_prev_ = c;
    return true;
  }

  Real value(Precision p) const {
    if (q_ == 0) {
      Real nan(p);
      mpfr_set_nan(nan.get());
      return nan;
    }
    return Real(p_, p) / Real(q_, p);
  }

  long n() const { return n_; }
  bool done() const { return done_; }

 private:
  const CFSpec& cf_;
  std::optional<ZValue> z_;
  long n_ = 0;
  bool done_ = false;
  BigInt c_prev_;
  BigInt p_prev_ = 1, q_prev_ = 0, p_, q_;
};

}  // namespace

std::vector<Real> convergent_values(const CFSpec& cf, long N, Precision p,
                                    const std::optional<ZValue>& z) {
  if (N < 0) throw DomainError("convergent depth must be >= 0");
  IntegerWallis w(cf, z);
  std::vector<Real> out;
  out.reserve(static_cast<std::size_t>(N) + 1);
  out.push_back(w.value(p));
  for (long n = 1; n <= N; ++n) {
    if (w.step())
      out.push_back(w.value(p));
    else
      out.push_back(out.back());
  }
  return out;
}

LimitResult limit(const CFSpec& cf, Precision p, const std::optional<ZValue>& z, long max_terms) {
  const Precision w = p.with_guard();
  const Real tol = epsilon10(p.digits() + 1, w);
  IntegerWallis wallis(cf, z);
  std::vector<Real> c{wallis.value(w)};
  constexpr long kMinDepth = 4;
  for (long n = 1; n <= max_terms; ++n) {
    if (!wallis.step()) {
      LimitResult r{c.back().rounded(p), Real(0L, w), n - 1, false, true};
      if (!r.value.is_finite()) throw DomainError("terminating fraction has q_n = 0");
      return r;
    }
    c.push_back(wallis.value(w));
    if (n < kMinDepth) continue;
    const Real& c0 = c[static_cast<std::size_t>(n)];
    const Real& c1 = c[static_cast<std::size_t>(n - 1)];
    const Real& c2 = c[static_cast<std::size_t>(n - 2)];
    if (!c0.is_finite() || !c1.is_finite() || !c2.is_finite()) continue;
    const Real d1 = c0 - c1, d2 = c1 - c2;
    const bool alternating = d1.sign() * d2.sign() < 0;
    const Real err = alternating ? abs(d1) : abs(c0 - c2) * 10;
    if (err <= tol) return {c0.rounded(p), err, n, alternating, false};
  }
  throw NoConvergence("continued fraction did not settle to " + std::to_string(p.digits()) +
                      " digits within " + std::to_string(max_terms) + " terms");
}

}  // namespace cfvar

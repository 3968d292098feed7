#include "cfvar/numkit/real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "cfvar/errors.hpp"

namespace cfvar {
namespace {

constexpr double kLog2Of10 = 3.32192809488736234787;

mpfr_prec_t max_bits(const Real& a, const Real& b) { return std::max(a.bits(), b.bits()); }

}  // namespace

Precision::Precision(int digits) : digits_(digits) {
  if (digits < kMinDigits)
    throw DomainError("precision must be at least " + std::to_string(kMinDigits) + " digits");
}

mpfr_prec_t Precision::bits() const {
  return static_cast<mpfr_prec_t>(std::ceil(digits_ * kLog2Of10)) + 2;
}

Real::Real() : Real(static_cast<mpfr_prec_t>(64), 0) {}

Real::Real(mpfr_prec_t bits, int) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(Precision p) : Real(p.bits(), 0) {}

Real::Real(long v, Precision p) : Real(p) { mpfr_set_si(v_, v, MPFR_RNDN); }

Real::Real(double v, Precision p) : Real(p) { mpfr_set_d(v_, v, MPFR_RNDN); }

Real::Real(const BigInt& v, Precision p) : Real(p) { mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN); }

Real::Real(const BigRational& v, Precision p) : Real(p) {
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

Real::Real(std::string_view decimal, Precision p) : Real(p) {
  const std::string s(decimal);
  char* end = nullptr;
  mpfr_strtofr(v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end == s.c_str() || *end != '\0')
    throw ParseError("malformed decimal literal: '" + s + "'");
}

Real::Real(const Real& other) : Real(other.bits(), 0) { mpfr_set(v_, other.v_, MPFR_RNDN); }

Real::Real(Real&& other) noexcept : Real(other.bits(), 0) { mpfr_swap(v_, other.v_); }

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.bits());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::with_bits(mpfr_prec_t bits) { return Real(bits, 0); }

int Real::digits() const { return static_cast<int>(std::floor(static_cast<double>(bits()) / kLog2Of10)); }

Real Real::rounded(Precision p) const {
  Real r(p);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string Real::to_string(int significant) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return sign() > 0 ? "inf" : "-inf";
  if (is_zero()) return "0";
  significant = std::max(significant, 1);
  const double mag = log10_abs();
  char* buf = nullptr;
  if (mag > -6 && mag < 21) {
    const int int_digits = static_cast<int>(std::floor(mag)) + 1;
    const int decimals = std::max(significant - int_digits, 0);
    mpfr_asprintf(&buf, "%.*Rf", decimals, v_);
  } else {
    mpfr_asprintf(&buf, "%.*Re", significant - 1, v_);
  }
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

long Real::exponent2() const {
  if (is_zero() || !is_finite()) return std::numeric_limits<long>::min() / 2;
  return mpfr_get_exp(v_);
}

double Real::log10_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  long e = 0;
  const double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
  return std::log10(std::fabs(m)) + static_cast<double>(e) * 0.30102999566398119521;
}

Real Real::operator-() const {
  Real r(bits(), 0);
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

Real& Real::operator+=(const Real& o) { return *this = *this + o; }
Real& Real::operator-=(const Real& o) { return *this = *this - o; }
Real& Real::operator*=(const Real& o) { return *this = *this * o; }
Real& Real::operator/=(const Real& o) { return *this = *this / o; }

Real operator+(const Real& a, const Real& b) {
  Real r(max_bits(a, b), 0);
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r(max_bits(a, b), 0);
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r(max_bits(a, b), 0);
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  Real r(max_bits(a, b), 0);
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator+(const Real& a, long b) {
  Real r(a.bits(), 0);
  mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, long b) {
  Real r(a.bits(), 0);
  mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, long b) {
  Real r(a.bits(), 0);
  mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, long b) {
  if (b == 0) throw DomainError("division by zero");
  Real r(a.bits(), 0);
  mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
Real operator-(long a, const Real& b) {
  Real r(b.bits(), 0);
  mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}
Real operator/(long a, const Real& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  Real r(b.bits(), 0);
  mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}
Real operator+(const Real& a, const BigRational& b) {
  Real r(a.bits(), 0);
  mpfr_add_q(r.v_, a.v_, b.get_mpq_t(), MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const BigRational& b) {
  Real r(a.bits(), 0);
  mpfr_sub_q(r.v_, a.v_, b.get_mpq_t(), MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const BigRational& b) {
  Real r(a.bits(), 0);
  mpfr_mul_q(r.v_, a.v_, b.get_mpq_t(), MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const BigRational& b) {
  if (b == 0) throw DomainError("division by zero");
  Real r(a.bits(), 0);
  mpfr_div_q(r.v_, a.v_, b.get_mpq_t(), MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, long b) {
  if (mpfr_nan_p(a.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.v_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

Real abs(const Real& x) {
  Real r = Real::with_bits(x.bits());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  if (x.sign() < 0) throw DomainError("square root of a negative number");
  Real r = Real::with_bits(x.bits());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real exp(const Real& x) {
  Real r = Real::with_bits(x.bits());
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real log(const Real& x) {
  if (x.sign() <= 0) throw DomainError("logarithm of a non-positive number");
  Real r = Real::with_bits(x.bits());
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real log1p(const Real& x) {
  if (x <= -1) throw DomainError("log1p argument <= -1");
  Real r = Real::with_bits(x.bits());
  mpfr_log1p(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real sinh(const Real& x) {
  Real r = Real::with_bits(x.bits());
  mpfr_sinh(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real cosh(const Real& x) {
  Real r = Real::with_bits(x.bits());
  mpfr_cosh(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r = Real::with_bits(std::max(x.bits(), y.bits()));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  if (!r.is_finite()) throw DomainError("pow: result is not a finite real");
  return r;
}

Real pow(const Real& x, long n) {
  if (n < 0 && x.is_zero()) throw DomainError("negative power of zero");
  Real r = Real::with_bits(x.bits());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

Real ldexp(const Real& x, long k) {
  Real r = Real::with_bits(x.bits());
  mpfr_mul_2si(r.get(), x.get(), k, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real relative_error(const Real& a, const Real& b) {
  Real d = abs(a - b);
  if (b.is_zero()) return d;
  return d / abs(b);
}

Real epsilon10(int digits, Precision p) {
  Real ten(10L, p);
  return pow(ten, -static_cast<long>(digits));
}

}  // namespace cfvar

#ifndef CFVAR_NUMKIT_REAL_HPP
#define CFVAR_NUMKIT_REAL_HPP

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

#include "cfvar/numkit/rational.hpp"

namespace cfvar {

/// Decimal working precision. Every public numerical routine takes one and
/// returns values whose relative error is at most 10^-digits.
class Precision {
 public:
  static constexpr int kMinDigits = 10;
  static constexpr int kGuardDigits = 10;

  explicit Precision(int digits);

  int digits() const { return digits_; }
  mpfr_prec_t bits() const;
  Precision with_guard(int extra = kGuardDigits) const { return Precision(digits_ + extra); }

  friend bool operator==(Precision a, Precision b) { return a.digits_ == b.digits_; }

 private:
  int digits_;
};

/// Binary floating point value with its own precision; thin RAII layer over mpfr_t.
/// Binary operations produce a result at the larger of the operand precisions.
class Real {
 public:
  Real();
  explicit Real(Precision p);
  Real(long v, Precision p);
  Real(int v, Precision p) : Real(static_cast<long>(v), p) {}
  Real(double v, Precision p);
  Real(const BigInt& v, Precision p);
  Real(const BigRational& v, Precision p);
  /// Decimal literal such as "-261.37391590940420314859".
  Real(std::string_view decimal, Precision p);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real with_bits(mpfr_prec_t bits);

  mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
  /// Decimal digits carried by the mantissa.
  int digits() const;
  /// Copy rounded to the given precision tag.
  Real rounded(Precision p) const;

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// `significant` significant decimal digits, fixed notation for moderate
  /// magnitudes and scientific otherwise.
  std::string to_string(int significant) const;

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1; very negative for zero.
  long exponent2() const;
  /// log10 |x| to double accuracy; -inf for zero.
  double log10_abs() const;

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  Real operator-() const;
  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator+=(long o) { return *this = *this + o; }
  Real& operator-=(long o) { return *this = *this - o; }
  Real& operator*=(long o) { return *this = *this * o; }
  Real& operator/=(long o) { return *this = *this / o; }

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator+(const Real& a, long b);
  friend Real operator-(const Real& a, long b);
  friend Real operator*(const Real& a, long b);
  friend Real operator/(const Real& a, long b);
  friend Real operator+(long a, const Real& b) { return b + a; }
  friend Real operator-(long a, const Real& b);
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator/(long a, const Real& b);
  friend Real operator+(const Real& a, const BigRational& b);
  friend Real operator-(const Real& a, const BigRational& b);
  friend Real operator*(const Real& a, const BigRational& b);
  friend Real operator/(const Real& a, const BigRational& b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend std::partial_ordering operator<=>(const Real& a, long b);
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, int b) { return a <=> static_cast<long>(b); }
  friend bool operator==(const Real& a, int b) { return a == static_cast<long>(b); }
  // a double would silently narrow to long
  friend std::partial_ordering operator<=>(const Real&, double) = delete;
  friend bool operator==(const Real&, double) = delete;

 private:
  explicit Real(mpfr_prec_t bits, int /*tag*/);
  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
/// x * 2^k.
Real ldexp(const Real& x, long k);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

/// |a - b| / max(|b|, tiny); absolute difference when b is zero.
Real relative_error(const Real& a, const Real& b);

/// 10^-digits at the given precision.
Real epsilon10(int digits, Precision p);

}  // namespace cfvar

#endif  // CFVAR_NUMKIT_REAL_HPP

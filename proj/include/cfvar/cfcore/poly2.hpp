#ifndef CFVAR_CFCORE_POLY2_HPP
#define CFVAR_CFCORE_POLY2_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cfvar/numkit/rational.hpp"

namespace cfvar {

/// Exact binding of the polynomial parameter. `square` binds z^2 instead of z,
/// which is enough for polynomials even in z and lets imaginary z enter exactly.
struct ZValue {
  BigRational value;
  bool square = false;

  static ZValue of(const BigRational& z) { return {z, false}; }
  static ZValue squared(const BigRational& z2) { return {z2, true}; }
  std::string to_string(char param = 'z') const;
};

/// Polynomial in n with coefficients polynomial in one parameter (z or s).
/// grid()[i][j] is the coefficient of n^i z^j; rows and the row list are trimmed.
class Poly2 {
 public:
  Poly2() = default;
  Poly2(const BigRational& c);  // NOLINT: constants convert implicitly
  Poly2(long c) : Poly2(BigRational(c)) {}
  static Poly2 n();
  static Poly2 z();
  static Poly2 from_grid(std::vector<std::vector<BigRational>> grid);

  const std::vector<std::vector<BigRational>>& grid() const { return c_; }
  BigRational coeff(std::size_t i, std::size_t j) const;
  /// -1 for the zero polynomial.
  int degree_n() const { return static_cast<int>(c_.size()) - 1; }
  int degree_z() const;
  bool is_zero() const { return c_.empty(); }
  bool depends_on_z() const { return degree_z() > 0; }
  bool free_of_n() const { return c_.size() <= 1; }
  bool even_in_z() const;

  Poly2 operator-() const;
  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  Poly2& operator*=(const Poly2& o);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(Poly2 a, const Poly2& b) { return a *= b; }
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.c_ == b.c_; }
  Poly2 pow(unsigned k) const;

  /// n -> scale*n + shift.
  Poly2 substitute_n(const BigRational& scale, const BigRational& shift) const;
  Poly2 shift_n(const BigRational& h) const { return substitute_n(1, h); }
  /// Value at a fixed n as a polynomial in the parameter alone.
  Poly2 at_n(const BigRational& n) const;
  /// Exact value; throws DomainError when the parameter is needed but unbound,
  /// or when an odd power meets a squared binding.
  BigRational eval(const BigRational& n, const std::optional<ZValue>& z = std::nullopt) const;

  /// Positive g with this/g an integer polynomial of content 1; 0 for the zero polynomial.
  BigRational content() const;

  /// Expanded form, e.g. "44n^2+1+36z^2"; non-integer coefficients in parentheses.
  std::string to_string(char param = 'z') const;

 private:
  void trim();
  std::vector<std::vector<BigRational>> c_;
};

struct ParsedPoly {
  Poly2 poly;
  /// Parameter letter met while parsing ('z' or 's'), if any.
  std::optional<char> param;
};

/// Accepts conventional input: "3(2n-1)", "(2n+1)^4", "-n^2z^2", "44n²+1+36z²", "12/7".
ParsedPoly parse_poly2(std::string_view text);

}  // namespace cfvar

#endif  // CFVAR_CFCORE_POLY2_HPP

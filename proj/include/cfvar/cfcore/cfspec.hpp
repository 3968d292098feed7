#ifndef CFVAR_CFCORE_CFSPEC_HPP
#define CFVAR_CFCORE_CFSPEC_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cfvar/cfcore/poly2.hpp"

namespace cfvar {

enum class Part { a, b };

/// Continued fraction b0 + a1/(b1 + a2/(b2 + ...)) in the `[[heads..,poly],[heads..,poly]]`
/// notation. With kb = |b_heads|, b_n = b_heads[n] for n < kb and b_poly(n) after;
/// with ka = |a_heads|, a_n = a_heads[n-1] for 1 <= n <= ka and a_poly(n-1) after.
struct CFSpec {
  std::vector<Poly2> b_heads;
  Poly2 b_poly;
  std::vector<Poly2> a_heads;
  Poly2 a_poly;
  /// Parameter letter when any coefficient depends on it.
  std::optional<char> param;

  /// Coefficient as a polynomial in the parameter only.
  Poly2 coefficient(Part part, long n) const;
  BigRational b(long n, const std::optional<ZValue>& z = std::nullopt) const;
  BigRational a(long n, const std::optional<ZValue>& z = std::nullopt) const;

  bool depends_on_param() const;
  /// Bracket notation with expanded polynomials, e.g. "[[0,6n-3],[2,-n^2]]".
  std::string to_string() const;

  friend bool operator==(const CFSpec& x, const CFSpec& y) {
    return x.b_heads == y.b_heads && x.b_poly == y.b_poly && x.a_heads == y.a_heads &&
           x.a_poly == y.a_poly;
  }
};

/// b_n or a_n per the CFSpec convention; n >= 0 for b, n >= 1 for a.
BigRational materialize(const CFSpec& cf, long n, Part part,
                        const std::optional<ZValue>& z = std::nullopt);

/// Parses the bracket notation. Every list entry but the last is a head and must be
/// free of n; the last is the polynomial.
CFSpec parse_cfspec(std::string_view text);

}  // namespace cfvar

#endif  // CFVAR_CFCORE_CFSPEC_HPP

#ifndef CFVAR_TRANSFORMS_TRANSFORMS_HPP
#define CFVAR_TRANSFORMS_TRANSFORMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "cfvar/cfcore/cfspec.hpp"
#include "cfvar/cfcore/recurrence.hpp"
#include "cfvar/numkit/real.hpp"

namespace cfvar {

/// x -> (a x + b) / (c x + d).
struct MoebiusMap {
  BigRational a = 1, b = 0, c = 0, d = 1;

  static MoebiusMap identity() { return {}; }
  BigRational det() const { return a * d - b * c; }
  MoebiusMap inverse() const;
  Real apply(const Real& x) const;
  BigRational apply(const BigRational& x) const;
  /// Same map up to a common scalar.
  bool equivalent(const MoebiusMap& o) const;
  std::string to_string() const;

  friend MoebiusMap operator*(const MoebiusMap& f, const MoebiusMap& g);  // f after g
  friend bool operator==(const MoebiusMap&, const MoebiusMap&) = default;
};

/// Rewrites the tail after a one-point equivalence transform c_0 = 1, c_n = c:
/// a_n -> c_n c_{n-1} a_n, b_n -> c_n b_n. c is the least positive rational that
/// makes both polynomials integral. Needs at most one head per list; a missing
/// head is materialized when c != 1 because index 0 (resp. 1) scales differently.
struct ClearedCF {
  CFSpec cf;
  BigRational c;
};
ClearedCF clear_denominators(const CFSpec& cf);

/// n -> n + 1/2 in both polynomials, heads kept, then clear_denominators.
CFSpec half_shift(const CFSpec& cf);

/// Polynomial part only: b(n+1/2), a(n+1/2) scaled by c and c^2 with the least c
/// making both integral. For fractions whose heads do not fit half_shift.
struct ShiftedTail {
  Poly2 b_poly;
  Poly2 a_poly;
  BigRational c;
};
ShiftedTail half_shift_tail(const CFSpec& cf);

struct HeadEdit {
  CFSpec cf;
  /// limit(new) = map(limit(old)).
  MoebiusMap map;
  /// First index from which a_n and b_n of both fractions agree.
  long k = 0;
};

inline constexpr long kHeadEditCap = 10;

/// Replaces the heads; the map is composed from both depth-k transfer matrices.
HeadEdit head_edit(const CFSpec& cf, std::vector<Poly2> new_b_heads, std::vector<Poly2> new_a_heads,
                   const std::optional<ZValue>& z = std::nullopt, long cap = kHeadEditCap);

/// Same construction for two arbitrary fractions whose coefficients agree from some
/// index k <= cap on (checked on the polynomials, not assumed). limit(to) = map(limit(from)).
HeadEdit moebius_between(const CFSpec& from, const CFSpec& to, const std::optional<ZValue>& z = std::nullopt,
                         long cap = kHeadEditCap);

/// Transfer matrix of the first k layers: limit = M(t_k), t_k = b_k + a_{k+1}/(b_{k+1} + ...).
MoebiusMap transfer_matrix(const CFSpec& cf, long k, const std::optional<ZValue>& z = std::nullopt);

struct IntegerShift {
  /// The m-th complete quotient as a fraction: b'_n = b_{n+m}, a'_n = a_{n+m}.
  CFSpec cf;
  /// limit(original) = map(limit(shifted)).
  MoebiusMap map;
};
IntegerShift integer_shift(const CFSpec& cf, long m, const std::optional<ZValue>& z = std::nullopt);

/// Term ratio t_k / t_{k-1} = num(k) / den(k), polynomials in k (written n) and z.
struct RationalFn {
  Poly2 num;
  Poly2 den;
};

/// Fraction whose depth-n convergent is constant + t_0 + ... + t_{n-1}, where
/// t_j = t_{j-1} * ratio(k_start + j - 1). Euler's form scaled by c_n = den(k_start + n - 2).
CFSpec euler_transform(const Poly2& t0, const RationalFn& ratio, long k_start, const Poly2& constant = Poly2());

/// n -> n + sign/2 in all three coefficients, rescaled by the power of 2 that
/// restores the 2-adic valuation of the joint content.
ThreeTermRecurrence recurrence_shift_half(const ThreeTermRecurrence& rec, int sign = +1);

}  // namespace cfvar

#endif  // CFVAR_TRANSFORMS_TRANSFORMS_HPP

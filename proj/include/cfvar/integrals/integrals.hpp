#ifndef CFVAR_INTEGRALS_INTEGRALS_HPP
#define CFVAR_INTEGRALS_INTEGRALS_HPP

#include <array>
#include <utility>
#include <vector>

#include "cfvar/integrals/quadrature.hpp"
#include "cfvar/numkit/rational.hpp"
#include "cfvar/numkit/real.hpp"

namespace cfvar::integrals {

/// Exponents of the triple integral
/// x^a1 (1-x)^a4 y^a2 (1-y)^a5 z^a3 (1-z)^(a4+a5-a3) / (1-(1-xy)z)^(a0+1).
struct Params3 {
  std::array<BigRational, 6> a;
  bool operator==(const Params3&) const = default;
};

/// Exponents of the double integral x^a1 (1-x)^a3 y^a2 (1-y)^a4 / (1-xy)^(a0+1).
struct Params2 {
  std::array<BigRational, 5> a;
  bool operator==(const Params2&) const = default;
};

/// The eight (resp. five) quantities that must exceed -1 for convergence; their
/// Gamma(q+1) product is the normalization.
std::array<BigRational, 8> convergence_quantities3(const Params3& a);
std::array<BigRational, 5> convergence_quantities2(const Params2& a);
bool convergent3_ok(const Params3& a);
bool convergent2_ok(const Params2& a);

/// All exponents equal to v: the diagonal profile. At v = n - 1/2 it gives I3(n)
/// and, up to (-1)^n, I2(n).
Params3 diagonal3(const BigRational& v);
Params2 diagonal2(const BigRational& v);

/// 4x4 matrix c_ij, row-major.
struct CMatrix3 {
  std::array<BigRational, 16> cell;
  const BigRational& at(int i, int j) const { return cell[static_cast<std::size_t>(4 * i + j)]; }
  bool operator==(const CMatrix3&) const = default;
};

/// c_00 plus the lower-right 3x3 block, cells ordered
/// c00, c11, c12, c13, c21, c22, c23, c31, c32, c33.
struct CMatrix2 {
  std::array<BigRational, 10> cell;
  /// Position of c_ij in `cell`, or -1 for the cells the matrix does not carry.
  static int index(int i, int j);
  const BigRational& at(int i, int j) const;
  bool operator==(const CMatrix2&) const = default;
};

CMatrix3 cmatrix3(const Params3& a);
CMatrix2 cmatrix2(const Params2& a);
Params3 params_from(const CMatrix3& c);
Params2 params_from(const CMatrix2& c);

/// I1(nu; z) = int x^(nu-1/2) (1-x)^(nu-1/2) / (1-zx)^(nu+1/2) dx, z < 1.
QuadResult quad_I1(double nu, double z, QuadSpec spec = {.tol = 1e-14});
/// r(n; z) = int x^n (1-x)^n / (1-zx)^(n+1) dx, z < 1.
QuadResult quad_r1(double n, double z, QuadSpec spec = {.tol = 1e-14});
QuadResult quad_I2(const Params2& a, QuadSpec spec = {.tol = 1e-10});
QuadResult quad_I3(const Params3& a, QuadSpec spec = {.tol = 1e-8});
/// I2(n) with its (-1)^n sign.
QuadResult quad_I2_profile(long n, QuadSpec spec = {.tol = 1e-10});
QuadResult quad_I3_profile(long n, QuadSpec spec = {.tol = 1e-8});
/// int (x(1-x)y(1-y)z(1-z)/D)^nu / D, D = 1-(1-xy)z, for real nu >= 0.
QuadResult quad_r3(double nu, QuadSpec spec = {.tol = 1e-8});

/// Integral divided by the product of Gamma(q+1) over the convergence quantities.
QuadResult normalized3(const Params3& a, QuadSpec spec = {.tol = 1e-8});
QuadResult normalized2(const Params2& a, QuadSpec spec = {.tol = 1e-10});

/// c_{n,k} = int_0^inf t^k K0(t)^n dt for n in 1..4, k in 0..3.
QuadResult bessel_moment(int n, int k, QuadSpec spec = {.tol = 1e-13});

BigInt big_apery(long n);

/// Exact coordinates of I2(n) = p A - q B with A = pi Gamma(3/4)^2/Gamma(1/4)^2 and
/// B = pi Gamma(1/4)^2/Gamma(3/4)^2; element n of the result is (p(n), q(n)).
std::vector<std::pair<BigRational, BigRational>> I2_coords(long n_max);
/// Exact coordinates of I3(n) = alpha omega_plus + beta eta_plus.
std::vector<std::pair<BigRational, BigRational>> I3_coords(long n_max);

Real i2_basis_A(Precision p);
Real i2_basis_B(Precision p);
Real I2_from_coords(long n, Precision p);
Real I3_from_coords(long n, Precision p);

struct HypergIdentityReport {
  /// |80 - (2048/625) S1 - (Gamma(1/4)/Gamma(3/4))^4|
  Real residual1;
  /// |1/16 - (4/81) S2 - (Gamma(3/4)/Gamma(1/4))^4|
  Real residual2;
  /// Residuals of the first identity with N and 2N series terms.
  long terms = 0;
  Real truncated1_n;
  Real truncated1_2n;
  bool pass = false;
};

HypergIdentityReport hyperg_identity_check(Precision p);

}  // namespace cfvar::integrals

#endif  // CFVAR_INTEGRALS_INTEGRALS_HPP

#ifndef CFVAR_NUMKIT_SPECIAL_HPP
#define CFVAR_NUMKIT_SPECIAL_HPP

#include <memory>
#include <span>
#include <vector>

#include "cfvar/numkit/real.hpp"

namespace cfvar::numkit {

/// Arithmetic-geometric mean of two positive reals.
Real agm(const Real& a, const Real& b, Precision p);

/// Brent-Salamin AGM iteration.
Real pi(Precision p);

/// Euler's constant by Euler-Maclaurin summation of the harmonic series.
Real euler_gamma(Precision p);

/// zeta(s) for integer s >= 2 by Euler-Maclaurin summation.
Real zeta_int(int s, Precision p);

/// Complete elliptic integrals in the parameter convention K(z) = (pi/2) 2F1(1/2,1/2;1;z),
/// E(z) = (pi/2) 2F1(-1/2,1/2;1;z). Real branch only: z < 1.
Real elliptic_K(const Real& z, Precision p);
Real elliptic_E(const Real& z, Precision p);

/// log Gamma(x) for x > 0 via argument shift and Stirling's series.
Real ln_gamma(const Real& x, Precision p);
Real gamma(const Real& x, Precision p);

/// psi_1(x) for x > 0 via recurrence shift and the asymptotic series.
Real trigamma(const Real& x, Precision p);

/// Generalized hypergeometric series pFq(upper; lower; x) with rational parameters.
/// Accepts |x| < 1 when p = q + 1 (any x when p <= q), and |x| = 1 only when the
/// terms decay at least like n^-2. Terminating series are always accepted.
Real hypergeometric_pFq(std::span<const BigRational> upper, std::span<const BigRational> lower,
                        const Real& x, Precision p);

/// Modified Bessel function K_0(t), t > 0.
Real bessel_K0(const Real& t, Precision p);

/// Upper incomplete gamma function Gamma(s, x), x >= 0.
Real incomplete_gamma_upper(const Real& s, const Real& x, Precision p);

/// Exact even-index Bernoulli numbers: element j-1 is B_{2j}. The returned table
/// has at least `count` entries and is immutable; the cache behind it is locked.
std::shared_ptr<const std::vector<BigRational>> bernoulli_even(std::size_t count);

}  // namespace cfvar::numkit

#endif  // CFVAR_NUMKIT_SPECIAL_HPP

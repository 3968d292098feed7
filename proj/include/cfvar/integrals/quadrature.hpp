#ifndef CFVAR_INTEGRALS_QUADRATURE_HPP
#define CFVAR_INTEGRALS_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace cfvar::integrals {

/// Target relative tolerance and node budget for one integral. The tolerance floors
/// are 1e-15 (1D), 1e-10 (2D) and 1e-8 (3D); requests below them are clamped.
struct QuadSpec {
  double tol = 1e-10;
  long budget = 200'000'000;
  int max_level = 7;
};

struct QuadResult {
  double value = 0;
  /// |S(h) - S(h/2)| of the last two levels.
  double error = 0;
  long evaluations = 0;
  int level = 0;
};

/// tanh-sinh node on [0,1] with its complement 1-x carried exactly.
struct DENode {
  double x;
  double xc;
  double w;
};

/// Nodes at step h = 2^-level, truncated where x or 1-x underflows.
std::vector<DENode> de_nodes(int level);

/// Integral over [0,1] of f(x, 1-x).
QuadResult de_integrate_1d(const std::function<double(double, double)>& f, QuadSpec spec);

/// Integral over [lo, hi]; f takes the point and its distances to both ends.
QuadResult de_integrate_interval(const std::function<double(double, double, double)>& f, double lo, double hi,
                                 QuadSpec spec);

}  // namespace cfvar::integrals

#endif  // CFVAR_INTEGRALS_QUADRATURE_HPP

#ifndef CFVAR_RVGROUP_RVGROUP_HPP
#define CFVAR_RVGROUP_RVGROUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "cfvar/integrals/integrals.hpp"

namespace cfvar::rvgroup {

using integrals::CMatrix2;
using integrals::CMatrix3;
using integrals::Params2;
using integrals::Params3;

/// Permutation of matrix cells: applying it moves the value at cell src[i] into cell i.
struct CellPerm {
  std::vector<int> src;
  std::string name;

  static CellPerm identity(std::size_t cells);
  /// Product transport: (p * q) acts as q first, then p.
  friend CellPerm operator*(const CellPerm& p, const CellPerm& q);
  bool is_identity() const;
  bool is_bijection() const;
  bool operator==(const CellPerm& o) const { return src == o.src; }
};

/// a1, a2, a3, b, h on the 16 cells (row-major 4x4).
std::vector<CellPerm> generators_G3();
/// a1, a2, b, h on the 10 cells of CMatrix2.
std::vector<CellPerm> generators_G2();

struct GroupClosure {
  std::vector<CellPerm> elements;
  /// Generator indices, applied left to right, producing each element.
  std::vector<std::vector<int>> words;
  std::vector<std::string> generator_names;

  std::size_t order() const { return elements.size(); }
  std::string word_string(std::size_t i) const;
};

/// Breadth-first closure; throws SpecError past `bound` elements.
GroupClosure group_closure(const std::vector<CellPerm>& gens, std::size_t bound = 1'000'000);

CMatrix3 apply(const CellPerm& p, const CMatrix3& c);
CMatrix2 apply(const CellPerm& p, const CMatrix2& c);

struct Recovered3 {
  Params3 params;
  /// cmatrix3(params) reproduces the matrix.
  bool consistent = false;
};
struct Recovered2 {
  Params2 params;
  bool consistent = false;
};

Recovered3 recover_params(const CMatrix3& c);
Recovered2 recover_params(const CMatrix2& c);

/// Sorted copy of the cell values.
std::vector<BigRational> multiset(const CMatrix3& c);
std::vector<BigRational> multiset(const CMatrix2& c);

/// k largest elements, with multiplicity, in descending order.
std::vector<BigRational> successive_maxima(std::vector<BigRational> m, std::size_t k);

/// lcm(1, ..., N); d_0 = 1.
BigInt lcm_d(long n);

struct IntegralityRow {
  long n = 0;
  /// d_{2n-1}^k with k = 3 (triple) or 2 (double).
  BigInt scale;
  BigRational first;
  BigRational second;
  bool ok = false;
};

struct IntegralityReport {
  std::vector<IntegralityRow> rows;
  /// n whose scaled coordinates are not integral.
  std::vector<long> failures;
  bool pass = true;
};

/// d_{2n-1}^3 (alpha, beta)(n) in Z^2 for 1 <= n <= n_max.
IntegralityReport integrality3(long n_max);
/// d_{2n-1}^2 (p, q)(n) in Z^2 for 1 <= n <= n_max.
IntegralityReport integrality2(long n_max);

struct GrowthFit {
  long from = 0;
  long to = 0;
  double slope_hat = 0;
  double slope_model = 0;
  double relative_error = 0;
};

/// Least-squares slope of log(d_{2n-1}^3 |alpha(n)|) against n, vs 6 + 4 log(1+sqrt2).
GrowthFit growth_fit3(long from = 20, long to = 40);

struct ScanEntry {
  std::string word;
  std::vector<BigRational> params;
  bool convergent = false;
  double value = 0;
  double error = 0;
  double deviation = 0;
};

struct InvarianceReport {
  std::size_t group_order = 0;
  std::size_t distinct_images = 0;
  double base_value = 0;
  double tolerance = 0;
  double max_deviation = 0;
  std::vector<ScanEntry> entries;
  std::vector<std::string> skipped;
  bool pass = true;
};

/// Normalized integrals over up to `sample_size` distinct orbit images, chosen evenly
/// from the closure order; deviations are relative to the value at `a`.
InvarianceReport invariance_scan(const Params3& a, std::size_t sample_size, integrals::QuadSpec spec = {.tol = 1e-8});
InvarianceReport invariance_scan(const Params2& a, std::size_t sample_size, integrals::QuadSpec spec = {.tol = 1e-10});

}  // namespace cfvar::rvgroup

#endif  // CFVAR_RVGROUP_RVGROUP_HPP

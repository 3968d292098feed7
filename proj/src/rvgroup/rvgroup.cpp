#include "cfvar/rvgroup/rvgroup.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "cfvar/errors.hpp"

namespace cfvar::rvgroup {
namespace {

constexpr int cell3(int i, int j) { return 4 * i + j; }
int cell2(int i, int j) { return CMatrix2::index(i, j); }

CellPerm swaps(std::size_t cells, const std::vector<std::pair<int, int>>& pairs, std::string name) {
  CellPerm p = CellPerm::identity(cells);
  for (auto [a, b] : pairs) std::swap(p.src[static_cast<std::size_t>(a)], p.src[static_cast<std::size_t>(b)]);
  p.name = std::move(name);
  return p;
}

template <std::size_t N>
std::array<BigRational, N> transport(const CellPerm& p, const std::array<BigRational, N>& cells) {
  if (p.src.size() != N) throw DomainError("permutation acts on " + std::to_string(p.src.size()) + " cells, matrix has " + std::to_string(N));
  std::array<BigRational, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = cells[static_cast<std::size_t>(p.src[i])];
  return out;
}

// Distinct parameter images of the orbit, first word for each, in closure order.
template <class Params, class Matrix>
std::vector<std::pair<std::string, Params>> orbit_images(const GroupClosure& g, const Matrix& base) {
  std::vector<std::pair<std::string, Params>> out;
  std::map<std::vector<BigRational>, bool> seen;
  for (std::size_t i = 0; i < g.order(); ++i) {
    const auto m = apply(g.elements[i], base);
    const auto rec = recover_params(m);
    if (!rec.consistent) continue;
    std::vector<BigRational> key(rec.params.a.begin(), rec.params.a.end());
    if (seen.emplace(key, true).second) out.emplace_back(g.word_string(i), rec.params);
  }
  return out;
}

template <class Params, class Matrix, class Conv, class Norm>
InvarianceReport scan(const Params& a, const GroupClosure& g, const Matrix& base, std::size_t sample_size,
                      integrals::QuadSpec spec, Conv convergent, Norm normalized) {
  if (!convergent(a)) throw DomainError("invariance_scan needs convergent parameters");
  InvarianceReport r;
  r.group_order = g.order();
  r.tolerance = spec.tol;
  const auto images = orbit_images<Params>(g, base);
  r.distinct_images = images.size();
  std::vector<std::pair<std::string, Params>> picked;
  if (sample_size >= images.size()) {
    picked = images;
  } else {
    for (std::size_t i = 0; i < sample_size; ++i) picked.push_back(images[i * images.size() / sample_size]);
  }
  const auto base_q = normalized(a, spec);
  r.base_value = base_q.value;
  for (const auto& [word, pa] : picked) {
    if (!convergent(pa)) {
      std::string desc = word + " -> (";
      for (std::size_t i = 0; i < pa.a.size(); ++i) desc += (i ? "," : "") + to_string(pa.a[i]);
      r.skipped.push_back(desc + ") not convergent");
      continue;
    }
    ScanEntry e;
    e.word = word;
    e.params.assign(pa.a.begin(), pa.a.end());
    e.convergent = true;
    const auto q = normalized(pa, spec);
    e.value = q.value;
    e.error = q.error;
    e.deviation = std::fabs(q.value - r.base_value) / std::max(std::fabs(r.base_value), 1e-300);
    r.max_deviation = std::max(r.max_deviation, e.deviation);
    r.entries.push_back(std::move(e));
  }
  r.pass = r.max_deviation < 2 * spec.tol;
  return r;
}

}  // namespace

CellPerm CellPerm::identity(std::size_t cells) {
  CellPerm p;
  p.src.resize(cells);
  for (std::size_t i = 0; i < cells; ++i) p.src[i] = static_cast<int>(i);
  p.name = "id";
  return p;
}

CellPerm operator*(const CellPerm& p, const CellPerm& q) {
  if (p.src.size() != q.src.size()) throw DomainError("composing permutations on different cell sets");
  CellPerm r;
  r.src.resize(p.src.size());
  // apply(p, apply(q, c))[i] = apply(q, c)[p[i]] = c[q[p[i]]]
  for (std::size_t i = 0; i < p.src.size(); ++i) r.src[i] = q.src[static_cast<std::size_t>(p.src[i])];
  return r;
}

bool CellPerm::is_identity() const {
  for (std::size_t i = 0; i < src.size(); ++i)
    if (src[i] != static_cast<int>(i)) return false;
  return true;
}

bool CellPerm::is_bijection() const {
  std::vector<bool> hit(src.size(), false);
  for (int s : src) {
    if (s < 0 || static_cast<std::size_t>(s) >= src.size() || hit[static_cast<std::size_t>(s)]) return false;
    hit[static_cast<std::size_t>(s)] = true;
  }
  return true;
}

std::vector<CellPerm> generators_G3() {
  std::vector<CellPerm> g;
  for (int j = 1; j <= 3; ++j) {
    std::vector<std::pair<int, int>> ps;
    for (int k = 0; k < 4; ++k) ps.emplace_back(cell3(j, k), cell3(0, k));
    g.push_back(swaps(16, ps, "a" + std::to_string(j)));
  }
  std::vector<std::pair<int, int>> cols;
  for (int i = 0; i < 4; ++i) cols.emplace_back(cell3(i, 2), cell3(i, 3));
  g.push_back(swaps(16, cols, "b"));
  g.push_back(swaps(16,
                    {{cell3(0, 0), cell3(2, 2)},
                     {cell3(0, 2), cell3(2, 0)},
                     {cell3(1, 1), cell3(3, 3)},
                     {cell3(1, 3), cell3(3, 1)}},
                    "h"));
  return g;
}

std::vector<CellPerm> generators_G2() {
  std::vector<CellPerm> g;
  for (int j = 1; j <= 2; ++j) {
    std::vector<std::pair<int, int>> ps;
    for (int k = 1; k <= 3; ++k) ps.emplace_back(cell2(j, k), cell2(3, k));
    g.push_back(swaps(10, ps, "a" + std::to_string(j)));
  }
  std::vector<std::pair<int, int>> cols;
  for (int i = 1; i <= 3; ++i) cols.emplace_back(cell2(i, 2), cell2(i, 3));
  g.push_back(swaps(10, cols, "b"));
  g.push_back(swaps(10, {{cell2(0, 0), cell2(2, 2)}, {cell2(1, 1), cell2(3, 3)}, {cell2(1, 3), cell2(3, 1)}}, "h"));
  return g;
}

std::string GroupClosure::word_string(std::size_t i) const {
  if (words[i].empty()) return "id";
  std::string s;
  for (int g : words[i]) s += (s.empty() ? "" : " ") + generator_names[static_cast<std::size_t>(g)];
  return s;
}

GroupClosure group_closure(const std::vector<CellPerm>& gens, std::size_t bound) {
  if (gens.empty()) throw DomainError("group_closure needs at least one generator");
  const std::size_t cells = gens.front().src.size();
  for (const auto& g : gens)
    if (g.src.size() != cells || !g.is_bijection()) throw DomainError("generators must be bijections on a common cell set");
  GroupClosure out;
  for (const auto& g : gens) out.generator_names.push_back(g.name);
  std::map<std::vector<int>, std::size_t> index;
  out.elements.push_back(CellPerm::identity(cells));
  out.words.emplace_back();
  index[out.elements[0].src] = 0;
  for (std::size_t head = 0; head < out.elements.size(); ++head) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      CellPerm next = gens[k] * out.elements[head];
      if (index.contains(next.src)) continue;
      if (out.elements.size() >= bound) throw SpecError("group closure exceeds the safety bound");
      index[next.src] = out.elements.size();
      auto word = out.words[head];
      word.push_back(static_cast<int>(k));
      out.elements.push_back(std::move(next));
      out.words.push_back(std::move(word));
    }
  }
  return out;
}

CMatrix3 apply(const CellPerm& p, const CMatrix3& c) { return {transport(p, c.cell)}; }
CMatrix2 apply(const CellPerm& p, const CMatrix2& c) { return {transport(p, c.cell)}; }

Recovered3 recover_params(const CMatrix3& c) {
  Recovered3 r{integrals::params_from(c), false};
  r.consistent = integrals::cmatrix3(r.params) == c;
  return r;
}

Recovered2 recover_params(const CMatrix2& c) {
  Recovered2 r{integrals::params_from(c), false};
  r.consistent = integrals::cmatrix2(r.params) == c;
  return r;
}

std::vector<BigRational> multiset(const CMatrix3& c) {
  std::vector<BigRational> v(c.cell.begin(), c.cell.end());
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<BigRational> multiset(const CMatrix2& c) {
  std::vector<BigRational> v(c.cell.begin(), c.cell.end());
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<BigRational> successive_maxima(std::vector<BigRational> m, std::size_t k) {
  if (k > m.size()) throw DomainError("successive_maxima: k exceeds the multiset size");
  std::sort(m.begin(), m.end(), std::greater<>());
  m.resize(k);
  return m;
}

BigInt lcm_d(long n) {
  if (n < 0) throw DomainError("lcm_d needs N >= 0");
  BigInt d = 1;
  for (long k = 2; k <= n; ++k) d = lcm(d, BigInt(k));
  return d;
}

namespace {

IntegralityReport integrality(const std::vector<std::pair<BigRational, BigRational>>& coords, int power) {
  IntegralityReport r;
  for (std::size_t n = 1; n < coords.size(); ++n) {
    IntegralityRow row;
    row.n = static_cast<long>(n);
    BigInt d = lcm_d(2 * row.n - 1), s = 1;
    for (int k = 0; k < power; ++k) s *= d;
    row.scale = s;
    row.first = coords[n].first * BigRational(s);
    row.second = coords[n].second * BigRational(s);
    row.first.canonicalize();
    row.second.canonicalize();
    row.ok = is_integer(row.first) && is_integer(row.second);
    if (!row.ok) r.failures.push_back(row.n);
    r.pass = r.pass && row.ok;
    r.rows.push_back(std::move(row));
  }
  return r;
}

}  // namespace

IntegralityReport integrality3(long n_max) {
  if (n_max < 1) throw DomainError("integrality3 needs n_max >= 1");
  return integrality(integrals::I3_coords(n_max), 3);
}

IntegralityReport integrality2(long n_max) {
  if (n_max < 1) throw DomainError("integrality2 needs n_max >= 1");
  return integrality(integrals::I2_coords(n_max), 2);
}

GrowthFit growth_fit3(long from, long to) {
  if (from < 1 || to <= from) throw DomainError("growth_fit3 needs 1 <= from < to");
  const auto coords = integrals::I3_coords(to);
  const Precision p(30);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  long m = 0;
  for (long n = from; n <= to; ++n) {
    const BigInt d = lcm_d(2 * n - 1);
    const BigRational v = abs(coords[static_cast<std::size_t>(n)].first) * BigRational(d * d * d);
    const double y = log(Real(v, p)).to_double();
    sx += static_cast<double>(n);
    sy += y;
    sxx += static_cast<double>(n * n);
    sxy += static_cast<double>(n) * y;
    ++m;
  }
  GrowthFit g;
  g.from = from;
  g.to = to;
  g.slope_hat = (static_cast<double>(m) * sxy - sx * sy) / (static_cast<double>(m) * sxx - sx * sx);
  g.slope_model = 6 + 4 * std::log(1 + std::sqrt(2.0));
  g.relative_error = std::fabs(g.slope_hat - g.slope_model) / g.slope_model;
  return g;
}

InvarianceReport invariance_scan(const Params3& a, std::size_t sample_size, integrals::QuadSpec spec) {
  static const GroupClosure g = group_closure(generators_G3());
  return scan(a, g, integrals::cmatrix3(a), sample_size, spec, integrals::convergent3_ok,
              [](const Params3& p, integrals::QuadSpec s) { return integrals::normalized3(p, s); });
}

InvarianceReport invariance_scan(const Params2& a, std::size_t sample_size, integrals::QuadSpec spec) {
  static const GroupClosure g = group_closure(generators_G2());
  return scan(a, g, integrals::cmatrix2(a), sample_size, spec, integrals::convergent2_ok,
              [](const Params2& p, integrals::QuadSpec s) { return integrals::normalized2(p, s); });
}

}  // namespace cfvar::rvgroup

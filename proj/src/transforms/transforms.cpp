#include "cfvar/transforms/transforms.hpp"

#include <algorithm>
#include <limits>

#include "cfvar/errors.hpp"

namespace cfvar {

MoebiusMap MoebiusMap::inverse() const {
  if (det() == 0) throw DomainError("singular Moebius map");
  return {d, -b, -c, a};
}

Real MoebiusMap::apply(const Real& x) const {
  const Real den = x * c + Real(d, Precision(std::max(x.digits(), Precision::kMinDigits)));
  if (den.is_zero()) throw DomainError("Moebius map evaluated at its pole");
  return (x * a + b) / den;
}

BigRational MoebiusMap::apply(const BigRational& x) const {
  const BigRational den = c * x + d;
  if (den == 0) throw DomainError("Moebius map evaluated at its pole");
  return (a * x + b) / den;
}

bool MoebiusMap::equivalent(const MoebiusMap& o) const {
  const BigRational u[4] = {a, b, c, d};
  const BigRational v[4] = {o.a, o.b, o.c, o.d};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (u[i] * v[j] != u[j] * v[i]) return false;
  return true;
}

std::string MoebiusMap::to_string() const {
  return "x -> (" + cfvar::to_string(a) + "*x + " + cfvar::to_string(b) + ") / (" + cfvar::to_string(c) +
         "*x + " + cfvar::to_string(d) + ")";
}

MoebiusMap operator*(const MoebiusMap& f, const MoebiusMap& g) {
  return {f.a * g.a + f.b * g.c, f.a * g.b + f.b * g.d, f.c * g.a + f.d * g.c, f.c * g.b + f.d * g.d};
}

namespace {

// Prime factors by trial division; a leftover cofactor is treated as one prime.
void collect_primes(BigInt v, std::vector<BigInt>& out) {
  v = abs(v);
  for (unsigned long p = 2; v > 1 && p < 100000; p += (p == 2 ? 1 : 2)) {
    if (v % p != 0) continue;
    out.emplace_back(p);
    while (v % p == 0) v /= p;
  }
  if (v > 1) out.push_back(v);
}

long valuation(const BigInt& v, const BigInt& p) {
  long k = 0;
  BigInt x = abs(v);
  while (x != 0 && x % p == 0) {
    x /= p;
    ++k;
  }
  return k;
}

struct Constraint {
  BigRational g;  // need c^power * g integral
  long power;
};

long ceil_div(long a, long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

// Least positive rational c with c^power * g integral for every constraint.
BigRational least_scale(const std::vector<Constraint>& cs) {
  std::vector<BigInt> primes;
  for (const auto& c : cs) {
    if (c.g == 0) continue;
    collect_primes(c.g.get_num(), primes);
    collect_primes(c.g.get_den(), primes);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  BigRational scale = 1;
  for (const auto& p : primes) {
    long need = std::numeric_limits<long>::min();
    bool any = false;
    for (const auto& c : cs) {
      if (c.g == 0) continue;
      const long v = valuation(c.g.get_num(), p) - valuation(c.g.get_den(), p);
      need = std::max(need, ceil_div(-v, c.power));
      any = true;
    }
    if (!any) continue;
    BigInt pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(need >= 0 ? need : -need));
    scale *= need >= 0 ? BigRational(pk) : BigRational(1, pk);
  }
  scale.canonicalize();
  return scale;
}

BigRational joint_content(std::initializer_list<const Poly2*> polys) {
  BigInt num = 0, den = 1;
  for (const Poly2* p : polys) {
    const BigRational c = p->content();
    if (c == 0) continue;
    num = gcd(num, c.get_num());
    den = lcm(den, c.get_den());
  }
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

void require_pipeline_shape(const CFSpec& cf) {
  if (cf.b_heads.size() > 1 || cf.a_heads.size() > 1)
    throw SpecError("supported only for at most one b-head and one a-head, got " +
                    std::to_string(cf.b_heads.size()) + " and " + std::to_string(cf.a_heads.size()));
}

}  // namespace

ClearedCF clear_denominators(const CFSpec& cf) {
  require_pipeline_shape(cf);
  if (cf.a_poly.is_zero()) throw SpecError("a_poly is identically zero");
  // heads are scaled but do not constrain c; a rational head such as 12/7 stays rational
  const BigRational c = least_scale({{cf.b_poly.content(), 1}, {cf.a_poly.content(), 2}});
  const Poly2 a1 = cf.a_heads.empty() ? cf.a_poly.at_n(0) : cf.a_heads[0];

  ClearedCF out{cf, c};
  if (c == 1) return out;
  if (out.cf.b_heads.empty()) out.cf.b_heads.push_back(cf.b_poly.at_n(0));
  out.cf.a_heads = {a1 * Poly2(c)};
  out.cf.b_poly = cf.b_poly * Poly2(c);
  out.cf.a_poly = cf.a_poly * Poly2(c * c);
  return out;
}

CFSpec half_shift(const CFSpec& cf) {
  require_pipeline_shape(cf);
  CFSpec s = cf;
  s.b_poly = cf.b_poly.shift_n(BigRational(1, 2));
  s.a_poly = cf.a_poly.shift_n(BigRational(1, 2));
  return clear_denominators(s).cf;
}

ShiftedTail half_shift_tail(const CFSpec& cf) {
  const Poly2 b = cf.b_poly.shift_n(BigRational(1, 2));
  const Poly2 a = cf.a_poly.shift_n(BigRational(1, 2));
  const BigRational c = least_scale({{b.content(), 1}, {a.content(), 2}});
  return {b * Poly2(c), a * Poly2(c * c), c};
}

MoebiusMap transfer_matrix(const CFSpec& cf, long k, const std::optional<ZValue>& z) {
  if (k < 0) throw DomainError("transfer matrix depth must be >= 0");
  if (k == 0) return MoebiusMap::identity();
  BigRational p_prev = 1, q_prev = 0, p = cf.b(0, z), q = 1;
  for (long n = 1; n < k; ++n) {
    const BigRational an = cf.a(n, z);
    if (an == 0) throw DomainError("zero partial numerator a_" + std::to_string(n) + " in the dropped layers");
    const BigRational bn = cf.b(n, z);
    BigRational pn = bn * p + an * p_prev, qn = bn * q + an * q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(pn);
    q = std::move(qn);
  }
  const BigRational ak = cf.a(k, z);
  if (ak == 0) throw DomainError("zero partial numerator a_" + std::to_string(k) + " in the dropped layers");
  return {p, ak * p_prev, q, ak * q_prev};
}

HeadEdit moebius_between(const CFSpec& from, const CFSpec& to, const std::optional<ZValue>& z, long cap) {
  const long heads = static_cast<long>(std::max({from.b_heads.size(), from.a_heads.size() + 1,
                                                 to.b_heads.size(), to.a_heads.size() + 1}));
  if (!(from.b_poly == to.b_poly) || !(from.a_poly == to.a_poly))
    throw SpecError("the two fractions have different polynomial tails");
  // beyond every head both fractions read the same polynomials; walk back from there
  long k = heads;
  while (k > 0) {
    const long n = k - 1;
    const bool b_same = from.coefficient(Part::b, n) == to.coefficient(Part::b, n);
    const bool a_same = n < 1 || from.coefficient(Part::a, n) == to.coefficient(Part::a, n);
    if (!b_same || !a_same) break;
    --k;
  }
  if (k > cap) throw SpecError("tails first coincide at index " + std::to_string(k) + ", beyond the cap");
  const MoebiusMap mf = transfer_matrix(from, k, z);
  const MoebiusMap mt = transfer_matrix(to, k, z);
  return {to, mt * mf.inverse(), k};
}

HeadEdit head_edit(const CFSpec& cf, std::vector<Poly2> new_b_heads, std::vector<Poly2> new_a_heads,
                   const std::optional<ZValue>& z, long cap) {
  for (const auto& h : new_b_heads)
    if (!h.free_of_n()) throw SpecError("head depends on n");
  for (const auto& h : new_a_heads)
    if (!h.free_of_n()) throw SpecError("head depends on n");
  CFSpec out = cf;
  out.b_heads = std::move(new_b_heads);
  out.a_heads = std::move(new_a_heads);
  return moebius_between(cf, out, z, cap);
}

IntegerShift integer_shift(const CFSpec& cf, long m, const std::optional<ZValue>& z) {
  if (m < 0) throw DomainError("integer shift must be >= 0");
  IntegerShift out{cf, transfer_matrix(cf, m, z)};
  if (m == 0) return out;
  const auto mm = static_cast<std::size_t>(m);
  out.cf.b_heads.assign(cf.b_heads.begin() + static_cast<long>(std::min(mm, cf.b_heads.size())), cf.b_heads.end());
  out.cf.a_heads.assign(cf.a_heads.begin() + static_cast<long>(std::min(mm, cf.a_heads.size())), cf.a_heads.end());
  out.cf.b_poly = cf.b_poly.shift_n(m);
  out.cf.a_poly = cf.a_poly.shift_n(m);
  return out;
}

CFSpec euler_transform(const Poly2& t0, const RationalFn& ratio, long k_start, const Poly2& constant) {
  if (ratio.num.is_zero() || ratio.den.is_zero()) throw DomainError("term ratio is identically zero or singular");
  if (!t0.free_of_n() || !constant.free_of_n()) throw SpecError("t0 and the constant must not depend on n");
  constexpr long kScan = 1000;
  for (long k = k_start - 1; k <= k_start + kScan; ++k) {
    if (ratio.den.at_n(k).is_zero()) throw DomainError("term ratio has a pole at k = " + std::to_string(k));
    if (k >= k_start && ratio.num.at_n(k).is_zero())
      throw DomainError("term ratio vanishes at k = " + std::to_string(k));
  }
  const BigRational ks(k_start);
  const Poly2 d1 = ratio.den.at_n(ks - 1);
  CFSpec cf;
  cf.b_poly = ratio.den.shift_n(ks - 2) + ratio.num.shift_n(ks - 2);
  cf.a_poly = -(ratio.num.shift_n(ks - 1) * ratio.den.shift_n(ks - 2));
  cf.b_heads = {constant};
  if (!(cf.b_poly.at_n(1) == d1)) cf.b_heads.push_back(d1);
  cf.a_heads = {d1 * t0};
  if (cf.depends_on_param()) cf.param = 'z';
  return cf;
}

ThreeTermRecurrence recurrence_shift_half(const ThreeTermRecurrence& rec, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("half shift sign must be +1 or -1");
  const BigRational h(sign, 2);
  ThreeTermRecurrence s{rec.r_plus.shift_n(h), rec.r_zero.shift_n(h), rec.r_minus.shift_n(h)};
  const BigRational g0 = joint_content({&rec.r_plus, &rec.r_zero, &rec.r_minus});
  const BigRational g1 = joint_content({&s.r_plus, &s.r_zero, &s.r_minus});
  if (g0 == 0) return s;
  const long k = valuation2(g0) - valuation2(g1);
  const Poly2 scale(k >= 0 ? pow(BigRational(2), k) : pow(BigRational(1, 2), -k));
  return {s.r_plus * scale, s.r_zero * scale, s.r_minus * scale};
}

}  // namespace cfvar

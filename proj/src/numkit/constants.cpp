#include "cfvar/numkit/constants.hpp"

#include <array>
#include <climits>
#include <map>
#include <mutex>

#include "cfvar/errors.hpp"
#include "cfvar/numkit/lseries.hpp"
#include "cfvar/numkit/special.hpp"

namespace cfvar::numkit {
namespace {

constexpr std::array kAll = {
    ConstId::pi,       ConstId::log2,       ConstId::sqrt2,          ConstId::golden,
    ConstId::zeta2,    ConstId::zeta3,      ConstId::l_chi3_2,       ConstId::gamma_q4,
    ConstId::gamma_q3, ConstId::omega_plus, ConstId::eta_plus,       ConstId::omega_minus_im,
    ConstId::eta_minus_im,
};

constexpr std::array kNames = {
    "pi",       "log2",       "sqrt2",    "golden",         "zeta2",
    "zeta3",    "l_chi3_2",   "gamma_q4", "gamma_q3",       "omega_plus",
    "eta_plus", "omega_minus_im", "eta_minus_im",
};

constexpr std::array<StoredDigits, 5> kStored = {{
    {"omega_plus", "6.9975630166806323595567578268530960", 34,
     "printed period 8 L(f,3) of eta(2tau)^4 eta(4tau)^4 (fallback only)"},
    {"omega_minus_im", "8.6711873312659436466050308394689215", 34,
     "printed period 4 pi L(f,2), imaginary part (fallback only)"},
    {"eta_plus", "-261.3739159094042031485947045700717759", 35,
     "printed quasiperiod eta_+"},
    {"eta_minus_im", "-359.3354423254855950047613470695853950", 35,
     "printed quasiperiod eta_-, imaginary part"},
    {"s_big_limit",
     "0.16921170657881854838709526498834093533256251638822745276659373255666458", 70,
     "printed limit of the half-shifted big Apery continued fraction"},
}};

Real log2_series(Precision w) {
  // sum 1/(k 2^k)
  const Real eps = epsilon10(w.digits(), w);
  Real sum(0L, w), pw(BigRational(1, 2), w);
  for (long k = 1;; ++k) {
    const Real term = pw / k;
    sum += term;
    if (term <= eps * sum) break;
    pw = ldexp(pw, -1);
  }
  return sum;
}

Real gamma_third_cubed(Precision w) {
  // Gamma(1/3)^3 = 2^(7/3) pi K(k^2) / 3^(1/4) at the third singular value, k' = sqrt(2+sqrt3)/2
  const Real kp = sqrt(sqrt(Real(3L, w)) + 2) / 2;
  const Real piw = pi(w);
  const Real kk = piw / (agm(Real(1L, w), kp, w) * 2);
  const Real two_73 = pow(Real(2L, w), Real(BigRational(7, 3), w));
  return two_73 * piw * kk / sqrt(sqrt(Real(3L, w)));
}

Real compute(ConstId id, Precision w) {
  switch (id) {
    case ConstId::pi:
      return pi(w);
    case ConstId::log2:
      return log2_series(w);
    case ConstId::sqrt2:
      return sqrt(Real(2L, w));
    case ConstId::golden:
      return (sqrt(Real(5L, w)) + 1) / 2;
    case ConstId::zeta2:
      return zeta_int(2, w);
    case ConstId::zeta3:
      return zeta_int(3, w);
    case ConstId::l_chi3_2:
      return (trigamma(Real(BigRational(1, 3), w), w) - trigamma(Real(BigRational(2, 3), w), w)) / 9;
    case ConstId::gamma_q4: {
      const Real m = agm(Real(1L, w), sqrt(Real(2L, w)), w);
      return pi(w) * 4 / (m * m);
    }
    case ConstId::gamma_q3: {
      // (Gamma(1/3)/Gamma(2/3))^6 = 27 Gamma(1/3)^12 / (64 pi^6)
      const Real g3 = gamma_third_cubed(w);
      const Real piw = pi(w);
      const Real ratio6 = pow(g3, 4L) * 27 / (pow(piw, 6L) * 64);
      return ratio6 * pow(Real(2L, w), Real(BigRational(-1, 3), w));
    }
    case ConstId::omega_plus:
      return lvalue_eta8(3, w).value * 8;
    case ConstId::omega_minus_im:
      return lvalue_eta8(2, w).value * pi(w) * 4;
    case ConstId::eta_plus:
    case ConstId::eta_minus_im:
      break;
  }
  throw SpecError("no computation path for constant " + std::string(name(id)));
}

std::string method_of(ConstId id) {
  switch (id) {
    case ConstId::pi: return "Brent-Salamin AGM";
    case ConstId::log2: return "series sum 1/(k 2^k)";
    case ConstId::sqrt2: return "MPFR square root";
    case ConstId::golden: return "(1+sqrt5)/2";
    case ConstId::zeta2: return "Euler-Maclaurin";
    case ConstId::zeta3: return "Euler-Maclaurin";
    case ConstId::l_chi3_2: return "(psi1(1/3)-psi1(2/3))/9";
    case ConstId::gamma_q4: return "4 pi / agm(1, sqrt2)^2";
    case ConstId::gamma_q3: return "third singular value AGM";
    case ConstId::omega_plus: return "8 L(f,3), smoothed L-series";
    case ConstId::omega_minus_im: return "4 pi L(f,2), smoothed L-series";
    case ConstId::eta_plus:
    case ConstId::eta_minus_im: return "stored digits";
  }
  return {};
}

bool is_stored(ConstId id) { return id == ConstId::eta_plus || id == ConstId::eta_minus_im; }

}  // namespace

std::string_view name(ConstId id) { return kNames[static_cast<std::size_t>(id)]; }

std::optional<ConstId> constant_from_name(std::string_view n) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (n == kNames[i]) return kAll[i];
  return std::nullopt;
}

std::span<const ConstId> all_constants() { return kAll; }

int max_digits(ConstId id) {
  if (is_stored(id)) return stored(name(id)).max_digits;
  return INT_MAX;
}

std::span<const StoredDigits> stored_table() { return kStored; }

const StoredDigits& stored(std::string_view n) {
  for (const auto& s : kStored)
    if (s.name == n) return s;
  throw SpecError("no stored digits for '" + std::string(n) + "'");
}

Real stored_value(std::string_view n, Precision p) {
  const auto& s = stored(n);
  if (p.digits() > s.max_digits)
    throw PrecisionUnavailable(std::string(n) + " is stored to " + std::to_string(s.max_digits) +
                               " digits; " + std::to_string(p.digits()) + " requested");
  return Real(s.digits, p);
}

ConstantValue constant(ConstId id, Precision p) {
  if (is_stored(id)) return {stored_value(name(id), p), Provenance::stored, method_of(id)};

  static std::mutex mu;
  static std::map<std::pair<int, int>, Real> cache;
  const auto key = std::make_pair(static_cast<int>(id), p.digits());
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end())
      return {it->second, Provenance::computed, method_of(id)};
  }
  Real v = compute(id, p.with_guard()).rounded(p);
  {
    std::lock_guard lock(mu);
    cache.emplace(key, v);
  }
  return {std::move(v), Provenance::computed, method_of(id)};
}

ConstantValue constant(std::string_view n, Precision p) {
  const auto id = constant_from_name(n);
  if (!id) throw SpecError("unknown constant '" + std::string(n) + "'");
  return constant(*id, p);
}

}  // namespace cfvar::numkit

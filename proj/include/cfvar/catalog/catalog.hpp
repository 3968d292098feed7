#ifndef CFVAR_CATALOG_CATALOG_HPP
#define CFVAR_CATALOG_CATALOG_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cfvar/cfcore/cfspec.hpp"
#include "cfvar/cfcore/rate.hpp"
#include "cfvar/numkit/const_expr.hpp"

namespace cfvar::catalog {

inline constexpr const char* kFormat = "cfvar-catalog/1";

/// How an entry's limit is checked.
enum class Role {
  /// Limit compared against an oracle expression.
  oracle,
  /// One of two printed variants of the same CF; only the pair is decisive.
  variant,
  /// No closed form; observations are checked instead.
  exploratory,
};

enum class LimitKind {
  expr,
  /// (Gamma(s)/Gamma(s+1/2))^2 in the CF parameter s.
  gamma_ratio_sq,
  none,
};

struct LimitSpec {
  LimitKind kind = LimitKind::none;
  numkit::ConstExpr expr;
  /// Short human name, e.g. "cosh_shift" or "-3 eta_+/omega_+".
  std::string label;
  bool operator==(const LimitSpec&) const = default;
};

struct ParamSpec {
  char name = 'z';
  std::vector<BigRational> samples;
  bool operator==(const ParamSpec&) const = default;
};

struct CatalogEntry {
  std::string id;
  CFSpec cf;
  std::optional<ParamSpec> param;
  LimitSpec limit;
  RateModel rate;
  /// Algebraic exponent as a polynomial in the parameter; overrides rate.k per sample.
  std::optional<Poly2> rate_k_param;
  long rate_from = 40;
  long rate_to = 80;
  Role role = Role::oracle;
  /// Id of the sibling for variant entries.
  std::string sibling;
  /// Id of the entry whose half-shift this fraction is (tail only for f_z).
  std::string half_shift_of;
  std::string provenance;

  /// Rate model with the parameter-dependent exponent resolved.
  RateModel rate_at(const std::optional<BigRational>& s) const;
};

bool same_entry(const CatalogEntry& x, const CatalogEntry& y);

std::string_view role_name(Role r);
std::string_view limit_kind_name(LimitKind k);

const std::vector<CatalogEntry>& builtin_catalog();
const CatalogEntry& builtin(std::string_view id);
/// Ids compare with '_' and '-' treated alike.
const CatalogEntry* find(const std::vector<CatalogEntry>& cat, std::string_view id);

struct Diagnostic {
  std::string entry;
  std::string field;
  std::string message;
};

/// Structural problems of one entry; empty when valid.
std::vector<Diagnostic> validate(const CatalogEntry& e);

std::string to_json(const std::vector<CatalogEntry>& cat);
/// Throws ParseError with the entry index and field for schema violations.
std::vector<CatalogEntry> from_json(const std::string& text);
std::vector<CatalogEntry> load(const std::filesystem::path& path);
void save(const std::vector<CatalogEntry>& cat, const std::filesystem::path& path);

/// Oracle value of the limit; nullopt for exploratory entries. `s` is the parameter value.
std::optional<Real> eval_limit(const CatalogEntry& e, Precision p, const std::optional<BigRational>& s = std::nullopt);
/// Digits the oracle can deliver (stored constants cap it).
int limit_max_digits(const CatalogEntry& e);

}  // namespace cfvar::catalog

#endif  // CFVAR_CATALOG_CATALOG_HPP

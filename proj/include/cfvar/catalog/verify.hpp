#ifndef CFVAR_CATALOG_VERIFY_HPP
#define CFVAR_CATALOG_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "cfvar/catalog/catalog.hpp"
#include "cfvar/cfcore/convergents.hpp"
#include "cfvar/cfcore/rate.hpp"
#include "cfvar/transforms/transforms.hpp"

namespace cfvar::catalog {

inline constexpr const char* kReportFormat = "cfvar-report/1";

struct VerifyConfig {
  int prec = 40;
  long depth = kDefaultMaxDepth;
  /// 0 picks the hardware concurrency.
  unsigned jobs = 0;
  /// Replaces every parametric entry's own samples.
  std::optional<std::vector<BigRational>> samples;
  /// Limit tolerance 10^-digits; default min(prec, oracle digits) - 5.
  std::optional<int> limit_digits;
  double rate_ratio_tol = 0.005;
  double rate_c_tol = 0.02;
  /// Relative tolerance on the fitted algebraic exponent.
  double exponent_tol = 0.02;
  bool rates = true;
};

struct Check {
  std::string name;
  bool pass = false;
  double residual = 0;
  double tolerance = 0;
  std::string detail;
  /// Reported only; never fails the entry.
  bool informational = false;
};

struct SampleReport {
  std::optional<BigRational> param;
  std::string value;
  std::string oracle;
  long depth = 0;
  std::vector<Check> checks;
  bool pass = true;
};

struct EntryReport {
  std::string id;
  Role role = Role::oracle;
  std::vector<SampleReport> samples;
  /// Entry-wide checks: determinant identity, half-shift, variant resolution, observations.
  std::vector<Check> checks;
  std::vector<std::string> notes;
  bool pass = true;
  double seconds = 0;
};

struct VerificationReport {
  std::vector<EntryReport> entries;
  bool pass = true;
  std::size_t failed() const;
};

struct RateReport {
  RateModel model;
  RateFit fit;
  /// "oracle" or the self-referenced limit used as the true value.
  std::string reference;
  std::vector<Check> checks;
};

/// Rate fit of one sample over the entry's window or [from, to].
RateReport rate_report(const CatalogEntry& e, const std::optional<BigRational>& s, const VerifyConfig& cfg = {},
                       std::optional<long> from = std::nullopt, std::optional<long> to = std::nullopt);

/// `context` resolves siblings and half-shift parents.
EntryReport verify_entry(const CatalogEntry& e, const VerifyConfig& cfg = {},
                         const std::vector<CatalogEntry>& context = builtin_catalog());
VerificationReport verify_all(const std::vector<CatalogEntry>& cat, const VerifyConfig& cfg = {});

std::string report_table(const VerificationReport& r);
/// Deterministic structured document; timings are left out unless asked for.
std::string report_json(const VerificationReport& r, const VerifyConfig& cfg, bool timings = false);

struct VariantResolution {
  double quadrature = 0;
  double quadrature_error = 0;
  std::vector<std::string> ids;
  std::vector<double> deviations;
  /// Empty unless exactly one variant is within `match_tol`.
  std::string winner;
  double margin = 0;
  bool decisive = false;
};

inline constexpr double kVariantMatchTol = 1e-8;
inline constexpr double kVariantMargin = 1e-4;

/// Compares each fraction's limit with 8 c42/c40 from quadrature.
VariantResolution resolve_bessel_variants(const std::vector<const CatalogEntry*>& variants);

struct MoebiusRelation {
  std::string name;
  std::string from, to;
  MoebiusMap derived;
  /// Map that was expected from the printed statement, as limit(to) = map(limit(from)).
  MoebiusMap printed;
  bool printed_matches = false;
  /// |derived(limit from) - limit to|.
  double residual = 0;
  /// |printed(limit from) - limit to|.
  double printed_residual = 0;
  bool pass = false;
  std::string note;
};

/// The three head edits from the S-forms to thm2, thm3 and thm6.
std::vector<MoebiusRelation> moebius_relations(Precision p);

/// Best approximation with denominator <= max_den from the continued fraction of x.
BigRational rational_reconstruct(const Real& x, const BigInt& max_den);

/// f(z) = the f_z fraction evaluated at z^2 = z2 (z2 may be negative).
LimitResult f_value(const BigRational& z2, Precision p, long depth = kDefaultMaxDepth);

/// The open-function observations; the f(10) asymptotic check is the only strict
/// one that can fail, reconstruction results are informational.
std::vector<Check> f_observations(int prec = 40);

/// Observations at a single point: f(z), f(-z), f(z) + 6z^2 + 113/12.
std::vector<Check> f_explore_at(const BigRational& z, int prec = 40);

}  // namespace cfvar::catalog

#endif  // CFVAR_CATALOG_VERIFY_HPP

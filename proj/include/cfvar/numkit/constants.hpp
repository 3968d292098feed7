#ifndef CFVAR_NUMKIT_CONSTANTS_HPP
#define CFVAR_NUMKIT_CONSTANTS_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "cfvar/numkit/real.hpp"

namespace cfvar::numkit {

enum class ConstId {
  pi,
  log2,
  sqrt2,
  golden,
  zeta2,
  zeta3,
  l_chi3_2,
  gamma_q4,
  gamma_q3,
  omega_plus,
  eta_plus,
  omega_minus_im,
  eta_minus_im,
};

enum class Provenance { computed, stored };

std::string_view name(ConstId id);
std::optional<ConstId> constant_from_name(std::string_view name);
std::span<const ConstId> all_constants();

struct ConstantValue {
  Real value;
  Provenance provenance = Provenance::computed;
  std::string method;
};

/// Value at the requested precision. Stored constants throw PrecisionUnavailable
/// beyond their printed digits.
ConstantValue constant(ConstId id, Precision p);
ConstantValue constant(std::string_view name, Precision p);
inline Real constant_value(ConstId id, Precision p) { return constant(id, p).value; }

/// Digits a constant can deliver; effectively unbounded for computed ones.
int max_digits(ConstId id);

/// Printed digit strings borrowed from the literature, one provenance-annotated table.
struct StoredDigits {
  std::string_view name;
  std::string_view digits;
  int max_digits;
  std::string_view source;
};
std::span<const StoredDigits> stored_table();
const StoredDigits& stored(std::string_view name);
/// Parsed stored value; p may not exceed the entry's max_digits.
Real stored_value(std::string_view name, Precision p);

}  // namespace cfvar::numkit

#endif  // CFVAR_NUMKIT_CONSTANTS_HPP

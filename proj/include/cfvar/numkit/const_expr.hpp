#ifndef CFVAR_NUMKIT_CONST_EXPR_HPP
#define CFVAR_NUMKIT_CONST_EXPR_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "cfvar/numkit/constants.hpp"
#include "cfvar/numkit/real.hpp"

namespace cfvar::numkit {

enum class UnaryFn { sqrt, exp, log, sinh, cosh, sinhc, ellK, ellE };

/// Immutable expression over rationals, named constants and an optional real
/// parameter z. Text form: `-3*eta_plus/omega_plus`, `2*ellE(z)/ellK(z)`,
/// `golden^10`, `x^(1/3)`. sinhc(x) = sinh(x)/x; ellK/ellE use the parameter
/// convention of elliptic_K / elliptic_E.
class ConstExpr {
 public:
  enum class Kind { literal, constant, var_z, neg, add, sub, mul, div, pow, func };

  ConstExpr();  // literal 0
  static ConstExpr literal(const BigRational& q);
  static ConstExpr constant(ConstId id);
  static ConstExpr z();
  static ConstExpr func(UnaryFn f, const ConstExpr& arg);
  static ConstExpr pow(const ConstExpr& base, const BigRational& exponent);

  Kind kind() const;
  const BigRational& value() const;     // literal
  ConstId constant_id() const;          // constant
  UnaryFn function() const;             // func
  const BigRational& exponent() const;  // pow
  ConstExpr lhs() const;  // unary operand or left operand
  ConstExpr rhs() const;

  bool depends_on_z() const;
  /// Smallest max_digits over the constants used.
  int max_digits() const;
  std::string to_string() const;

  friend ConstExpr operator-(const ConstExpr& a);
  friend ConstExpr operator+(const ConstExpr& a, const ConstExpr& b);
  friend ConstExpr operator-(const ConstExpr& a, const ConstExpr& b);
  friend ConstExpr operator*(const ConstExpr& a, const ConstExpr& b);
  friend ConstExpr operator/(const ConstExpr& a, const ConstExpr& b);
  friend bool operator==(const ConstExpr& a, const ConstExpr& b);

 private:
  struct Node;
  explicit ConstExpr(std::shared_ptr<const Node> n);
  std::shared_ptr<const Node> node_;
};

ConstExpr parse_const_expr(std::string_view text);

std::string_view function_name(UnaryFn f);

/// Evaluates with guard digits. Throws PrecisionUnavailable when a stored constant
/// cannot support `p`, DomainError for a zero divisor or a missing z binding.
Real eval_const_expr(const ConstExpr& e, Precision p, const std::optional<Real>& z = std::nullopt);

}  // namespace cfvar::numkit

#endif  // CFVAR_NUMKIT_CONST_EXPR_HPP

#include "cfvar/numkit/const_expr.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <climits>

#include "cfvar/errors.hpp"
#include "cfvar/numkit/special.hpp"

namespace cfvar::numkit {

struct ConstExpr::Node {
  Kind kind = Kind::literal;
  BigRational q;  // literal value or pow exponent
  ConstId cid = ConstId::pi;
  UnaryFn fn = UnaryFn::sqrt;
  std::shared_ptr<const Node> a, b;
};

namespace {

constexpr std::array<std::pair<UnaryFn, const char*>, 8> kFunctions = {{
    {UnaryFn::sqrt, "sqrt"},
    {UnaryFn::exp, "exp"},
    {UnaryFn::log, "log"},
    {UnaryFn::sinh, "sinh"},
    {UnaryFn::cosh, "cosh"},
    {UnaryFn::sinhc, "sinhc"},
    {UnaryFn::ellK, "ellK"},
    {UnaryFn::ellE, "ellE"},
}};

}  // namespace

std::string_view function_name(UnaryFn f) {
  for (const auto& [g, n] : kFunctions)
    if (g == f) return n;
  return "?";
}

ConstExpr::ConstExpr() : node_(std::make_shared<Node>()) {}

ConstExpr::ConstExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

ConstExpr ConstExpr::literal(const BigRational& q) {
  auto n = std::make_shared<Node>();
  n->q = q;
  return ConstExpr(std::move(n));
}

ConstExpr ConstExpr::constant(ConstId id) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::constant;
  n->cid = id;
  return ConstExpr(std::move(n));
}

ConstExpr ConstExpr::z() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::var_z;
  return ConstExpr(std::move(n));
}

ConstExpr ConstExpr::func(UnaryFn f, const ConstExpr& arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::func;
  n->fn = f;
  n->a = arg.node_;
  return ConstExpr(std::move(n));
}

ConstExpr ConstExpr::pow(const ConstExpr& base, const BigRational& exponent) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::pow;
  n->q = exponent;
  n->a = base.node_;
  return ConstExpr(std::move(n));
}

ConstExpr::Kind ConstExpr::kind() const { return node_->kind; }
const BigRational& ConstExpr::value() const { return node_->q; }
ConstId ConstExpr::constant_id() const { return node_->cid; }
UnaryFn ConstExpr::function() const { return node_->fn; }
const BigRational& ConstExpr::exponent() const { return node_->q; }
ConstExpr ConstExpr::lhs() const { return ConstExpr(node_->a); }
ConstExpr ConstExpr::rhs() const { return ConstExpr(node_->b); }

ConstExpr operator-(const ConstExpr& a) {
  auto n = std::make_shared<ConstExpr::Node>();
  n->kind = ConstExpr::Kind::neg;
  n->a = a.node_;
  return ConstExpr(std::move(n));
}

ConstExpr operator+(const ConstExpr& a, const ConstExpr& b) {
  auto n = std::make_shared<ConstExpr::Node>();
  n->kind = ConstExpr::Kind::add;
  n->a = a.node_;
  n->b = b.node_;
  return ConstExpr(std::move(n));
}

ConstExpr operator-(const ConstExpr& a, const ConstExpr& b) {
  auto n = std::make_shared<ConstExpr::Node>();
  n->kind = ConstExpr::Kind::sub;
  n->a = a.node_;
  n->b = b.node_;
  return ConstExpr(std::move(n));
}

ConstExpr operator*(const ConstExpr& a, const ConstExpr& b) {
  auto n = std::make_shared<ConstExpr::Node>();
  n->kind = ConstExpr::Kind::mul;
  n->a = a.node_;
  n->b = b.node_;
  return ConstExpr(std::move(n));
}

ConstExpr operator/(const ConstExpr& a, const ConstExpr& b) {
  auto n = std::make_shared<ConstExpr::Node>();
  n->kind = ConstExpr::Kind::div;
  n->a = a.node_;
  n->b = b.node_;
  return ConstExpr(std::move(n));
}

bool operator==(const ConstExpr& x, const ConstExpr& y) {
  if (x.node_ == y.node_) return true;
  const auto& a = *x.node_;
  const auto& b = *y.node_;
  if (a.kind != b.kind) return false;
  using K = ConstExpr::Kind;
  switch (a.kind) {
    case K::literal: return a.q == b.q;
    case K::constant: return a.cid == b.cid;
    case K::var_z: return true;
    case K::neg: return x.lhs() == y.lhs();
    case K::func: return a.fn == b.fn && x.lhs() == y.lhs();
    case K::pow: return a.q == b.q && x.lhs() == y.lhs();
    default: return x.lhs() == y.lhs() && x.rhs() == y.rhs();
  }
}

bool ConstExpr::depends_on_z() const {
  switch (node_->kind) {
    case Kind::var_z: return true;
    case Kind::literal:
    case Kind::constant: return false;
    case Kind::neg:
    case Kind::func:
    case Kind::pow: return lhs().depends_on_z();
    default: return lhs().depends_on_z() || rhs().depends_on_z();
  }
}

int ConstExpr::max_digits() const {
  switch (node_->kind) {
    case Kind::var_z:
    case Kind::literal: return INT_MAX;
    case Kind::constant: return numkit::max_digits(node_->cid);
    case Kind::neg:
    case Kind::func:
    case Kind::pow: return lhs().max_digits();
    default: return std::min(lhs().max_digits(), rhs().max_digits());
  }
}

namespace {

// Binding strength used by the printer: 1 additive, 2 multiplicative, 3 unary minus,
// 4 power, 5 atom.
int strength(const ConstExpr& e) {
  using K = ConstExpr::Kind;
  switch (e.kind()) {
    case K::add:
    case K::sub: return 1;
    case K::mul:
    case K::div: return 2;
    case K::neg: return 3;
    case K::pow: return 4;
    case K::literal:
      if (!is_integer(e.value())) return 2;
      return e.value() < 0 ? 3 : 5;
    default: return 5;
  }
}

std::string wrap(const ConstExpr& e, int min_strength) {
  std::string s = e.to_string();
  return strength(e) >= min_strength ? s : "(" + s + ")";
}

}  // namespace

std::string ConstExpr::to_string() const {
  const auto& n = *node_;
  switch (n.kind) {
    case Kind::literal: return cfvar::to_string(n.q);
    case Kind::constant: return std::string(name(n.cid));
    case Kind::var_z: return "z";
    case Kind::neg: return "-" + wrap(lhs(), 3);
    case Kind::add: return wrap(lhs(), 1) + "+" + wrap(rhs(), 2);
    case Kind::sub: return wrap(lhs(), 1) + "-" + wrap(rhs(), 2);
    case Kind::mul: return wrap(lhs(), 2) + "*" + wrap(rhs(), 3);
    case Kind::div: return wrap(lhs(), 2) + "/" + wrap(rhs(), 3);
    case Kind::pow: {
      const std::string ex = (is_integer(n.q) && n.q >= 0) ? cfvar::to_string(n.q)
                                                            : "(" + cfvar::to_string(n.q) + ")";
      return wrap(lhs(), 5) + "^" + ex;
    }
    case Kind::func: return std::string(function_name(n.fn)) + "(" + lhs().to_string() + ")";
  }
  return {};
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  ConstExpr parse() {
    ConstExpr e = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("expression '" + std::string(s_) + "': " + msg + " at offset " +
                     std::to_string(i_));
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  ConstExpr expr() {
    ConstExpr e = term();
    for (;;) {
      if (eat('+'))
        e = e + term();
      else if (eat('-'))
        e = e - term();
      else
        return e;
    }
  }

  static bool is_int_literal(const ConstExpr& e) {
    return e.kind() == ConstExpr::Kind::literal && is_integer(e.value());
  }

  ConstExpr term() {
    ConstExpr e = unary();
    for (;;) {
      if (eat('*')) {
        e = e * unary();
      } else if (eat('/')) {
        ConstExpr d = unary();
        if (is_int_literal(e) && is_int_literal(d) && d.value() != 0)
          e = ConstExpr::literal(e.value() / d.value());
        else
          e = e / d;
      } else {
        return e;
      }
    }
  }

  ConstExpr unary() {
    if (eat('-')) {
      ConstExpr e = unary();
      if (is_int_literal(e)) return ConstExpr::literal(-e.value());
      return -e;
    }
    if (eat('+')) return unary();
    return power();
  }

  BigRational exponent() {
    ConstExpr e = unary_atom_for_exponent();
    if (e.kind() != ConstExpr::Kind::literal) fail("exponent must be a rational literal");
    return e.value();
  }

  ConstExpr unary_atom_for_exponent() {
    if (eat('-')) {
      ConstExpr e = unary_atom_for_exponent();
      if (e.kind() != ConstExpr::Kind::literal) fail("exponent must be a rational literal");
      return ConstExpr::literal(-e.value());
    }
    return primary();
  }

  ConstExpr power() {
    ConstExpr base = primary();
    if (eat('^')) return ConstExpr::pow(base, exponent());
    return base;
  }

  ConstExpr primary() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end");
    const char c = s_[i_];
    if (c == '(') {
      ++i_;
      ConstExpr e = expr();
      if (!eat(')')) fail("missing ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (i_ < s_.size() && (s_[i_] == '.' || s_[i_] == 'e' || s_[i_] == 'E'))
        fail("decimal literals are not exact; write p/q");
      return ConstExpr::literal(BigRational(BigInt(std::string(s_.substr(start, i_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = i_;
      while (i_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
        ++i_;
      const std::string_view id = s_.substr(start, i_ - start);
      skip();
      if (i_ < s_.size() && s_[i_] == '(') {
        ++i_;
        ConstExpr arg = expr();
        if (id == "pow") {
          if (!eat(',')) fail("pow takes two arguments");
          const BigRational ex = exponent();
          if (!eat(')')) fail("missing ')'");
          return ConstExpr::pow(arg, ex);
        }
        if (!eat(')')) fail("missing ')'");
        for (const auto& [f, n] : kFunctions)
          if (id == n) return ConstExpr::func(f, arg);
        fail("unknown function '" + std::string(id) + "'");
      }
      if (id == "z") return ConstExpr::z();
      if (const auto cid = constant_from_name(id)) return ConstExpr::constant(*cid);
      fail("unknown name '" + std::string(id) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

Real rational_power(const Real& x, const BigRational& q) {
  if (is_integer(q)) return pow(x, q.get_num().get_si());
  if (x.sign() > 0) return pow(x, Real(q, Precision(std::max(10, x.digits()))));
  if (x.is_zero()) {
    if (q < 0) throw DomainError("negative power of zero");
    return x;
  }
  if (q.get_den() % 2 == 0) throw DomainError("even root of a negative number");
  Real r = pow(abs(x), Real(q, Precision(std::max(10, x.digits()))));
  return q.get_num() % 2 == 0 ? r : -r;
}

Real apply(UnaryFn f, const Real& x, Precision w) {
  switch (f) {
    case UnaryFn::sqrt: return sqrt(x);
    case UnaryFn::exp: return exp(x);
    case UnaryFn::log: return log(x);
    case UnaryFn::sinh: return sinh(x);
    case UnaryFn::cosh: return cosh(x);
    case UnaryFn::sinhc: return x.is_zero() ? Real(1L, w) : sinh(x) / x;
    case UnaryFn::ellK: return elliptic_K(x, w);
    case UnaryFn::ellE: return elliptic_E(x, w);
  }
  return x;
}

Real eval(const ConstExpr& e, Precision w, const std::optional<Real>& z) {
  using K = ConstExpr::Kind;
  switch (e.kind()) {
    case K::literal: return Real(e.value(), w);
    case K::constant: {
      const int md = max_digits(e.constant_id());
      if (md < w.digits()) return constant_value(e.constant_id(), Precision(md)).rounded(w);
      return constant_value(e.constant_id(), w);
    }
    case K::var_z:
      if (!z) throw DomainError("expression depends on z but no value is bound");
      return z->rounded(w);
    case K::neg: return -eval(e.lhs(), w, z);
    case K::add: return eval(e.lhs(), w, z) + eval(e.rhs(), w, z);
    case K::sub: return eval(e.lhs(), w, z) - eval(e.rhs(), w, z);
    case K::mul: return eval(e.lhs(), w, z) * eval(e.rhs(), w, z);
    case K::div: {
      const Real d = eval(e.rhs(), w, z);
      if (d.is_zero()) throw DomainError("zero divisor in " + e.to_string());
      return eval(e.lhs(), w, z) / d;
    }
    case K::pow: return rational_power(eval(e.lhs(), w, z), e.exponent());
    case K::func: return apply(e.function(), eval(e.lhs(), w, z), w);
  }
  throw SpecError("corrupt expression node");
}

int depth(const ConstExpr& e) {
  using K = ConstExpr::Kind;
  switch (e.kind()) {
    case K::literal:
    case K::constant:
    case K::var_z: return 1;
    case K::neg:
    case K::pow:
    case K::func: return depth(e.lhs()) + 1;
    default: return std::max(depth(e.lhs()), depth(e.rhs())) + 1;
  }
}

}  // namespace

ConstExpr parse_const_expr(std::string_view text) { return Parser(text).parse(); }

Real eval_const_expr(const ConstExpr& e, Precision p, const std::optional<Real>& z) {
  const int md = e.max_digits();
  if (p.digits() > md)
    throw PrecisionUnavailable("expression " + e.to_string() + " supports at most " +
                               std::to_string(md) + " digits");
  const Precision w = p.with_guard(Precision::kGuardDigits + 2 * depth(e));
  return eval(e, w, z).rounded(p);
}

}  // namespace cfvar::numkit

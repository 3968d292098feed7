#include "cfvar/cfcore/poly2.hpp"

#include <algorithm>
#include <cctype>

#include "cfvar/errors.hpp"

namespace cfvar {

std::string ZValue::to_string(char param) const {
  return std::string(1, param) + (square ? "^2=" : "=") + cfvar::to_string(value);
}

Poly2::Poly2(const BigRational& c) {
  if (c != 0) c_ = {{c}};
}

Poly2 Poly2::n() { return from_grid({{}, {BigRational(1)}}); }

Poly2 Poly2::z() { return from_grid({{BigRational(0), BigRational(1)}}); }

Poly2 Poly2::from_grid(std::vector<std::vector<BigRational>> grid) {
  Poly2 p;
  p.c_ = std::move(grid);
  p.trim();
  return p;
}

void Poly2::trim() {
  for (auto& row : c_)
    while (!row.empty() && row.back() == 0) row.pop_back();
  while (!c_.empty() && c_.back().empty()) c_.pop_back();
}

BigRational Poly2::coeff(std::size_t i, std::size_t j) const {
  if (i >= c_.size() || j >= c_[i].size()) return 0;
  return c_[i][j];
}

int Poly2::degree_z() const {
  int d = c_.empty() ? -1 : 0;
  for (const auto& row : c_) d = std::max(d, static_cast<int>(row.size()) - 1);
  return d;
}

bool Poly2::even_in_z() const {
  for (const auto& row : c_)
    for (std::size_t j = 1; j < row.size(); j += 2)
      if (row[j] != 0) return false;
  return true;
}

Poly2 Poly2::operator-() const {
  Poly2 r = *this;
  for (auto& row : r.c_)
    for (auto& x : row) x = -x;
  return r;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    if (c_[i].size() < o.c_[i].size()) c_[i].resize(o.c_[i].size());
    for (std::size_t j = 0; j < o.c_[i].size(); ++j) c_[i][j] += o.c_[i][j];
  }
  trim();
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) { return *this += -o; }

Poly2& Poly2::operator*=(const Poly2& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<std::vector<BigRational>> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t k = 0; k < o.c_.size(); ++k) {
      auto& row = r[i + k];
      const std::size_t need = c_[i].size() + o.c_[k].size();
      if (need > 0 && row.size() < need - 1) row.resize(need - 1);
      for (std::size_t j = 0; j < c_[i].size(); ++j)
        for (std::size_t l = 0; l < o.c_[k].size(); ++l) row[j + l] += c_[i][j] * o.c_[k][l];
    }
  c_ = std::move(r);
  trim();
  return *this;
}

Poly2 Poly2::pow(unsigned k) const {
  Poly2 r(1L);
  for (unsigned i = 0; i < k; ++i) r *= *this;
  return r;
}

Poly2 Poly2::substitute_n(const BigRational& scale, const BigRational& shift) const {
  // Horner in the substituted linear form
  const Poly2 lin = Poly2::n() * Poly2(scale) + Poly2(shift);
  Poly2 r;
  for (std::size_t i = c_.size(); i-- > 0;) {
    r *= lin;
    std::vector<std::vector<BigRational>> row{c_[i]};
    r += from_grid(row);
  }
  return r;
}

Poly2 Poly2::at_n(const BigRational& n) const {
  std::vector<BigRational> acc;
  for (std::size_t i = c_.size(); i-- > 0;) {
    for (auto& x : acc) x *= n;
    if (acc.size() < c_[i].size()) acc.resize(c_[i].size());
    for (std::size_t j = 0; j < c_[i].size(); ++j) acc[j] += c_[i][j];
  }
  return from_grid({acc});
}

BigRational Poly2::eval(const BigRational& n, const std::optional<ZValue>& z) const {
  const Poly2 pz = at_n(n);
  if (pz.is_zero()) return 0;
  const auto& row = pz.c_[0];
  if (row.size() == 1) return row[0];
  if (!z) throw DomainError("polynomial depends on the parameter but no value is bound");
  BigRational acc = 0;
  if (z->square) {
    if (!pz.even_in_z())
      throw DomainError("odd power of the parameter with only its square bound");
    for (std::size_t j = row.size(); j-- > 0;) {
      if (j % 2 == 1) continue;
      acc = acc * z->value + row[j];
    }
    return acc;
  }
  for (std::size_t j = row.size(); j-- > 0;) acc = acc * z->value + row[j];
  return acc;
}

BigRational Poly2::content() const {
  BigInt g = 0, l = 1;
  for (const auto& row : c_)
    for (const auto& x : row) {
      if (x == 0) continue;
      g = gcd(g, BigInt(abs(x.get_num())));
      l = lcm(l, x.get_den());
    }
  if (g == 0) return 0;
  BigRational r(g, l);
  r.canonicalize();
  return r;
}

std::string Poly2::to_string(char param) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    for (std::size_t j = 0; j < c_[i].size(); ++j) {
      const BigRational& c = c_[i][j];
      if (c == 0) continue;
      const bool neg = c < 0;
      const BigRational a = abs(c);
      if (neg)
        out += "-";
      else if (!out.empty())
        out += "+";
      const bool has_var = i > 0 || j > 0;
      if (!is_integer(a))
        out += "(" + cfvar::to_string(a) + ")";
      else if (!(a == 1 && has_var))
        out += cfvar::to_string(a);
      if (i > 0) out += i == 1 ? std::string("n") : "n^" + std::to_string(i);
      if (j > 0) out += j == 1 ? std::string(1, param) : std::string(1, param) + "^" + std::to_string(j);
    }
  }
  return out;
}

namespace {

// Maps Unicode superscripts and minus signs onto ASCII.
std::string normalize(std::string_view in) {
  std::string out;
  bool in_sup = false;
  for (std::size_t i = 0; i < in.size();) {
    const auto u = static_cast<unsigned char>(in[i]);
    int sup = -1;
    std::size_t len = 1;
    char repl = 0;
    if (u == 0xC2 && i + 1 < in.size()) {
      const auto v = static_cast<unsigned char>(in[i + 1]);
      len = 2;
      if (v == 0xB2) sup = 2;
      else if (v == 0xB3) sup = 3;
      else if (v == 0xB9) sup = 1;
      else if (v == 0xB7) repl = '*';
      else repl = '?';
    } else if (u == 0xC3 && i + 1 < in.size() && static_cast<unsigned char>(in[i + 1]) == 0x97) {
      len = 2;
      repl = '*';
    } else if (u == 0xE2 && i + 2 < in.size()) {
      const auto v = static_cast<unsigned char>(in[i + 1]);
      const auto w = static_cast<unsigned char>(in[i + 2]);
      len = 3;
      if (v == 0x88 && w == 0x92) repl = '-';
      else if (v == 0x81 && w == 0xB0) sup = 0;
      else if (v == 0x81 && w >= 0xB4 && w <= 0xB9) sup = 4 + (w - 0xB4);
      else repl = '?';
    } else if (u >= 0x80) {
      repl = '?';
    }
    if (sup >= 0) {
      if (!in_sup) out += '^';
      out += static_cast<char>('0' + sup);
      in_sup = true;
    } else {
      in_sup = false;
      out += repl ? repl : in[i];
    }
    i += len;
  }
  return out;
}

class PolyParser {
 public:
  explicit PolyParser(std::string s) : s_(std::move(s)) {}

  ParsedPoly parse() {
    Poly2 p = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected character");
    return {p, param_};
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial '" + s_ + "': " + msg + " at offset " + std::to_string(i_));
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
  bool starts_factor() {
    skip();
    if (i_ >= s_.size()) return false;
    const char c = s_[i_];
    return c == '(' || c == 'n' || c == 'z' || c == 's' ||
           std::isdigit(static_cast<unsigned char>(c));
  }

  Poly2 expr() {
    Poly2 p;
    if (eat('-'))
      p = -term();
    else {
      eat('+');
      p = term();
    }
    for (;;) {
      if (eat('+'))
        p += term();
      else if (eat('-'))
        p -= term();
      else
        return p;
    }
  }

  Poly2 term() {
    Poly2 p = factor();
    for (;;) {
      if (eat('*')) {
        p *= factor();
      } else if (eat('/')) {
        const Poly2 d = factor();
        if (!(d.degree_n() <= 0 && d.degree_z() <= 0) || d.is_zero())
          fail("division only by nonzero constants");
        p *= Poly2(1 / d.coeff(0, 0));
      } else if (starts_factor()) {
        p *= factor();
      } else {
        return p;
      }
    }
  }

  Poly2 factor() {
    Poly2 b = base();
    if (eat('^')) {
      skip();
      const std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) fail("exponent must be a nonnegative integer");
      b = b.pow(static_cast<unsigned>(std::stoul(s_.substr(start, i_ - start))));
    }
    return b;
  }

  Poly2 base() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end");
    const char c = s_[i_];
    if (c == '(') {
      ++i_;
      Poly2 p = expr();
      if (!eat(')')) fail("missing ')'");
      return p;
    }
    if (c == 'n') {
      ++i_;
      return Poly2::n();
    }
    if (c == 'z' || c == 's') {
      if (param_ && *param_ != c) fail("two different parameters");
      param_ = c;
      ++i_;
      return Poly2::z();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (i_ < s_.size() && s_[i_] == '.') fail("decimal coefficients are not exact; write p/q");
      return Poly2(BigRational(BigInt(s_.substr(start, i_ - start))));
    }
    fail("unexpected character");
  }

  std::string s_;
  std::size_t i_ = 0;
  std::optional<char> param_;
};

}  // namespace

ParsedPoly parse_poly2(std::string_view text) { return PolyParser(normalize(text)).parse(); }

}  // namespace cfvar

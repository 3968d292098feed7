#include "cfvar/cfcore/cfspec.hpp"

#include "cfvar/errors.hpp"

namespace cfvar {

Poly2 CFSpec::coefficient(Part part, long n) const {
  if (part == Part::b) {
    if (n < 0) throw DomainError("b_n needs n >= 0");
    if (n < static_cast<long>(b_heads.size())) return b_heads[static_cast<std::size_t>(n)];
    return b_poly.at_n(n);
  }
  if (n < 1) throw DomainError("a_n needs n >= 1");
  if (n <= static_cast<long>(a_heads.size())) return a_heads[static_cast<std::size_t>(n - 1)];
  return a_poly.at_n(n - 1);
}

BigRational CFSpec::b(long n, const std::optional<ZValue>& z) const {
  return coefficient(Part::b, n).eval(0, z);
}

BigRational CFSpec::a(long n, const std::optional<ZValue>& z) const {
  return coefficient(Part::a, n).eval(0, z);
}

bool CFSpec::depends_on_param() const {
  if (b_poly.depends_on_z() || a_poly.depends_on_z()) return true;
  for (const auto& h : b_heads)
    if (h.depends_on_z()) return true;
  for (const auto& h : a_heads)
    if (h.depends_on_z()) return true;
  return false;
}

std::string CFSpec::to_string() const {
  const char p = param.value_or('z');
  auto list = [&](const std::vector<Poly2>& heads, const Poly2& poly) {
    std::string s = "[";
    for (const auto& h : heads) s += h.to_string(p) + ",";
    return s + poly.to_string(p) + "]";
  };
  return "[" + list(b_heads, b_poly) + "," + list(a_heads, a_poly) + "]";
}

BigRational materialize(const CFSpec& cf, long n, Part part, const std::optional<ZValue>& z) {
  return part == Part::a ? cf.a(n, z) : cf.b(n, z);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

// Splits on commas at bracket/paren depth zero.
std::vector<std::string_view> split_top(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth < 0) throw ParseError("unbalanced brackets in '" + std::string(s) + "'");
    if (c == ',' && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced brackets in '" + std::string(s) + "'");
  out.push_back(trim(s.substr(start)));
  return out;
}

std::string_view strip_brackets(std::string_view s, std::string_view what) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError(std::string(what) + " must be a bracketed list: '" + std::string(s) + "'");
  return s.substr(1, s.size() - 2);
}

}  // namespace

CFSpec parse_cfspec(std::string_view text) {
  const auto lists = split_top(strip_brackets(text, "continued fraction"));
  if (lists.size() != 2) throw ParseError("continued fraction needs exactly two lists");
  CFSpec cf;
  auto absorb = [&](const ParsedPoly& pp) {
    if (!pp.param) return;
    if (cf.param && *cf.param != *pp.param) throw ParseError("mixed parameters z and s");
    cf.param = pp.param;
  };
  auto read = [&](std::string_view list, std::vector<Poly2>& heads, Poly2& poly, const char* which) {
    const auto items = split_top(strip_brackets(list, which));
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (items[i].empty()) throw ParseError(std::string("empty entry in ") + which + " list");
      const ParsedPoly pp = parse_poly2(items[i]);
      absorb(pp);
      if (i + 1 < items.size()) {
        if (!pp.poly.free_of_n())
          throw ParseError(std::string(which) + " head depends on n: '" + std::string(items[i]) + "'");
        heads.push_back(pp.poly);
      } else {
        poly = pp.poly;
      }
    }
  };
  read(lists[0], cf.b_heads, cf.b_poly, "b");
  read(lists[1], cf.a_heads, cf.a_poly, "a");
  return cf;
}

}  // namespace cfvar

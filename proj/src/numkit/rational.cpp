#include "cfvar/numkit/rational.hpp"

#include <cctype>

#include "cfvar/errors.hpp"

namespace cfvar {
namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw ParseError("malformed rational: '" + std::string(whole) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      if (text[j] == '.' || text[j] == 'e' || text[j] == 'E')
        throw ParseError("decimal values are not accepted for exact parameters: '" +
                         std::string(whole) + "' (use p/q)");
      throw ParseError("malformed rational: '" + std::string(whole) + "'");
    }
  }
  BigInt v(std::string(text.substr(i)), 10);
  return neg ? BigInt(-v) : v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_integer(t, text));
  const BigInt num = parse_integer(trim(t.substr(0, slash)), text);
  const std::string_view den_text = trim(t.substr(slash + 1));
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
    throw ParseError("denominator must be unsigned: '" + std::string(text) + "'");
  const BigInt den = parse_integer(den_text, text);
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const BigRational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigRational pow(const BigRational& q, long exp) {
  if (exp < 0) {
    if (q == 0) throw DomainError("negative power of zero");
    BigRational inv = 1 / q;
    return pow(inv, -exp);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(exp));
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(exp));
  return BigRational(num, den);
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

long valuation2(const BigRational& q) {
  if (q == 0) throw DomainError("2-adic valuation of zero");
  const long vn = static_cast<long>(mpz_scan1(q.get_num_mpz_t(), 0));
  const long vd = static_cast<long>(mpz_scan1(q.get_den_mpz_t(), 0));
  return vn - vd;
}

}  // namespace cfvar

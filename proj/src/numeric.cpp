#include "taquin/numeric.hpp"

#include <stdexcept>

namespace taquin {

BigInt falling_factorial(long n, long k) {
  if (n < 0 || k < 0) throw std::invalid_argument("falling_factorial: negative argument");
  if (k > n) return 0;
  BigInt out = 1;
  for (long i = 0; i < k; ++i) out *= (n - i);
  return out;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt out = 1;
  for (long i = 1; i <= k; ++i) {
    out *= (n - k + i);
    out /= i;
  }
  return out;
}

std::string to_string(const BigInt& z) { return z.str(); }

std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

BigInt parse_integer(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer");
  std::size_t i = 0;
  bool negative = false;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("bad integer: " + std::string(s));
  BigInt out = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer: " + std::string(s));
    out = out * 10 + (s[i] - '0');
  }
  return negative ? BigInt(-out) : out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const BigInt num = parse_integer(text.substr(0, slash));
  const BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  return Rational(num, den);
}

}  // namespace taquin

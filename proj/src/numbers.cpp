#include "dpfrac/numbers.hpp"

#include <algorithm>
#include <cctype>

namespace dpfrac {

BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;  // exact: r is always an integer binomial prefix
  }
  return r;
}

BigInt factorial(long long n) {
  BigInt r = 1;
  for (long long i = 2; i <= n; ++i) r *= i;
  return r;
}

std::string rational_to_string(const Rational& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  bool neg = num < 0;
  if (neg) num = -num;

  // Count the 2s and 5s in the denominator; anything else means no
  // terminating decimal exists.
  BigInt d = den;
  int twos = 0, fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  if (d != 1) {
    return (neg ? "-" : "") + num.str() + "/" + den.str();
  }
  int shift = std::max(twos, fives);
  BigInt scaled = num;
  for (int i = 0; i < shift - twos; ++i) scaled *= 2;
  for (int i = 0; i < shift - fives; ++i) scaled *= 5;
  std::string digits = scaled.str();
  std::string out;
  if (shift == 0) {
    out = digits;
  } else {
    if (static_cast<int>(digits.size()) <= shift)
      digits.insert(0, shift - digits.size() + 1, '0');
    out = digits.substr(0, digits.size() - shift) + "." + digits.substr(digits.size() - shift);
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return (neg ? "-" : "") + out;
}

Rational rational_from_string(const std::string& s) {
  if (s.empty()) fail(Err::parse_error, "empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    try {
      BigInt num(s.substr(0, slash));
      BigInt den(s.substr(slash + 1));
      if (den == 0) fail(Err::parse_error, "zero denominator in '" + s + "'");
      return Rational(num, den);
    } catch (const std::exception&) {
      fail(Err::parse_error, "bad rational literal '" + s + "'");
    }
  }
  std::string t = s;
  bool neg = false;
  if (t[0] == '+' || t[0] == '-') {
    neg = t[0] == '-';
    t = t.substr(1);
  }
  long long exp10 = 0;
  auto e = t.find_first_of("eE");
  if (e != std::string::npos) {
    try {
      size_t used = 0;
      exp10 = std::stoll(t.substr(e + 1), &used);
      if (used != t.size() - e - 1) throw std::invalid_argument(s);
    } catch (...) {
      fail(Err::parse_error, "bad exponent in '" + s + "'");
    }
    t = t.substr(0, e);
  }
  auto dot = t.find('.');
  std::string ip = dot == std::string::npos ? t : t.substr(0, dot);
  std::string fp = dot == std::string::npos ? "" : t.substr(dot + 1);
  if (ip.empty() && fp.empty()) fail(Err::parse_error, "bad rational literal '" + s + "'");
  for (char c : ip + fp)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      fail(Err::parse_error, "bad rational literal '" + s + "'");
  BigInt num(ip.empty() ? "0" : ip);
  BigInt den = 1;
  for (char c : fp) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  for (long long i = 0; i < exp10; ++i) num *= 10;
  for (long long i = 0; i > exp10; --i) den *= 10;
  Rational q(num, den);
  return neg ? -q : q;
}

bool checked_pow_u64(std::uint64_t base, unsigned exp, std::uint64_t cap, std::uint64_t& out) {
  out = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && out > cap / base) return false;
    out *= base;
    if (out > cap) return false;
  }
  return true;
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fnv1a64_hex(const std::string& s) {
  static const char* hex = "0123456789abcdef";
  std::uint64_t h = fnv1a64(s);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace dpfrac

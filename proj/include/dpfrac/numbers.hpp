#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "dpfrac/error.hpp"

namespace dpfrac {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
// 50 significant decimal digits; used only where irrational powers force
// floating arithmetic. Everything countable stays exact.
using Float50 = boost::multiprecision::cpp_bin_float_50;

BigInt binomial(long long n, long long k);
BigInt factorial(long long n);

inline Float50 to_float50(const Rational& q) {
  return Float50(boost::multiprecision::numerator(q)) /
         Float50(boost::multiprecision::denominator(q));
}

// Exact decimal expansion when the reduced denominator is 2^a * 5^b
// ("2.025", "2.8"), otherwise "num/den".
std::string rational_to_string(const Rational& q);

// Accepts "15", "2.025", "-0.5", "10/3".
Rational rational_from_string(const std::string& s);

// Saturating-checked product; returns false on overflow past `cap`.
bool checked_pow_u64(std::uint64_t base, unsigned exp, std::uint64_t cap, std::uint64_t& out);

std::uint64_t fnv1a64(const std::string& s);
std::string fnv1a64_hex(const std::string& s);

}  // namespace dpfrac

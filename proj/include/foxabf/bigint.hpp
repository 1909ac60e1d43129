#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace foxabf {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

inline std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace foxabf

#ifndef TRIGPROD_BIGINT_HPP
#define TRIGPROD_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <limits>

namespace trigprod {

using BigInt = boost::multiprecision::cpp_int;

/// Natural log of |v|; -inf for v == 0. Works far beyond double range.
inline double log_abs(const BigInt& v) {
  if (v == 0) return -std::numeric_limits<double>::infinity();
  BigInt a = boost::multiprecision::abs(v);
  const unsigned bits = boost::multiprecision::msb(a);  // floor(log2 a)
  if (bits <= 960) {
    return std::log(a.convert_to<double>());
  }
  const unsigned shift = bits - 900;
  const double top = BigInt(a >> shift).convert_to<double>();
  return std::log(top) + static_cast<double>(shift) * 0.69314718055994530942;
}

}  // namespace trigprod

#endif

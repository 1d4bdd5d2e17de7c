#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace symmatch {

using Ratio = boost::rational<std::int64_t>;

// "17/5", or just the numerator when the denominator is 1.
inline std::string to_string(const Ratio& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline double to_double(const Ratio& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace symmatch

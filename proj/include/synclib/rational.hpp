#pragma once

#include <string>

#include <boost/rational.hpp>

namespace synclib {

// Exact rational arithmetic for bound formulas and headline constants.
using Rat = boost::rational<long long>;

inline std::string to_string(const Rat& value) {
  if (value.denominator() == 1) {
    return std::to_string(value.numerator());
  }
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

}  // namespace synclib

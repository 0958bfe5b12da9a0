/*
  rational.hpp

  Exact arithmetic aliases. All linear algebra in this project is done
  over Z or Q with GMP-backed integers and rationals; nothing is ever
  evaluated in floating point.
*/

#ifndef FLAGH2_RATIONAL_HPP
#define FLAGH2_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace flagh2 {

using Int = mpz_class;
using Rat = mpq_class;

inline std::string to_string(const Int& x) { return x.get_str(); }

inline std::string to_string(const Rat& x) {
  Rat y(x);
  y.canonicalize();
  return y.get_str();
}

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

}  // namespace flagh2

#endif

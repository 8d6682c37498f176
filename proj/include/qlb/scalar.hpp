#pragma once
#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qlb {

// Exact rationals. mpq_class keeps results of arithmetic canonical.
using Scalar = mpq_class;

inline Scalar rational(long num, long den = 1) {
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

// Accepts "p", "+p", "-p", "p/q" with q > 0. Anything else throws
// std::invalid_argument (including a zero denominator).
Scalar parse_scalar(std::string_view text);

// "p" or "p/q", reduced.
std::string to_string(const Scalar& s);

}  // namespace qlb

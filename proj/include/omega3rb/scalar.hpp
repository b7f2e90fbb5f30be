#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace omega3rb {

/// Exact element of the ground field. GMP keeps it canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Scalar = mpq_class;

/// Index of a basis generator L_m.
using Index = std::int64_t;

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "p", "-p" or "p/q". Anything that looks like a floating point
/// literal is rejected.
Scalar parse_scalar(std::string_view text);

/// Parses a signed decimal integer, rejecting trailing junk.
Index parse_index(std::string_view text);

std::string to_string(const Scalar& s);

inline Scalar make_scalar(long num, long den = 1) {
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

}  // namespace omega3rb

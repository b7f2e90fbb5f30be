#pragma once

#include <cstddef>
#include <string>

#include "omega3rb/scalar.hpp"

namespace omega3rb {

/// Closed integer interval [lo, hi].
struct Window {
  Index lo = 0;
  Index hi = -1;

  static Window symmetric(Index radius) { return {-radius, radius}; }

  bool contains(Index i) const noexcept { return lo <= i && i <= hi; }
  bool empty() const noexcept { return hi < lo; }
  std::size_t size() const noexcept { return empty() ? 0 : static_cast<std::size_t>(hi - lo + 1); }
  Window shrink(Index margin) const noexcept { return {lo + margin, hi - margin}; }

  friend bool operator==(const Window&, const Window&) = default;
};

inline std::string to_string(const Window& w) {
  return "[" + std::to_string(w.lo) + "," + std::to_string(w.hi) + "]";
}

}  // namespace omega3rb

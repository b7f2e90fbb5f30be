#pragma once

#include <map>
#include <string>

#include "omega3rb/scalar.hpp"

namespace omega3rb {

/// Finite linear combination of generators L_m of A_omega.
///
/// Stored sparsely; a zero coefficient is never kept, so two elements are
/// equal exactly when their term maps are equal.
class Element {
 public:
  using Terms = std::map<Index, Scalar>;

  Element() = default;

  /// c * L_m
  static Element generator(Index m, const Scalar& c = Scalar(1));

  void add_term(Index m, const Scalar& c);

  Scalar coeff(Index m) const;
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Scalar& c);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Scalar& c, Element a) { return a *= c; }
  friend Element operator-(Element a) { return a *= Scalar(-1); }
  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// "0" for the zero element, otherwise "c*L_i" terms in ascending index
/// order joined by " + ".
std::string to_string(const Element& x);

}  // namespace omega3rb

#pragma once

#include <array>
#include <cstdint>

#include "omega3rb/element.hpp"

namespace omega3rb {

/// Integer value of D(l,m,n): the determinant with rows
/// ((-1)^l, (-1)^m, (-1)^n), (1, 1, 1), (l, m, n), by cofactor expansion
/// along the first row.
std::int64_t det3_int(Index l, Index m, Index n) noexcept;

inline Scalar det3(Index l, Index m, Index n) {
  return Scalar(static_cast<long>(det3_int(l, m, n)));
}

/// True iff two indices coincide or all three share a parity.
bool det3_vanishes_closed_form(Index l, Index m, Index n) noexcept;

/// [L_l, L_m, L_n] = D(l,m,n) L_{l+m+n-1}
Element bracket_generators(Index l, Index m, Index n);

/// Trilinear extension of the generator bracket.
Element bracket(const Element& x, const Element& y, const Element& z);

/// [[x1,x2,x3],y2,y3] - [[x1,y2,y3],x2,x3] - [[x2,y2,y3],x3,x1] - [[x3,y2,y3],x1,x2]
Element fundamental_identity_residual(const Element& x1, const Element& x2, const Element& x3,
                                      const Element& y2, const Element& y3);

/// A triple (l,m,n) with l+m+n-1 = t and D(l,m,n) != 0. Uses (0,1,t) unless
/// that determinant vanishes, which only happens for t = 0 and t = 1.
std::array<Index, 3> bracket_generates(Index t);

}  // namespace omega3rb

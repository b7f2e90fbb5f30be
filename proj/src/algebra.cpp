#include "omega3rb/algebra.hpp"

namespace omega3rb {

namespace {

constexpr std::int64_t parity_sign(Index i) noexcept { return (i % 2 == 0) ? 1 : -1; }

}  // namespace

std::int64_t det3_int(Index l, Index m, Index n) noexcept {
  return parity_sign(l) * (n - m) - parity_sign(m) * (n - l) + parity_sign(n) * (m - l);
}

bool det3_vanishes_closed_form(Index l, Index m, Index n) noexcept {
  if (l == m || l == n || m == n) return true;
  const bool pl = l % 2 == 0, pm = m % 2 == 0, pn = n % 2 == 0;
  return pl == pm && pm == pn;
}

Element bracket_generators(Index l, Index m, Index n) {
  return Element::generator(l + m + n - 1, det3(l, m, n));
}

Element bracket(const Element& x, const Element& y, const Element& z) {
  Element out;
  for (const auto& [l, a] : x.terms())
    for (const auto& [m, b] : y.terms())
      for (const auto& [n, c] : z.terms()) {
        const std::int64_t d = det3_int(l, m, n);
        if (d == 0) continue;
        out.add_term(l + m + n - 1, a * b * c * Scalar(static_cast<long>(d)));
      }
  return out;
}

Element fundamental_identity_residual(const Element& x1, const Element& x2, const Element& x3,
                                      const Element& y2, const Element& y3) {
  Element r = bracket(bracket(x1, x2, x3), y2, y3);
  r -= bracket(bracket(x1, y2, y3), x2, x3);
  r -= bracket(bracket(x2, y2, y3), x3, x1);
  r -= bracket(bracket(x3, y2, y3), x1, x2);
  return r;
}

std::array<Index, 3> bracket_generates(Index t) {
  if (det3_int(0, 1, t) != 0) return {0, 1, t};
  if (t == 0) return {1, 2, -2};
  return {2, 3, -3};
}

}  // namespace omega3rb

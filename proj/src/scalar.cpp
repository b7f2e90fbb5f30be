#include "omega3rb/scalar.hpp"

#include <cctype>

namespace omega3rb {

namespace {

bool is_integer_literal(std::string_view t) {
  if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
  if (t.empty()) return false;
  for (char c : t)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string trimmed(std::string_view t) {
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  return std::string(t);
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const std::string t = trimmed(text);
  const auto slash = t.find('/');
  const std::string num = t.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw ParseError("not an exact rational literal: '" + t + "' (expected p or p/q)");
  mpz_class n(num.front() == '+' ? num.substr(1) : num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw ParseError("zero denominator in '" + t + "'");
  Scalar s(n, d);
  s.canonicalize();
  return s;
}

Index parse_index(std::string_view text) {
  const std::string t = trimmed(text);
  if (!is_integer_literal(t)) throw ParseError("not an integer: '" + t + "'");
  try {
    return static_cast<Index>(std::stoll(t));
  } catch (const std::out_of_range&) {
    throw ParseError("integer out of range: '" + t + "'");
  }
}

std::string to_string(const Scalar& s) { return s.get_str(10); }

}  // namespace omega3rb

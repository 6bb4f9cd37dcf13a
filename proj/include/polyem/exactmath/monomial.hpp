#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace polyem::exact {

/// Maximum number of variables a polynomial may use (parameters or dual coordinates).
inline constexpr int kMaxVars = 8;

/// Exponent vector of a monomial in at most kMaxVars variables.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};

  int degree() const;
  bool is_one() const;
  /// Highest variable index with a nonzero exponent, or -1 for the unit monomial.
  int max_var() const;
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Requires divides(*this, other) in the reverse sense: other | *this.
  Monomial operator/(const Monomial& other) const;

  static Monomial variable(int index, int power = 1);

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic comparison (x1 > x2 > ...): negative, zero or positive.
int grlex_compare(const Monomial& a, const Monomial& b);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

/// Renders e.g. "d1^2*d2"; the unit monomial renders as the empty string.
std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names);

/// Name of variable `index`; falls back to "p<index+1>" when `names` is too short.
std::string variable_name(const std::vector<std::string>& names, int index);

}  // namespace polyem::exact

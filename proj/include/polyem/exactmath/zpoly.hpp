#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyem/exactmath/monomial.hpp"

namespace polyem::exact {

/// Sparse multivariate polynomial with integer coefficients.
///
/// Terms are kept sorted by decreasing graded-lexicographic order with no
/// zero coefficients, so structural equality is polynomial equality.
class ZPoly {
 public:
  using Term = std::pair<Monomial, mpz_class>;

  ZPoly() = default;
  explicit ZPoly(const mpz_class& c);
  explicit ZPoly(long c) : ZPoly(mpz_class(c)) {}
  static ZPoly variable(int index);
  static ZPoly term(const Monomial& m, const mpz_class& c);
  /// Builds from unsorted terms; duplicates are merged.
  static ZPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Constant value; requires is_constant().
  mpz_class constant_value() const;
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  int total_degree() const;
  int degree_in(int var) const;
  int max_var() const;

  ZPoly operator-() const;
  friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  ZPoly scaled(const mpz_class& c) const;
  ZPoly times_monomial(const Monomial& m) const;

  /// Quotient if `d` divides *this exactly over the integers.
  std::optional<ZPoly> divide_exact(const ZPoly& d) const;
  /// Positive gcd of the coefficients (0 for the zero polynomial).
  mpz_class content() const;

  /// Coefficients with respect to variable `var`: power -> coefficient polynomial.
  std::map<int, ZPoly> coefficients_in(int var) const;
  static ZPoly from_coefficients(int var, const std::map<int, ZPoly>& coeffs);

  friend bool operator==(const ZPoly&, const ZPoly&);
  /// Total order on representations, used for deterministic sorting only.
  friend std::strong_ordering structural_compare(const ZPoly& a, const ZPoly& b);

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::vector<Term> terms_;
};

/// Greatest common divisor, normalized to a positive leading coefficient.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

}  // namespace polyem::exact

#pragma once

#include <gmpxx.h>

#include <compare>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "polyem/exactmath/zpoly.hpp"

namespace polyem::exact {

/// Reduced fraction of integer polynomials in the symbolic parameters.
struct RatFunc {
  ZPoly num;
  ZPoly den;
};

/// Element of Q or of Q(p1, ..., pk).
///
/// Rationals take an mpq fast path; anything involving a parameter is kept as
/// a canonical RatFunc (coprime parts, denominator with positive leading
/// coefficient). A RatFunc whose parts are both constant is demoted back to a
/// rational, so equality is structural. Parameters are referred to by index;
/// names only matter for printing and parsing.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  Scalar(mpq_class v) : q_(std::move(v)) { q_.canonicalize(); }  // NOLINT
  Scalar(const mpz_class& v) : q_(v) {}                           // NOLINT
  Scalar(long num, long den);

  /// num/den reduced to canonical form; den must be nonzero.
  static Scalar fraction(const ZPoly& num, const ZPoly& den);
  static Scalar parameter(int index);

  bool is_zero() const { return !f_ && q_ == 0; }
  bool is_one() const { return !f_ && q_ == 1; }
  bool is_rational() const { return !f_; }
  /// Requires is_rational().
  const mpq_class& rational() const;
  /// Numerator / denominator as integer polynomials (also for rationals).
  ZPoly numerator() const;
  ZPoly denominator() const;
  /// Highest parameter index used, or -1.
  int max_parameter() const;

  Scalar operator-() const;
  Scalar inverse() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  Scalar pow(int e) const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Deterministic total order on representations (not a field order).
  friend std::strong_ordering structural_compare(const Scalar& a, const Scalar& b);

  /// Substitutes rational values for all parameters; nullopt if the
  /// denominator vanishes there.
  std::optional<mpq_class> evaluate(const std::vector<mpq_class>& values) const;

  /// "p/q" for rationals, "(num)/(den)" style for rational functions.
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  mpq_class q_;
  std::shared_ptr<const RatFunc> f_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Evaluates an integer polynomial at rational parameter values.
mpq_class evaluate(const ZPoly& p, const std::vector<mpq_class>& values);

}  // namespace polyem::exact

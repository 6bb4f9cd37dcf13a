#pragma once

#include <map>
#include <string>
#include <vector>

#include "polyem/exactmath/monomial.hpp"
#include "polyem/exactmath/scalar.hpp"

namespace polyem::exact {

/// Sparse polynomial in coordinate variables with Scalar coefficients.
class SPoly {
 public:
  using Map = std::map<Monomial, Scalar, GrlexGreater>;

  SPoly() = default;
  explicit SPoly(const Scalar& c);
  static SPoly variable(int index);
  static SPoly term(const Monomial& m, const Scalar& c);
  /// Linear form sum_i coeffs[i] * x_i.
  static SPoly linear(const std::vector<Scalar>& coeffs);

  bool is_zero() const { return terms_.empty(); }
  const Map& terms() const { return terms_; }
  Scalar coefficient(const Monomial& m) const;
  int total_degree() const;

  SPoly operator-() const;
  friend SPoly operator+(const SPoly& a, const SPoly& b);
  friend SPoly operator-(const SPoly& a, const SPoly& b);
  friend SPoly operator*(const SPoly& a, const SPoly& b);
  SPoly& operator+=(const SPoly& o);
  SPoly scaled(const Scalar& c) const;
  void add_term(const Monomial& m, const Scalar& c);

  /// Partial derivative d^alpha.
  SPoly derivative(const Monomial& alpha) const;
  /// Value at a point (coordinates as Scalars).
  Scalar evaluate(const std::vector<Scalar>& point) const;
  /// Substitutes x_i -> sum_j m[i][j] y_j.
  SPoly linear_substitute(const std::vector<std::vector<Scalar>>& m) const;

  friend bool operator==(const SPoly& a, const SPoly& b);

  std::string to_string(const std::vector<std::string>& var_names,
                        const std::vector<std::string>& param_names = {}) const;

 private:
  Map terms_;
};

}  // namespace polyem::exact

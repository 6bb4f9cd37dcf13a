#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "polyem/exactmath/monomial.hpp"
#include "polyem/exactmath/scalar.hpp"
#include "polyem/exactmath/spoly.hpp"

namespace polyem::exact {

struct SeriesLayout;

/// Truncated power series in n variables, stored densely up to total degree
/// `order`. Coefficients of degree <= valid_order are exact; the rest are
/// storage only.
class TruncSeries {
 public:
  TruncSeries(int nvars, int order);
  static TruncSeries constant(int nvars, int order, const Scalar& c);
  static TruncSeries from_poly(const SPoly& p, int nvars, int order);
  /// sum_i v[i] * xi_i
  static TruncSeries linear_form(const std::vector<Scalar>& v, int order);

  int nvars() const { return nvars_; }
  int order() const { return order_; }
  int valid_order() const { return valid_; }
  std::size_t size() const { return coeffs_.size(); }

  const Scalar& coefficient(const Monomial& m) const;
  void set_coefficient(const Monomial& m, const Scalar& c);
  const Scalar& constant_term() const { return coeffs_[0]; }
  /// Monomial stored at flat index i (ordered by total degree).
  const Monomial& monomial_at(std::size_t i) const;
  const Scalar& at(std::size_t i) const { return coeffs_[i]; }

  bool is_zero_up_to(int degree) const;

  TruncSeries operator-() const;
  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  TruncSeries scaled(const Scalar& c) const;
  /// Multiplies by the linear form sum_i v[i] xi_i (degrees beyond order are dropped).
  TruncSeries times_linear_form(const std::vector<Scalar>& v) const;
  /// Lowers the storage bound (and valid order if needed).
  TruncSeries truncated(int order) const;
  /// Marks only degrees <= v as exact.
  TruncSeries with_valid_order(int v) const;

  /// The part of degree <= valid_order as a sparse polynomial.
  SPoly to_poly() const;
  std::string to_string(const std::vector<std::string>& var_names,
                        const std::vector<std::string>& param_names = {}) const;

 private:
  int nvars_;
  int order_;
  int valid_;
  std::shared_ptr<const SeriesLayout> layout_;
  std::vector<Scalar> coeffs_;

  friend TruncSeries series_invert(const TruncSeries& s);
  friend TruncSeries divide_by_linear_form(const TruncSeries& s, const std::vector<Scalar>& v);
};

enum class SeriesOp { add, mul };

/// lhs op rhs; throws DomainError on mismatched variable sets.
TruncSeries series_arith(const TruncSeries& lhs, const TruncSeries& rhs, SeriesOp op);

/// Multiplicative inverse; requires a nonzero constant term.
TruncSeries series_invert(const TruncSeries& s);

/// Exact quotient by <xi, v>; throws NonDivisibleError if a remainder appears
/// in certified degrees. Order and valid order both drop by one.
TruncSeries divide_by_linear_form(const TruncSeries& s, const std::vector<Scalar>& v);

/// sum_k c[k] * l(xi)^k with l = <xi, v>, evaluated by Horner's rule.
TruncSeries compose_with_linear_form(const std::vector<mpq_class>& c,
                                     const std::vector<Scalar>& v, int order);

/// Coefficients of z/(e^z - 1) = sum B_k z^k / k!, k = 0..n.
const std::vector<mpq_class>& todd_coefficients(int n);
/// Coefficients of e^z, k = 0..n.
const std::vector<mpq_class>& exp_coefficients(int n);

/// B(z) = 1/(1-e^z) + 1/z = 1/2 - z/12 + z^3/720 - ..., one variable.
TruncSeries bernoulli_series(int order);

}  // namespace polyem::exact

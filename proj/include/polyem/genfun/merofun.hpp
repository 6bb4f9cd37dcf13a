#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "polyem/exactmath/series.hpp"
#include "polyem/exactmath/spoly.hpp"
#include "polyem/lattice/lattice.hpp"

namespace polyem::genfun {

using exact::Scalar;
using exact::SPoly;
using exact::TruncSeries;
using lattice::RatVector;
using lattice::SMatrix;
using lattice::SVector;

std::strong_ordering structural_compare(const SVector& a, const SVector& b);

struct SVectorLess {
  bool operator()(const SVector& a, const SVector& b) const { return structural_compare(a, b) < 0; }
};

/// coeff * e^<xi,point> / (prod <xi,v> * prod (1 - e^<xi,w>)).
struct Term {
  Scalar coeff;
  SVector point;
  std::vector<SVector> lin_dens;
  std::vector<SVector> exp_dens;
};

/// Finite sum of exponential-rational terms on V* (dimension n).
class MeroFun {
 public:
  explicit MeroFun(std::size_t n = 0) : n_(n) {}
  static MeroFun constant(std::size_t n, const Scalar& c);
  /// e^<xi, a>
  static MeroFun exponential(const SVector& a);
  static MeroFun exponential(const RatVector& a) { return exponential(lattice::to_scalars(a)); }

  std::size_t dim() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(Term t);

  MeroFun operator-() const;
  friend MeroFun operator+(const MeroFun& a, const MeroFun& b);
  friend MeroFun operator-(const MeroFun& a, const MeroFun& b);
  friend MeroFun operator*(const MeroFun& a, const MeroFun& b);
  MeroFun& operator+=(const MeroFun& o);
  MeroFun& operator-=(const MeroFun& o);
  MeroFun scaled(const Scalar& c) const;
  /// e^<xi, a> * f
  MeroFun times_exp(const SVector& a) const;

  /// Normalizes denominators (linear forms scaled to leading entry 1,
  /// exponential factors oriented), sorts, merges equal terms, drops zeros.
  MeroFun canonical() const;

  /// Evaluation at a rational point xi and parameter values; long double
  /// precision (for numeric cross-checks only).
  long double evaluate(const RatVector& xi, const std::vector<mpq_class>& params = {}) const;

  std::string to_string(const std::vector<std::string>& var_names = {},
                        const std::vector<std::string>& param_names = {}) const;

 private:
  std::size_t n_;
  std::vector<Term> terms_;
};

/// Sum of p_a(xi) e^<xi,a> over distinct points a.
class ExpPoly {
 public:
  explicit ExpPoly(std::size_t n = 0) : n_(n) {}
  std::size_t dim() const { return n_; }
  const std::map<SVector, SPoly, SVectorLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const SVector& point, const SPoly& p);
  friend ExpPoly operator+(const ExpPoly& a, const ExpPoly& b);
  ExpPoly times_linear_form(const SVector& v) const;
  /// Multiplies by (1 - e^<xi,w>).
  ExpPoly times_one_minus_exp(const SVector& w) const;
  friend bool operator==(const ExpPoly& a, const ExpPoly& b) { return a.terms_ == b.terms_; }

 private:
  std::size_t n_;
  std::map<SVector, SPoly, SVectorLess> terms_;
};

/// Numerator of f over the product of all its (canonical) denominators.
/// Returns the numerator together with the denominator factor lists.
struct ClearedFun {
  ExpPoly numerator;
  std::vector<SVector> lin_dens;
  std::vector<SVector> exp_dens;
};
ClearedFun clear_denominators(const MeroFun& f);

/// Finite exponential sum as a MeroFun (no denominators).
MeroFun from_exppoly(const ExpPoly& p);

/// Exact equality of meromorphic functions via common denominators.
bool canonical_equal(const MeroFun& f, const MeroFun& g);

/// Taylor coefficients at 0 up to total degree `order`; throws
/// GenuinePoleError if f is not regular at the origin.
TruncSeries taylor_at_zero(const MeroFun& f, int order);

/// Residue along <xi, v1> = 0, i.e. (<xi,v1> f) restricted to the hyperplane,
/// written in the dual coordinates of the quotient lattice Λ/(Λ ∩ R v1).
/// Supports terms with at most a simple pole along the hyperplane.
MeroFun residue_along(const MeroFun& f, const RatVector& v1, const lattice::LatticeContext& lat);

/// (pullback f)(xi) = f(pi(xi)) where <pi(xi), w> = <xi, T w>; T is n x m.
MeroFun pullback(const MeroFun& f, const SMatrix& t);

}  // namespace polyem::genfun

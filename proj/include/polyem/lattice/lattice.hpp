#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "polyem/exactmath/scalar.hpp"
#include "polyem/lattice/matrix.hpp"

namespace polyem::lattice {

using exact::Scalar;
using RatVector = std::vector<mpq_class>;
using SVector = std::vector<Scalar>;
using QMatrix = Matrix<mpq_class>;
using SMatrix = Matrix<Scalar>;

// ---- vector helpers -------------------------------------------------------

RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator*(const mpq_class& s, const RatVector& v);
mpq_class dot(const RatVector& a, const RatVector& b);
Scalar dot(const SVector& a, const SVector& b);
bool is_zero_vector(const RatVector& v);
bool is_integral(const RatVector& v);
/// Positive multiple of v with coprime integer entries; v must be nonzero.
RatVector primitive(const RatVector& v);
SVector to_scalars(const RatVector& v);
/// Rational vector of a Scalar vector; throws if an entry is symbolic.
RatVector to_rationals(const SVector& v);
std::string to_string(const RatVector& v);

/// Rows as vectors -> matrix with those vectors as rows (n given for empty lists).
QMatrix rows_matrix(const std::vector<RatVector>& rows, std::size_t n);
/// Basis (as rows of an RREF) of the span of the vectors.
std::vector<RatVector> span_basis(const std::vector<RatVector>& vs, std::size_t n);
/// Basis of the orthogonal complement {w : <w, v> = 0 for all v}.
std::vector<RatVector> annihilator(const std::vector<RatVector>& vs, std::size_t n);
bool in_span(const std::vector<RatVector>& basis, const RatVector& v);

// ---- lattices ---------------------------------------------------------------

/// A full-rank lattice in V = Q^n given by the columns of `basis`.
class LatticeContext {
 public:
  explicit LatticeContext(std::size_t n, std::string label = "Z^n");
  LatticeContext(const QMatrix& basis, std::string label);

  std::size_t dim() const { return n_; }
  const QMatrix& basis() const { return basis_; }
  const QMatrix& basis_inverse() const { return inverse_; }
  const std::string& label() const { return label_; }
  bool is_standard() const { return standard_; }

  /// Coordinates y with x = B y.
  RatVector to_coords(const RatVector& x) const;
  RatVector from_coords(const RatVector& y) const;
  bool contains(const RatVector& x) const { return is_integral(to_coords(x)); }

  friend bool operator==(const LatticeContext& a, const LatticeContext& b) { return a.basis_ == b.basis_; }

 private:
  std::size_t n_;
  QMatrix basis_;
  QMatrix inverse_;
  std::string label_;
  bool standard_ = true;
};

/// Adapted basis for a rational subspace W0 of V, expressed in V.
///
/// `adapted` is a Λ-basis (columns) whose first k columns generate Λ ∩ W0.
/// `projection` maps x in V to the coordinates of its class in V/W0 with
/// respect to the quotient lattice basis (images of the last n-k columns).
struct QuotientData {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<RatVector> subspace;  // spanning set of W0 as given
  QMatrix adapted;                  // n x n
  QMatrix projection;               // (n-k) x n
  QMatrix lift;                     // n x (n-k), columns = chosen lifts
  /// n x (n-k): maps a dual quotient vector (coords) to the V* vector
  /// with the same pairing, i.e. projection^T.
  QMatrix dual_embedding() const { return projection.transpose(); }
  RatVector project(const RatVector& x) const { return projection * x; }
};

/// Computes a Λ-basis adapted to W0 by integer column reduction.
QuotientData adapted_basis(const LatticeContext& lat, const std::vector<RatVector>& w0);

/// Volume of the parallelepiped of `vectors` in the measure where a basis of
/// Λ ∩ span(vectors) has volume 1. Throws DomainError if dependent.
mpq_class relative_volume(const std::vector<RatVector>& vectors, const LatticeContext& lat);

/// Primitive ρ in Λ* vanishing on `facet_span`, with <ρ, side> > 0.
RatVector primitive_normal(const std::vector<RatVector>& facet_span, const RatVector& side,
                           const LatticeContext& lat);

/// Unimodular integer matrix U (columns) with A U = [H | 0], A integral of
/// full row rank; H lower triangular. Exposed for tests.
Matrix<mpq_class> column_hermite_transform(const std::vector<std::vector<mpz_class>>& a, std::size_t n);

}  // namespace polyem::lattice

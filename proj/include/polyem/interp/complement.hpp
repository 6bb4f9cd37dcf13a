#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polyem/lattice/lattice.hpp"

namespace polyem::interp {

using lattice::QuotientData;
using lattice::RatVector;
using lattice::SMatrix;
using lattice::SVector;

/// Rigid complement map on V*, given by an inner product Q* or by a complete
/// flag L_1 ⊂ ... ⊂ L_n = V* (L_j spanned by the first j vectors).
///
/// Entries may be symbolic (parameters d1, d2, ... or a, b, c, ...); symbolic
/// maps are treated as generic, so only identically vanishing determinants
/// are reported as genericity failures.
class ComplementMap {
 public:
  enum class Kind { inner_product, flag };

  static ComplementMap inner_product(SMatrix q, std::vector<std::string> params = {});
  static ComplementMap standard(std::size_t n);
  static ComplementMap flag(std::vector<SVector> vectors, std::vector<std::string> params = {});

  Kind kind() const { return kind_; }
  std::size_t dim() const { return n_; }
  const SMatrix& matrix() const { return q_; }
  const std::vector<SVector>& flag_vectors() const { return flag_; }
  const std::vector<std::string>& parameters() const { return params_; }
  bool symbolic() const;

  /// Ψ(U) for a subspace U of V* given by a spanning set.
  std::vector<SVector> complement(const std::vector<SVector>& u) const;

  /// The map pi : V* -> (V/W0)* that is the identity on Ann(W0) and kills
  /// Ψ(Ann(W0)), in the dual quotient-lattice coordinates, together with the
  /// induced complement map. pi is returned as its transpose T (n x m),
  /// <xi, T w> = <pi(xi), w>, ready for genfun::pullback.
  /// Throws GenericityError.
  std::pair<SMatrix, ComplementMap> projection_to_quotient(const QuotientData& q) const;

  /// The corresponding complement map on V = (V*)*: Q^{-1}, or the dual flag
  /// L*_j = Ann(L_{n-j}).
  ComplementMap dual() const;

  /// Image under a linear automorphism g of V (n x n, columns images of the
  /// basis), acting on V* by g^{-T}: Q -> g Q g^T, l -> g^{-T} l.
  ComplementMap transformed(const lattice::QMatrix& g) const;

  /// Stable textual identity used for cache keys.
  const std::string& fingerprint() const { return fingerprint_; }
  std::string to_string() const;

 private:
  ComplementMap() = default;
  void finish();

  Kind kind_ = Kind::inner_product;
  std::size_t n_ = 0;
  SMatrix q_;
  std::vector<SVector> flag_;
  std::vector<std::string> params_;
  std::string fingerprint_;
};

}  // namespace polyem::interp

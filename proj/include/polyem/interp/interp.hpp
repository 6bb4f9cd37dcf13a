#pragma once

#include <cstddef>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "polyem/exactmath/series.hpp"
#include "polyem/genfun/genfun.hpp"
#include "polyem/interp/complement.hpp"

namespace polyem::interp {

using exact::Scalar;
using exact::SPoly;
using exact::TruncSeries;
using genfun::MeroFun;
using geom::Cone;

enum class Kind { mu, lambda, nu };
const char* kind_name(Kind k);

/// Memoizing evaluator of the interpolators μ^Ψ, λ^Ψ, ν^Ψ.
///
/// Safe for concurrent use: lookups take a shared lock, inserts an exclusive
/// one, and a value computed twice is stored once.
class InterpolatorEngine {
 public:
  MeroFun mu(const ComplementMap& psi, const Cone& k);
  MeroFun lambda(const ComplementMap& psi, const Cone& k);
  MeroFun nu(const ComplementMap& psi, const Cone& k);
  MeroFun compute(Kind kind, const ComplementMap& psi, const Cone& k);

  /// Walks every subspace the recursion for K will project along and throws
  /// GenericityError naming the first offending face.
  void audit(const ComplementMap& psi, const Cone& k) const;

  std::size_t cache_size() const;
  void clear();

 private:
  MeroFun lookup_or_compute(Kind kind, const ComplementMap& psi, const Cone& k);
  MeroFun compute_mu(const ComplementMap& psi, const Cone& k);
  MeroFun compute_inverse(Kind kind, const ComplementMap& psi, const Cone& k);
  MeroFun through_lineality(Kind kind, const ComplementMap& psi, const Cone& k);

  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, MeroFun> cache_;
};

/// Process-wide engine used by the free functions below.
InterpolatorEngine& default_engine();

inline MeroFun mu(const ComplementMap& psi, const Cone& k) { return default_engine().mu(psi, k); }
inline MeroFun lambda(const ComplementMap& psi, const Cone& k) { return default_engine().lambda(psi, k); }
inline MeroFun nu(const ComplementMap& psi, const Cone& k) { return default_engine().nu(psi, k); }

/// Face expansion of a polytope or cone X: sum over faces F of
/// interp(Supp(X,F)) times I(F) (mu), S(F) (lambda) or S^0(F) (nu).
/// By the defining identities this equals S(X), I(X) and I(X) respectively.
MeroFun face_expansion(Kind kind, const ComplementMap& psi, const geom::Polytope& p);
MeroFun face_expansion(Kind kind, const ComplementMap& psi, const Cone& k);

/// Cache key: lattice, kind, Ψ, and the cone with its apex reduced mod Λ.
std::string cache_key(Kind kind, const ComplementMap& psi, const Cone& k);

/// B(<xi, u>) = 1/(1 - e^<xi,u>) + 1/<xi,u> on a space of dimension n.
MeroFun bernoulli_fun(const SVector& u);

/// Closed forms in dimension <= 2: rays in a line, half-planes, and
/// unimodular 2-cones (apex in Λ). Throws DomainError for other shapes.
MeroFun mu_closed_form_2d(const ComplementMap& psi, const Cone& k);
MeroFun nu_closed_form_2d(const ComplementMap& psi, const Cone& k);

/// Degree-0 Taylor coefficient of the interpolator.
Scalar constant_term(const ComplementMap& psi, const Cone& k, Kind kind = Kind::mu);

/// ν^Ψ(K)(0) == μ^{Ψ*}(K^∨)(0) for a cone of dimension <= 2 with apex 0.
struct MorelliResult {
  Scalar nu0;
  Scalar mu_dual0;
  bool agree = false;
};
MorelliResult morelli_duality_check(const ComplementMap& psi, const Cone& k);

/// Constant-coefficient differential operator sum c_a d^a from a Taylor
/// expansion sum c_a xi^a.
class DiffOperator {
 public:
  explicit DiffOperator(TruncSeries s) : s_(std::move(s)) {}
  const TruncSeries& series() const { return s_; }
  int order() const { return s_.valid_order(); }
  /// Throws DomainError if deg h exceeds the order.
  SPoly apply(const SPoly& h) const;

 private:
  TruncSeries s_;
};

}  // namespace polyem::interp

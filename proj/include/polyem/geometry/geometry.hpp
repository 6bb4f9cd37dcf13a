#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "polyem/lattice/lattice.hpp"

namespace polyem::geom {

using lattice::LatticeContext;
using lattice::QuotientData;
using lattice::RatVector;

/// V-description of a polyhedral cone {A w >= 0, E w = 0}: lineality basis
/// plus extreme rays of the pointed part (orthogonal to the lineality).
struct VDescription {
  std::vector<RatVector> lineality;
  std::vector<RatVector> rays;
};

/// Brute-force H -> V conversion in Q^n.
VDescription h_to_v(std::size_t n, const std::vector<RatVector>& equations,
                    const std::vector<RatVector>& inequalities);

/// A facet of a cone given by rays and a lineality space: inward normal
/// (lying in the span of the cone) and the indices of the rays on it.
struct FacetInfo {
  RatVector normal;
  std::vector<std::size_t> rays;
};

std::vector<FacetInfo> cone_facets(const std::vector<RatVector>& rays,
                                   const std::vector<RatVector>& lineality, std::size_t n);

/// Face of a cone: subset of its generators; dim counts the lineality.
struct ConeFace {
  std::vector<std::size_t> rays;
  int dim = 0;
};

/// All faces (closed under intersection), sorted by decreasing dimension.
std::vector<ConeFace> cone_face_lattice(const std::vector<RatVector>& rays,
                                        const std::vector<RatVector>& lineality, std::size_t n);

/// apex + lineality + cone(generators).
///
/// On construction the lineality space is recomputed, generators are reduced
/// to the extreme rays of the pointed part, scaled to primitive lattice
/// vectors and sorted lexicographically.
class Cone {
 public:
  Cone(LatticeContext lat, RatVector apex, const std::vector<RatVector>& generators,
       const std::vector<RatVector>& lineality = {});

  const LatticeContext& lattice() const { return lat_; }
  std::size_t ambient_dim() const { return lat_.dim(); }
  const RatVector& apex() const { return apex_; }
  const std::vector<RatVector>& generators() const { return gens_; }
  const std::vector<RatVector>& lineality() const { return lin_; }
  bool pointed() const { return lin_.empty(); }
  int dim() const { return dim_; }
  bool simplicial() const { return pointed() && static_cast<int>(gens_.size()) == dim_; }
  /// Apex in Λ (the maximal affine subspace meets the lattice).
  bool is_lattice_cone() const;

  const std::vector<FacetInfo>& facets() const { return facets_; }
  const std::vector<ConeFace>& faces() const { return faces_; }
  /// Basis of the linear span of a face (lineality + its rays).
  std::vector<RatVector> face_span(const ConeFace& f) const;
  /// Basis of the span of the whole cone.
  std::vector<RatVector> span() const;

  bool contains(const RatVector& x) const;
  bool relative_interior_contains(const RatVector& x) const;

  Cone translated(const RatVector& v) const;

 private:
  LatticeContext lat_;
  RatVector apex_;
  std::vector<RatVector> gens_;
  std::vector<RatVector> lin_;
  int dim_ = 0;
  std::vector<FacetInfo> facets_;
  std::vector<ConeFace> faces_;
};

/// Face of a polytope: vertex subset.
struct PolytopeFace {
  std::vector<std::size_t> vertices;
  int dim = 0;
};

/// Convex hull of finitely many rational points. Non-extreme points are
/// dropped; repeated points are rejected.
class Polytope {
 public:
  Polytope(LatticeContext lat, const std::vector<RatVector>& points);

  const LatticeContext& lattice() const { return lat_; }
  std::size_t ambient_dim() const { return lat_.dim(); }
  const std::vector<RatVector>& vertices() const { return verts_; }
  int dim() const { return dim_; }
  bool empty() const { return verts_.empty(); }
  bool is_lattice_polytope() const;

  /// All nonempty faces including P, sorted by decreasing dimension.
  const std::vector<PolytopeFace>& faces() const { return faces_; }
  std::vector<RatVector> face_vertices(const PolytopeFace& f) const;
  /// Basis of lin(F) (directions of the affine span).
  std::vector<RatVector> face_directions(const PolytopeFace& f) const;

  /// Relative facets as (normal, offset) with <normal, x> >= offset on P,
  /// and the equations <e, x> = c of the affine hull.
  const std::vector<std::pair<RatVector, mpq_class>>& facet_inequalities() const { return ineqs_; }
  const std::vector<std::pair<RatVector, mpq_class>>& equations() const { return eqs_; }

  bool contains(const RatVector& x) const;
  bool relative_interior_contains(const RatVector& x) const;

 private:
  LatticeContext lat_;
  std::vector<RatVector> verts_;
  int dim_ = -1;
  std::vector<PolytopeFace> faces_;
  std::vector<std::pair<RatVector, mpq_class>> ineqs_;
  std::vector<std::pair<RatVector, mpq_class>> eqs_;
};

/// Supp(P, F): vertex of F + lin(F) + cone(v - f0).
Cone supporting_cone(const Polytope& p, const PolytopeFace& f);
/// Supp(K, F) = K + lin(F).
Cone supporting_cone(const Cone& k, const ConeFace& f);

/// Image of Supp(K, F) in V / lin(F), in the quotient lattice coordinates.
std::pair<QuotientData, Cone> transverse_cone(const Cone& k, const ConeFace& f);

/// {w in V* : <w, v> >= 0 for v in K - apex}, generators primitive in Λ*.
/// Returned with the dual lattice context and apex 0.
Cone dual_cone(const Cone& k);

struct HalfOpenSimplicialCone {
  RatVector apex;
  std::vector<RatVector> generators;
  std::vector<bool> open;  // open[i]: facet opposite generators[i] is excluded
};

/// Simplicial cones (generator index lists) triangulating cone(rays);
/// non-extreme rays in the list are used as extra subdivision rays.
std::vector<std::vector<std::size_t>> triangulate(const std::vector<RatVector>& rays, std::size_t n);

/// Disjoint half-open simplicial pieces whose union is the pointed cone K.
std::vector<HalfOpenSimplicialCone> halfopen_decompose(const Cone& k);
/// Same, subdividing additionally along the given rays inside K.
std::vector<HalfOpenSimplicialCone> halfopen_decompose(const Cone& k, const std::vector<RatVector>& extra_rays);

/// Membership in a half-open simplicial cone.
bool contains(const HalfOpenSimplicialCone& c, const RatVector& x);

/// Candidate budget for brute-force enumeration (POLYEM_MAX_ENUM, default 10^6).
std::size_t enumeration_limit();

/// Lattice points apex + sum t_i g_i with t_i in [0,1) (closed facet) or
/// (0,1] (open facet).
std::vector<RatVector> box_points(const RatVector& apex, const std::vector<RatVector>& generators,
                                  const std::vector<bool>& open, const LatticeContext& lat);

/// Lattice points of a polytope by bounding-box enumeration.
std::vector<RatVector> lattice_points(const Polytope& p);

}  // namespace polyem::geom

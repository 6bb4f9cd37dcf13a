#pragma once

#include <vector>

#include "polyem/interp/interp.hpp"

namespace polyem::euler {

using exact::Scalar;
using exact::SPoly;
using geom::Polytope;
using geom::PolytopeFace;
using interp::ComplementMap;
using interp::DiffOperator;

/// Polynomial function on V in the coordinates x1..xn.
using PolyFunc = SPoly;

/// sum_a c_a d^a h.
PolyFunc apply_operator(const DiffOperator& d, const PolyFunc& h);

/// The operator interp(Supp)(d_x), truncated at `order`.
DiffOperator face_operator(interp::Kind kind, const ComplementMap& psi, const geom::Cone& supp, int order);

/// Exact integral of h over a polytope in the relative lattice measure of its
/// affine hull (a point integrates to h(point)).
Scalar integrate_poly_over_face(const PolyFunc& h, const Polytope& f);

/// Contribution of one face to a local formula.
struct FaceTerm {
  PolytopeFace face;
  Scalar weight;        // constant term of the interpolator of Supp(P,F)
  Scalar measure;       // vol(F), #(F) or #(relint F)
  Scalar contribution;  // the face's share of the total
};

struct LocalFormula {
  Scalar total;
  std::vector<FaceTerm> faces;
};

/// Sum of h over P ∩ Λ as a sum of face integrals of the μ-operators.
LocalFormula em_sum(const ComplementMap& psi, const Polytope& p, const PolyFunc& h);
/// #(P) = sum_F μ(Supp(P,F))(0) vol(F).
LocalFormula count_lattice_points(const ComplementMap& psi, const Polytope& p);

/// Integral of h over a lattice polytope from λ-operators at the lattice
/// points of the faces.
LocalFormula em_integral(const ComplementMap& psi, const Polytope& p, const PolyFunc& h);
/// The same with ν-operators at the lattice points of the relative interiors.
LocalFormula em_integral_interior(const ComplementMap& psi, const Polytope& p, const PolyFunc& h);
/// vol(P) = sum_F λ(Supp(P,F))(0) #(F).
LocalFormula volume(const ComplementMap& psi, const Polytope& p);

/// Independent reference values by enumeration and direct integration.
struct Oracles {
  Scalar count;
  Scalar sum_h;
  Scalar interior_count;
  Scalar boundary_count;
  Scalar volume;
  Scalar integral;
};
Oracles brute_force_oracles(const Polytope& p, const PolyFunc& h);

}  // namespace polyem::euler

#pragma once

#include "polyem/genfun/merofun.hpp"
#include "polyem/geometry/geometry.hpp"

namespace polyem::genfun {

using geom::Cone;
using geom::HalfOpenSimplicialCone;
using geom::Polytope;

/// Exponential sum over the lattice points of a half-open simplicial cone:
/// one term per box point, the generators as exponential denominators.
MeroFun s_simplicial(const HalfOpenSimplicialCone& k, const lattice::LatticeContext& lat);

/// (-1)^k vol(box) e^<xi,apex> / prod <xi, v_i> for a pointed simplicial cone.
MeroFun i_simplicial(const Cone& k);

/// S and I of cones (via half-open decompositions) and polytopes (via Brion).
/// Cones containing a line give zero.
MeroFun s_of(const Cone& k);
MeroFun i_of(const Cone& k);
MeroFun s_of(const Polytope& p);
MeroFun i_of(const Polytope& p);

/// Exponential sum over the relative interior, by inclusion-exclusion over faces.
MeroFun s_interior(const Polytope& p);
MeroFun s_interior(const Cone& k);

/// Sum of e^<xi,x> over the enumerated lattice points of P.
ExpPoly brute_force_sum(const Polytope& p);

}  // namespace polyem::genfun

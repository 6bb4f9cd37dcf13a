#include "polyem/genfun/genfun.hpp"

#include "polyem/errors.hpp"

namespace polyem::genfun {

using lattice::to_scalars;

MeroFun s_simplicial(const HalfOpenSimplicialCone& k, const lattice::LatticeContext& lat) {
  MeroFun f(lat.dim());
  std::vector<SVector> dens;
  for (const auto& g : k.generators) dens.push_back(to_scalars(g));
  for (const auto& x : geom::box_points(k.apex, k.generators, k.open, lat))
    f.add_term({Scalar(1), to_scalars(x), {}, dens});
  return f;
}

MeroFun i_simplicial(const Cone& k) {
  if (!k.simplicial()) throw DomainError("i_simplicial requires a pointed simplicial cone");
  const auto& gens = k.generators();
  Scalar vol = lattice::relative_volume(gens, k.lattice());
  if (gens.size() % 2) vol = -vol;
  Term t{vol, to_scalars(k.apex()), {}, {}};
  for (const auto& g : gens) t.lin_dens.push_back(to_scalars(g));
  MeroFun f(k.ambient_dim());
  f.add_term(std::move(t));
  return f;
}

MeroFun s_of(const Cone& k) {
  MeroFun f(k.ambient_dim());
  if (!k.pointed()) return f;
  for (const auto& piece : geom::halfopen_decompose(k)) f += s_simplicial(piece, k.lattice());
  return f;
}

MeroFun i_of(const Cone& k) {
  MeroFun f(k.ambient_dim());
  if (!k.pointed()) return f;
  for (const auto& piece : geom::halfopen_decompose(k)) {
    Cone c(k.lattice(), piece.apex, piece.generators);
    if (c.dim() == k.dim()) f += i_simplicial(c);
  }
  return f;
}

MeroFun s_of(const Polytope& p) {
  MeroFun f(p.ambient_dim());
  for (const auto& face : p.faces())
    if (face.dim == 0) f += s_of(geom::supporting_cone(p, face));
  return f;
}

MeroFun i_of(const Polytope& p) {
  MeroFun f(p.ambient_dim());
  for (const auto& face : p.faces())
    if (face.dim == 0) f += i_of(geom::supporting_cone(p, face));
  return f;
}

MeroFun s_interior(const Polytope& p) {
  MeroFun f(p.ambient_dim());
  for (const auto& face : p.faces()) {
    MeroFun s = s_of(Polytope(p.lattice(), p.face_vertices(face)));
    f += (p.dim() - face.dim) % 2 ? -s : s;
  }
  return f;
}

MeroFun s_interior(const Cone& k) {
  if (!k.pointed()) throw DomainError("s_interior requires a pointed cone");
  MeroFun f(k.ambient_dim());
  for (const auto& face : k.faces()) {
    std::vector<RatVector> gens;
    for (auto i : face.rays) gens.push_back(k.generators()[i]);
    MeroFun s = s_of(Cone(k.lattice(), k.apex(), gens));
    f += (k.dim() - face.dim) % 2 ? -s : s;
  }
  return f;
}

ExpPoly brute_force_sum(const Polytope& p) {
  ExpPoly e(p.ambient_dim());
  for (const auto& x : geom::lattice_points(p)) e.add(to_scalars(x), SPoly(Scalar(1)));
  return e;
}

}  // namespace polyem::genfun

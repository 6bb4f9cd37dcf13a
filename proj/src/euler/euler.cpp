#include "polyem/euler/euler.hpp"

#include "polyem/errors.hpp"

namespace polyem::euler {

using lattice::operator-;
using lattice::RatVector;
using lattice::to_scalars;

namespace {

mpz_class factorial(unsigned long k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return f;
}

// h(p0 + E t) as a polynomial in t (E given by its columns).
SPoly compose_affine(const SPoly& h, const RatVector& p0, const std::vector<RatVector>& cols) {
  const std::size_t n = p0.size();
  std::vector<SPoly> images;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Scalar> row;
    for (const auto& c : cols) row.push_back(Scalar(c[i]));
    images.push_back(SPoly(Scalar(p0[i])) + SPoly::linear(row));
  }
  SPoly out;
  for (const auto& [m, c] : h.terms()) {
    SPoly term(c);
    for (std::size_t i = 0; i < n; ++i)
      for (int e = 0; e < m.exp[i]; ++e) term = term * images[i];
    out += term;
  }
  return out;
}

// Integral over the standard simplex {t >= 0, sum t <= 1} in R^k.
Scalar integrate_standard_simplex(const SPoly& g, std::size_t k) {
  Scalar total(0);
  for (const auto& [m, c] : g.terms()) {
    mpz_class num = 1;
    unsigned long deg = 0;
    for (std::size_t i = 0; i < k; ++i) {
      num *= factorial(m.exp[i]);
      deg += m.exp[i];
    }
    total += c * Scalar(mpq_class(num, factorial(deg + k)));
  }
  return total;
}

Polytope face_polytope(const Polytope& p, const PolytopeFace& f) { return Polytope(p.lattice(), p.face_vertices(f)); }

int degree_of(const PolyFunc& h) { return h.is_zero() ? 0 : h.total_degree(); }

LocalFormula lattice_side(interp::Kind kind, const ComplementMap& psi, const Polytope& p, const PolyFunc& h) {
  if (!p.is_lattice_polytope()) throw DomainError("reverse Euler-Maclaurin formulas need a lattice polytope");
  const bool interior_only = kind == interp::Kind::nu;
  LocalFormula out;
  for (const auto& face : p.faces()) {
    DiffOperator d = face_operator(kind, psi, geom::supporting_cone(p, face), degree_of(h));
    PolyFunc g = apply_operator(d, h);
    Polytope f = face_polytope(p, face);
    Scalar sum(0), count(0);
    for (const auto& x : geom::lattice_points(f)) {
      if (interior_only && !f.relative_interior_contains(x)) continue;
      sum += g.evaluate(to_scalars(x));
      count += Scalar(1);
    }
    out.total += sum;
    out.faces.push_back({face, d.series().constant_term(), count, sum});
  }
  return out;
}

}  // namespace

PolyFunc apply_operator(const DiffOperator& d, const PolyFunc& h) { return d.apply(h); }

DiffOperator face_operator(interp::Kind kind, const ComplementMap& psi, const geom::Cone& supp, int order) {
  return DiffOperator(genfun::taylor_at_zero(interp::default_engine().compute(kind, psi, supp), order));
}

Scalar integrate_poly_over_face(const PolyFunc& h, const Polytope& f) {
  if (f.empty()) return Scalar(0);
  const auto& verts = f.vertices();
  if (f.dim() == 0) return h.evaluate(to_scalars(verts[0]));
  const std::size_t n = f.ambient_dim();
  std::vector<RatVector> lifted;
  for (const auto& v : verts) {
    RatVector r{mpq_class(1)};
    r.insert(r.end(), v.begin(), v.end());
    lifted.push_back(std::move(r));
  }
  Scalar total(0);
  for (const auto& s : geom::triangulate(lifted, n + 1)) {
    const RatVector& p0 = verts[s[0]];
    std::vector<RatVector> edges;
    for (std::size_t j = 1; j < s.size(); ++j) edges.push_back(verts[s[j]] - p0);
    Scalar vol(lattice::relative_volume(edges, f.lattice()));
    total += vol * integrate_standard_simplex(compose_affine(h, p0, edges), edges.size());
  }
  return total;
}

LocalFormula em_sum(const ComplementMap& psi, const Polytope& p, const PolyFunc& h) {
  LocalFormula out;
  for (const auto& face : p.faces()) {
    DiffOperator d = face_operator(interp::Kind::mu, psi, geom::supporting_cone(p, face), degree_of(h));
    Polytope f = face_polytope(p, face);
    Scalar c = integrate_poly_over_face(apply_operator(d, h), f);
    out.total += c;
    out.faces.push_back({face, d.series().constant_term(), integrate_poly_over_face(SPoly(Scalar(1)), f), c});
  }
  return out;
}

LocalFormula count_lattice_points(const ComplementMap& psi, const Polytope& p) {
  return em_sum(psi, p, SPoly(Scalar(1)));
}

LocalFormula em_integral(const ComplementMap& psi, const Polytope& p, const PolyFunc& h) {
  return lattice_side(interp::Kind::lambda, psi, p, h);
}

LocalFormula em_integral_interior(const ComplementMap& psi, const Polytope& p, const PolyFunc& h) {
  return lattice_side(interp::Kind::nu, psi, p, h);
}

LocalFormula volume(const ComplementMap& psi, const Polytope& p) { return em_integral(psi, p, SPoly(Scalar(1))); }

Oracles brute_force_oracles(const Polytope& p, const PolyFunc& h) {
  Oracles o;
  for (const auto& x : geom::lattice_points(p)) {
    o.count += Scalar(1);
    o.sum_h += h.evaluate(to_scalars(x));
    if (p.relative_interior_contains(x)) o.interior_count += Scalar(1);
  }
  o.boundary_count = o.count - o.interior_count;
  o.volume = integrate_poly_over_face(SPoly(Scalar(1)), p);
  o.integral = integrate_poly_over_face(h, p);
  return o;
}

}  // namespace polyem::euler

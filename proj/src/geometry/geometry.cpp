#include "polyem/geometry/geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>

#include "polyem/errors.hpp"

namespace polyem::geom {

using lattice::QMatrix;
using lattice::annihilator;
using lattice::dot;
using lattice::in_span;
using lattice::is_zero_vector;
using lattice::rank;
using lattice::rows_matrix;
using lattice::span_basis;
using lattice::operator+;
using lattice::operator-;
using lattice::operator*;

namespace {

std::vector<RatVector> concat(std::vector<RatVector> a, const std::vector<RatVector>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// Calls f on every k-subset of {0..n-1} (as a sorted index vector).
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<RatVector> pick(const std::vector<RatVector>& vs, const std::vector<std::size_t>& idx) {
  std::vector<RatVector> out;
  for (auto i : idx) out.push_back(vs[i]);
  return out;
}

/// Direction scaled to a primitive vector of the lattice.
RatVector lattice_primitive(const RatVector& v, const LatticeContext& lat) {
  return lat.from_coords(lattice::primitive(lat.to_coords(v)));
}

int sign(const mpq_class& x) { return sgn(x); }

}  // namespace

VDescription h_to_v(std::size_t n, const std::vector<RatVector>& equations,
                    const std::vector<RatVector>& inequalities) {
  VDescription out;
  std::vector<RatVector> all = concat(equations, inequalities);
  if (all.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      RatVector e(n, 0);
      e[i] = 1;
      out.lineality.push_back(e);
    }
  } else {
    out.lineality = annihilator(all, n);
  }
  for (auto& l : out.lineality) l = lattice::primitive(l);
  std::vector<RatVector> base = concat(equations, out.lineality);
  const std::size_t m = base.empty() ? n : n - rank(rows_matrix(base, n));
  if (m == 0) return out;
  std::set<RatVector> seen;
  for_each_subset(inequalities.size(), m - 1, [&](const std::vector<std::size_t>& sub) {
    std::vector<RatVector> rows = concat(base, pick(inequalities, sub));
    RatVector r;
    if (rows.empty()) {
      if (n != 1) return;
      r = RatVector{1};
    } else {
      auto ns = annihilator(rows, n);
      if (ns.size() != 1) return;
      r = ns[0];
    }
    bool pos = true, neg = true;
    for (const auto& a : inequalities) {
      int s = sign(dot(a, r));
      if (s < 0) pos = false;
      if (s > 0) neg = false;
    }
    auto add = [&](RatVector v) {
      v = lattice::primitive(v);
      if (seen.insert(v).second) out.rays.push_back(v);
    };
    if (pos) add(r);
    if (neg) add(mpq_class(-1) * r);
  });
  std::sort(out.rays.begin(), out.rays.end());
  return out;
}

std::vector<FacetInfo> cone_facets(const std::vector<RatVector>& rays, const std::vector<RatVector>& lineality,
                                   std::size_t n) {
  std::vector<RatVector> span = span_basis(concat(rays, lineality), n);
  const std::size_t d = span.size();
  const std::size_t h = lineality.empty() ? 0 : rank(rows_matrix(lineality, n));
  std::vector<FacetInfo> out;
  if (d == h) return out;
  std::set<std::vector<std::size_t>> seen;
  for_each_subset(rays.size(), d - 1 - h, [&](const std::vector<std::size_t>& sub) {
    std::vector<RatVector> s = concat(pick(rays, sub), lineality);
    if (!s.empty() && rank(rows_matrix(s, n)) != d - 1) return;
    // Normal inside span: w = sum c_i span_i orthogonal to s.
    QMatrix m(s.size(), d);
    for (std::size_t r = 0; r < s.size(); ++r)
      for (std::size_t i = 0; i < d; ++i) m(r, i) = dot(span[i], s[r]);
    std::vector<RatVector> ns;
    if (s.empty()) {
      ns.push_back(RatVector(d, 0));
      ns[0][0] = 1;
    } else {
      ns = lattice::nullspace(m);
    }
    if (ns.size() != 1) return;
    RatVector w(n, 0);
    for (std::size_t i = 0; i < d; ++i) w = w + ns[0][i] * span[i];
    bool pos = false, neg = false;
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      int sg = sign(dot(w, rays[i]));
      if (sg > 0) pos = true;
      if (sg < 0) neg = true;
      if (sg == 0) on.push_back(i);
    }
    if (pos && neg) return;
    if (!pos && !neg) return;
    if (neg) w = mpq_class(-1) * w;
    if (!seen.insert(on).second) return;
    out.push_back({lattice::primitive(w), on});
  });
  std::sort(out.begin(), out.end(), [](const FacetInfo& a, const FacetInfo& b) { return a.rays < b.rays; });
  return out;
}

namespace {

std::vector<ConeFace> face_lattice_from_facets(const std::vector<RatVector>& rays,
                                               const std::vector<RatVector>& lineality, std::size_t n,
                                               const std::vector<FacetInfo>& facets) {
  std::set<std::vector<std::size_t>> faces;
  std::vector<std::size_t> all(rays.size());
  for (std::size_t i = 0; i < rays.size(); ++i) all[i] = i;
  faces.insert(all);
  std::vector<std::vector<std::size_t>> frontier;
  for (const auto& f : facets)
    if (faces.insert(f.rays).second) frontier.push_back(f.rays);
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& a : frontier)
      for (const auto& f : facets) {
        std::vector<std::size_t> c;
        std::set_intersection(a.begin(), a.end(), f.rays.begin(), f.rays.end(), std::back_inserter(c));
        if (faces.insert(c).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  std::vector<ConeFace> out;
  for (const auto& f : faces) {
    std::vector<RatVector> s = concat(pick(rays, f), lineality);
    out.push_back({f, s.empty() ? 0 : static_cast<int>(rank(rows_matrix(s, n)))});
  }
  std::sort(out.begin(), out.end(), [](const ConeFace& a, const ConeFace& b) {
    if (a.dim != b.dim) return a.dim > b.dim;
    return a.rays < b.rays;
  });
  return out;
}

}  // namespace

std::vector<ConeFace> cone_face_lattice(const std::vector<RatVector>& rays,
                                        const std::vector<RatVector>& lineality, std::size_t n) {
  return face_lattice_from_facets(rays, lineality, n, cone_facets(rays, lineality, n));
}

// ---- Cone -----------------------------------------------------------------

Cone::Cone(LatticeContext lat, RatVector apex, const std::vector<RatVector>& generators,
           const std::vector<RatVector>& lineality)
    : lat_(std::move(lat)), apex_(std::move(apex)) {
  const std::size_t n = lat_.dim();
  if (apex_.size() != n) throw DomainError("cone apex has the wrong dimension");
  std::vector<RatVector> gens;
  for (const auto& g : generators) {
    if (g.size() != n) throw DomainError("cone generator has the wrong dimension");
    if (!is_zero_vector(g)) gens.push_back(g);
  }
  std::vector<RatVector> lin;
  for (const auto& l : lineality) {
    if (l.size() != n) throw DomainError("lineality vector has the wrong dimension");
    if (!is_zero_vector(l)) lin.push_back(l);
  }
  VDescription dual = h_to_v(n, lin, gens);
  VDescription primal = h_to_v(n, dual.lineality, dual.rays);
  for (const auto& r : primal.rays) gens_.push_back(lattice_primitive(r, lat_));
  std::sort(gens_.begin(), gens_.end());
  for (const auto& l : span_basis(primal.lineality, n)) lin_.push_back(lattice_primitive(l, lat_));
  std::vector<RatVector> all = concat(gens_, lin_);
  dim_ = all.empty() ? 0 : static_cast<int>(rank(rows_matrix(all, n)));
  facets_ = cone_facets(gens_, lin_, n);
  faces_ = face_lattice_from_facets(gens_, lin_, n, facets_);
}

bool Cone::is_lattice_cone() const {
  if (lin_.empty()) return lat_.contains(apex_);
  QuotientData q = lattice::adapted_basis(lat_, lin_);
  return lattice::is_integral(q.project(apex_));
}

std::vector<RatVector> Cone::face_span(const ConeFace& f) const {
  return span_basis(concat(pick(gens_, f.rays), lin_), lat_.dim());
}

std::vector<RatVector> Cone::span() const { return span_basis(concat(gens_, lin_), lat_.dim()); }

bool Cone::contains(const RatVector& x) const {
  RatVector y = x - apex_;
  if (!in_span(span(), y)) return false;
  for (const auto& f : facets_)
    if (dot(f.normal, y) < 0) return false;
  return true;
}

bool Cone::relative_interior_contains(const RatVector& x) const {
  RatVector y = x - apex_;
  if (!in_span(span(), y)) return false;
  for (const auto& f : facets_)
    if (dot(f.normal, y) <= 0) return false;
  return true;
}

Cone Cone::translated(const RatVector& v) const { return Cone(lat_, apex_ + v, gens_, lin_); }

// ---- Polytope ---------------------------------------------------------------

Polytope::Polytope(LatticeContext lat, const std::vector<RatVector>& points) : lat_(std::move(lat)) {
  const std::size_t n = lat_.dim();
  std::set<RatVector> uniq;
  for (const auto& p : points) {
    if (p.size() != n) throw DomainError("polytope point has the wrong dimension");
    if (!uniq.insert(p).second) throw DomainError("repeated polytope vertex " + lattice::to_string(p));
  }
  std::vector<RatVector> pts = points;
  if (pts.empty()) return;
  auto homog = [n](const std::vector<RatVector>& ps) {
    std::vector<RatVector> rays;
    for (const auto& p : ps) {
      RatVector r(n + 1);
      r[0] = 1;
      std::copy(p.begin(), p.end(), r.begin() + 1);
      rays.push_back(r);
    }
    return rays;
  };
  std::vector<RatVector> rays = homog(pts);
  std::vector<FacetInfo> facets = cone_facets(rays, {}, n + 1);
  std::vector<ConeFace> cfaces = face_lattice_from_facets(rays, {}, n + 1, facets);
  std::vector<std::size_t> extreme;
  for (const auto& f : cfaces)
    if (f.dim == 1) extreme.push_back(f.rays.at(0));
  std::sort(extreme.begin(), extreme.end());
  if (extreme.size() < pts.size()) {
    pts = pick(pts, extreme);
    rays = homog(pts);
    facets = cone_facets(rays, {}, n + 1);
    cfaces = face_lattice_from_facets(rays, {}, n + 1, facets);
  }
  verts_ = pts;
  for (const auto& f : cfaces)
    if (!f.rays.empty()) faces_.push_back({f.rays, f.dim - 1});
  dim_ = faces_.front().dim;
  for (const auto& f : facets) {
    if (f.rays.empty()) continue;
    RatVector w(f.normal.begin() + 1, f.normal.end());
    ineqs_.emplace_back(w, -f.normal[0]);
  }
  for (const auto& e : annihilator(rays, n + 1)) {
    RatVector pe = lattice::primitive(e);
    eqs_.emplace_back(RatVector(pe.begin() + 1, pe.end()), -pe[0]);
  }
}

bool Polytope::is_lattice_polytope() const {
  for (const auto& v : verts_)
    if (!lat_.contains(v)) return false;
  return true;
}

std::vector<RatVector> Polytope::face_vertices(const PolytopeFace& f) const { return pick(verts_, f.vertices); }

std::vector<RatVector> Polytope::face_directions(const PolytopeFace& f) const {
  std::vector<RatVector> d;
  for (std::size_t i = 1; i < f.vertices.size(); ++i) d.push_back(verts_[f.vertices[i]] - verts_[f.vertices[0]]);
  return d.empty() ? d : span_basis(d, lat_.dim());
}

bool Polytope::contains(const RatVector& x) const {
  if (verts_.empty()) return false;
  for (const auto& [e, c] : eqs_)
    if (dot(e, x) != c) return false;
  for (const auto& [w, c] : ineqs_)
    if (dot(w, x) < c) return false;
  return true;
}

bool Polytope::relative_interior_contains(const RatVector& x) const {
  if (verts_.empty()) return false;
  for (const auto& [e, c] : eqs_)
    if (dot(e, x) != c) return false;
  for (const auto& [w, c] : ineqs_)
    if (dot(w, x) <= c) return false;
  return true;
}

// ---- derived cones ----------------------------------------------------------

Cone supporting_cone(const Polytope& p, const PolytopeFace& f) {
  const RatVector& f0 = p.vertices()[f.vertices.at(0)];
  std::vector<RatVector> gens;
  for (std::size_t i = 0; i < p.vertices().size(); ++i)
    if (!std::binary_search(f.vertices.begin(), f.vertices.end(), i)) gens.push_back(p.vertices()[i] - f0);
  return Cone(p.lattice(), f0, gens, p.face_directions(f));
}

Cone supporting_cone(const Cone& k, const ConeFace& f) {
  return Cone(k.lattice(), k.apex(), k.generators(), k.face_span(f));
}

std::pair<QuotientData, Cone> transverse_cone(const Cone& k, const ConeFace& f) {
  std::vector<RatVector> l = k.face_span(f);
  QuotientData q = lattice::adapted_basis(k.lattice(), l);
  std::vector<RatVector> gens;
  for (const auto& g : k.generators()) gens.push_back(q.project(g));
  Cone t(LatticeContext(k.ambient_dim() - q.k), q.project(k.apex()), gens, {});
  return {std::move(q), std::move(t)};
}

Cone dual_cone(const Cone& k) {
  const std::size_t n = k.ambient_dim();
  VDescription d = h_to_v(n, k.lineality(), k.generators());
  LatticeContext dual_lat(k.lattice().basis_inverse().transpose(), "dual of " + k.lattice().label());
  return Cone(dual_lat, RatVector(n, 0), d.rays, d.lineality);
}

// ---- triangulation and half-open decomposition ------------------------------

namespace {

std::vector<std::vector<std::size_t>> fan(const std::vector<RatVector>& rays, const std::vector<std::size_t>& idx,
                                          std::size_t n) {
  std::vector<RatVector> sub = pick(rays, idx);
  std::size_t d = rank(rows_matrix(sub, n));
  if (idx.size() == d) return {idx};
  std::size_t apex_pos = 0;
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (rays[idx[i]] < rays[idx[apex_pos]]) apex_pos = i;
  std::vector<std::vector<std::size_t>> out;
  for (const auto& f : cone_facets(sub, {}, n)) {
    if (std::binary_search(f.rays.begin(), f.rays.end(), apex_pos)) continue;
    std::vector<std::size_t> fidx;
    for (auto r : f.rays) fidx.push_back(idx[r]);
    for (auto s : fan(rays, fidx, n)) {
      s.push_back(idx[apex_pos]);
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
    }
  }
  return out;
}

/// Coefficients of v in terms of the (independent) vectors gs, or nullopt.
std::optional<RatVector> coefficients(const std::vector<RatVector>& gs, const RatVector& v) {
  if (gs.empty()) return is_zero_vector(v) ? std::optional<RatVector>(RatVector{}) : std::nullopt;
  QMatrix m = QMatrix::from_columns(gs);
  return lattice::solve(m, v);
}

}  // namespace

std::vector<std::vector<std::size_t>> triangulate(const std::vector<RatVector>& rays, std::size_t n) {
  if (rays.empty()) return {{}};
  std::vector<ConeFace> faces = cone_face_lattice(rays, {}, n);
  std::vector<std::size_t> extreme;
  for (const auto& f : faces)
    if (f.dim == 1 && f.rays.size() == 1) extreme.push_back(f.rays[0]);
  std::sort(extreme.begin(), extreme.end());
  if (extreme.empty()) throw DomainError("triangulate: cone is not pointed");
  auto simplices = fan(rays, extreme, n);
  for (std::size_t g = 0; g < rays.size(); ++g) {
    if (std::binary_search(extreme.begin(), extreme.end(), g)) continue;
    std::vector<std::vector<std::size_t>> next;
    for (const auto& s : simplices) {
      auto lam = coefficients(pick(rays, s), rays[g]);
      bool inside = lam.has_value();
      if (inside)
        for (const auto& x : *lam)
          if (x < 0) inside = false;
      if (!inside) {
        next.push_back(s);
        continue;
      }
      for (std::size_t i = 0; i < s.size(); ++i) {
        if ((*lam)[i] == 0) continue;
        auto t = s;
        t[i] = g;
        std::sort(t.begin(), t.end());
        next.push_back(t);
      }
    }
    simplices = std::move(next);
  }
  std::sort(simplices.begin(), simplices.end());
  return simplices;
}

std::vector<HalfOpenSimplicialCone> halfopen_decompose(const Cone& k) { return halfopen_decompose(k, {}); }

std::vector<HalfOpenSimplicialCone> halfopen_decompose(const Cone& k, const std::vector<RatVector>& extra_rays) {
  if (!k.pointed()) throw DomainError("halfopen_decompose requires a pointed cone");
  const std::size_t n = k.ambient_dim();
  std::vector<RatVector> rays = k.generators();
  for (const auto& r : extra_rays) {
    if (!k.contains(k.apex() + r)) throw DomainError("subdivision ray " + lattice::to_string(r) + " is not in the cone");
    RatVector p = lattice_primitive(r, k.lattice());
    if (std::find(rays.begin(), rays.end(), p) == rays.end()) rays.push_back(p);
  }
  if (rays.empty()) return {{k.apex(), {}, {}}};
  auto simplices = triangulate(rays, n);
  if (simplices.size() == 1) {
    HalfOpenSimplicialCone c{k.apex(), pick(rays, simplices[0]), {}};
    c.open.assign(c.generators.size(), false);
    return {c};
  }
  // Coordinates with respect to a basis of span(K).
  std::vector<RatVector> sb = span_basis(rays, n);
  auto local = [&](const RatVector& v) { return *coefficients(sb, v); };
  const std::size_t d = sb.size();
  std::vector<QMatrix> normals;
  for (const auto& s : simplices) {
    QMatrix g(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      RatVector c = local(rays[s[j]]);
      for (std::size_t i = 0; i < d; ++i) g(i, j) = c[i];
    }
    normals.push_back(lattice::inverse(g));
  }
  // Generic interior reference point: positive combination avoiding all walls.
  RatVector q;
  for (long t = 1;; ++t) {
    q.assign(d, 0);
    for (std::size_t i = 0; i < rays.size(); ++i) {
      mpq_class w(1 + ((static_cast<long>(i) + 1) * t * 7919) % 101, 101);
      q = q + w * local(rays[i]);
    }
    bool generic = true;
    for (const auto& nm : normals)
      for (std::size_t j = 0; j < d && generic; ++j)
        if (dot(nm.row(j), q) == 0) generic = false;
    if (generic) break;
    if (t > 1000) throw std::logic_error("halfopen_decompose: no generic point found");
  }
  std::vector<HalfOpenSimplicialCone> out;
  for (std::size_t si = 0; si < simplices.size(); ++si) {
    HalfOpenSimplicialCone c{k.apex(), pick(rays, simplices[si]), std::vector<bool>(d, false)};
    for (std::size_t j = 0; j < d; ++j) c.open[j] = dot(normals[si].row(j), q) < 0;
    out.push_back(std::move(c));
  }
  return out;
}

bool contains(const HalfOpenSimplicialCone& c, const RatVector& x) {
  auto t = coefficients(c.generators, x - c.apex);
  if (!t) return false;
  for (std::size_t i = 0; i < t->size(); ++i) {
    if ((*t)[i] < 0) return false;
    if (c.open[i] && (*t)[i] == 0) return false;
  }
  return true;
}

// ---- enumeration ------------------------------------------------------------

std::size_t enumeration_limit() {
  if (const char* env = std::getenv("POLYEM_MAX_ENUM")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw ParseError("POLYEM_MAX_ENUM must be a non-negative integer");
    }
  }
  return 1000000;
}

namespace {

void enumerate_box(const std::vector<mpz_class>& lo, const std::vector<mpz_class>& hi,
                   const std::function<void(const RatVector&)>& f) {
  mpz_class total = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (hi[i] < lo[i]) return;
    total *= hi[i] - lo[i] + 1;
  }
  if (total > enumeration_limit())
    throw SizeGuardError("enumeration of " + total.get_str() + " candidates exceeds the limit of " +
                         std::to_string(enumeration_limit()) + " (set POLYEM_MAX_ENUM to raise it)");
  RatVector y(lo.size());
  for (std::size_t i = 0; i < lo.size(); ++i) y[i] = lo[i];
  while (true) {
    f(y);
    std::size_t i = 0;
    while (i < lo.size()) {
      if (y[i] < hi[i]) {
        y[i] += 1;
        break;
      }
      y[i] = lo[i];
      ++i;
    }
    if (i == lo.size()) return;
  }
}

mpz_class ceil_q(const mpq_class& x) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

mpz_class floor_q(const mpq_class& x) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

}  // namespace

std::vector<RatVector> box_points(const RatVector& apex, const std::vector<RatVector>& generators,
                                  const std::vector<bool>& open, const LatticeContext& lat) {
  const std::size_t n = lat.dim();
  const std::size_t k = generators.size();
  if (!generators.empty() && rank(rows_matrix(generators, n)) != k)
    throw DomainError("box_points: dependent generators");
  RatVector a = lat.to_coords(apex);
  std::vector<RatVector> g;
  for (const auto& v : generators) g.push_back(lat.to_coords(v));
  std::vector<mpz_class> lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    mpq_class l = a[j], h = a[j];
    for (const auto& v : g) (v[j] < 0 ? l : h) += v[j];
    lo[j] = ceil_q(l);
    hi[j] = floor_q(h);
  }
  // Solve y - a = G t through k independent rows of G.
  QMatrix gm = k ? QMatrix::from_columns(g) : QMatrix(n, 0);
  std::vector<std::size_t> rows;
  if (k) rows = lattice::rref(gm.transpose()).pivots;
  QMatrix sub(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) sub(i, j) = gm(rows[i], j);
  QMatrix sub_inv = k ? lattice::inverse(sub) : sub;
  std::vector<RatVector> out;
  enumerate_box(lo, hi, [&](const RatVector& y) {
    RatVector diff = y - a;
    RatVector rhs(k);
    for (std::size_t i = 0; i < k; ++i) rhs[i] = diff[rows[i]];
    RatVector t = sub_inv * rhs;
    if (k ? gm * t != diff : !is_zero_vector(diff)) return;
    for (std::size_t i = 0; i < k; ++i) {
      bool is_open = i < open.size() && open[i];
      if (is_open ? (t[i] <= 0 || t[i] > 1) : (t[i] < 0 || t[i] >= 1)) return;
    }
    out.push_back(lat.from_coords(y));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RatVector> lattice_points(const Polytope& p) {
  std::vector<RatVector> out;
  if (p.empty()) return out;
  const std::size_t n = p.ambient_dim();
  std::vector<mpz_class> lo(n), hi(n);
  std::vector<RatVector> coords;
  for (const auto& v : p.vertices()) coords.push_back(p.lattice().to_coords(v));
  for (std::size_t j = 0; j < n; ++j) {
    mpq_class l = coords[0][j], h = coords[0][j];
    for (const auto& c : coords) {
      if (c[j] < l) l = c[j];
      if (c[j] > h) h = c[j];
    }
    lo[j] = ceil_q(l);
    hi[j] = floor_q(h);
  }
  enumerate_box(lo, hi, [&](const RatVector& y) {
    RatVector x = p.lattice().from_coords(y);
    if (p.contains(x)) out.push_back(x);
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace polyem::geom

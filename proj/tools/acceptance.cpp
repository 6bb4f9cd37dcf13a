// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "polyem/errors.hpp"
#include "polyem/euler/euler.hpp"

using namespace polyem;
using exact::Monomial;
using exact::Scalar;
using exact::SPoly;
using genfun::canonical_equal;
using genfun::MeroFun;
using genfun::taylor_at_zero;
using geom::Cone;
using geom::Polytope;
using interp::ComplementMap;
using interp::Kind;
using lattice::LatticeContext;
using lattice::QMatrix;
using lattice::RatVector;
using lattice::SMatrix;
using lattice::SVector;
using lattice::operator+;
using lattice::operator*;

namespace {

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  int total() const { return total_; }
  std::string summary() const {
    std::ostringstream s;
    s << total_ - failed_ << "/" << total_ << " checks";
    for (const auto& f : failures_) s << "; " << f;
    return s.str();
  }

 private:
  int total_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

RatVector rv(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Scalar q(long a, long b = 1) { return Scalar(a, b); }
const Scalar d1 = Scalar::parameter(0), d2 = Scalar::parameter(1);
const Scalar pa = Scalar::parameter(0), pb = Scalar::parameter(1), pc = Scalar::parameter(2);

ComplementMap symbolic_flag() { return ComplementMap::flag({{d1, d2}, {q(0), q(1)}}, {"d1", "d2"}); }

ComplementMap symbolic_inner() {
  SMatrix m(2, 2);
  m(0, 0) = pa;
  m(0, 1) = m(1, 0) = pb;
  m(1, 1) = pc;
  return ComplementMap::inner_product(m, {"a", "b", "c"});
}

Polytope triangle(long w) { return Polytope(LatticeContext(2), {rv({0, 0}), rv({w, 0}), rv({0, 1})}); }

Cone cone2(const RatVector& a, const RatVector& b) { return Cone(LatticeContext(2), rv({0, 0}), {a, b}); }

// Supp(P, v) translated to the origin.
Cone tangent_cone(const Polytope& p, const RatVector& vertex) {
  for (const auto& f : p.faces())
    if (f.dim == 0 && p.vertices()[f.vertices[0]] == vertex) {
      Cone k = geom::supporting_cone(p, f);
      return k.translated(mpq_class(-1) * k.apex());
    }
  throw std::logic_error("not a vertex");
}

Cone vertex_cone(const Polytope& p, const RatVector& vertex) {
  for (const auto& f : p.faces())
    if (f.dim == 0 && p.vertices()[f.vertices[0]] == vertex) return geom::supporting_cone(p, f);
  throw std::logic_error("not a vertex");
}

Polytope random_polytope(std::mt19937& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> c(lo, hi);
  std::uniform_int_distribution<std::size_t> extra(1, 3);
  std::size_t npts = n + extra(rng);
  std::vector<RatVector> pts;
  std::set<RatVector> seen;
  while (pts.size() < npts) {
    RatVector v(n);
    for (auto& x : v) x = c(rng);
    if (seen.insert(v).second) pts.push_back(v);
  }
  return Polytope(LatticeContext(n), pts);
}

Polytope random_polygon(std::mt19937& rng) {
  for (;;) {
    Polytope p = random_polytope(rng, 2, -3, 3);
    if (p.dim() == 2) return p;
  }
}

// A A^T + I with small rational entries in A.
SMatrix random_rational_q(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-3, 3), den(1, 3);
  SMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Scalar(num(rng), den(rng));
  SMatrix m = a * a.transpose();
  for (std::size_t i = 0; i < n; ++i) m(i, i) += Scalar(1);
  return m;
}

// Product of random elementary integer matrices and a random sign pattern.
QMatrix random_unimodular(std::mt19937& rng) {
  std::uniform_int_distribution<long> c(-2, 2);
  std::bernoulli_distribution coin(0.5);
  QMatrix g = QMatrix::from_rows({{1, 0}, {0, 1}});
  for (int step = 0; step < 4; ++step) {
    QMatrix e = QMatrix::from_rows({{1, 0}, {0, 1}});
    if (coin(rng))
      e(0, 1) = c(rng);
    else
      e(1, 0) = c(rng);
    g = g * e;
  }
  if (coin(rng)) g = g * QMatrix::from_rows({{0, 1}, {1, 0}});
  return g;
}

Cone random_lattice_cone2(std::mt19937& rng) {
  std::uniform_int_distribution<long> c(-4, 4);
  for (;;) {
    RatVector a = rv({c(rng), c(rng)}), b = rv({c(rng), c(rng)});
    if (a[0] * b[1] - a[1] * b[0] != 0) return cone2(a, b);
  }
}

std::vector<Monomial> monomials_up_to(std::size_t n, int deg) {
  std::vector<Monomial> out{Monomial{}};
  for (int d = 1; d <= deg; ++d) {
    std::vector<Monomial> next;
    for (const auto& m : out)
      if (m.degree() == d - 1)
        for (std::size_t i = 0; i < n; ++i) {
          Monomial x = m * Monomial::variable(i);
          if (std::find(next.begin(), next.end(), x) == next.end()) next.push_back(x);
        }
    out.insert(out.end(), next.begin(), next.end());
  }
  return out;
}

mpz_class factorial(int k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return f;
}

SPoly random_poly(std::mt19937& rng, int deg) {
  std::uniform_int_distribution<long> c(-3, 3);
  SPoly h;
  for (const auto& m : monomials_up_to(2, deg)) h += SPoly::term(m, Scalar(1)).scaled(Scalar(c(rng)));
  return h;
}

// The faces of K as cones with the apex of K.
std::vector<std::pair<geom::ConeFace, Cone>> face_cones(const Cone& k) {
  std::vector<std::pair<geom::ConeFace, Cone>> out;
  for (const auto& f : k.faces()) {
    std::vector<RatVector> gens;
    for (auto i : f.rays) gens.push_back(k.generators()[i]);
    out.emplace_back(f, Cone(k.lattice(), k.apex(), gens, k.lineality()));
  }
  return out;
}

// ---- criteria -----------------------------------------------------------------

void bernoulli(Check& c) {
  Scalar expected[6] = {q(1, 2), q(-1, 12), q(0), q(1, 720), q(0), q(-1, 30240)};
  auto series = exact::bernoulli_series(5);
  Cone ray(LatticeContext(1), rv({0}), {rv({1})});
  auto from_mu = taylor_at_zero(interp::mu(ComplementMap::standard(1), ray), 5);
  for (int k = 0; k <= 5; ++k) {
    Monomial m = k == 0 ? Monomial{} : Monomial::variable(0, k);
    c.expect(series.coefficient(m) == expected[k], "B_" + std::to_string(k) + " of the series");
    c.expect(from_mu.coefficient(m) == expected[k], "B_" + std::to_string(k) + " of mu(ray)");
  }
}

void brion(Check& c) {
  std::mt19937 rng(2024);
  for (int iter = 0; iter < 50; ++iter) {
    std::size_t n = 1 + iter % 3;
    Polytope p = random_polytope(rng, n, -5, 5);
    c.expect(canonical_equal(genfun::s_of(p), genfun::from_exppoly(genfun::brute_force_sum(p))),
             "S(P) vs enumeration, polytope " + std::to_string(iter));
    auto t = taylor_at_zero(genfun::i_of(p), 3);
    for (const auto& m : monomials_up_to(n, 3)) {
      mpz_class fact = 1;
      for (std::size_t i = 0; i < n; ++i) fact *= factorial(m.exp[i]);
      Scalar direct = euler::integrate_poly_over_face(SPoly::term(m, Scalar(1)), p) * Scalar(mpq_class(1, fact));
      c.expect(t.coefficient(m) == direct, "Taylor of I(P), polytope " + std::to_string(iter));
    }
  }
}

void example1(Check& c) {
  auto psi = symbolic_flag();
  Polytope p = triangle(1);
  RatVector verts[3] = {rv({0, 0}), rv({1, 0}), rv({0, 1})};
  Scalar expected[3] = {(d1 * d1 + d2 * d2 + q(3) * d1 * d2) / (q(12) * d1 * d2),
                        (q(5) * d1 * d1 - q(5) * d1 * d2 + d2 * d2) / (q(12) * d1 * (d1 - d2)),
                        (q(5) * d2 * d2 - q(5) * d1 * d2 + d1 * d1) / (q(12) * d2 * (d2 - d1))};
  Scalar sum(0);
  for (int i = 0; i < 3; ++i) {
    Scalar c0 = interp::constant_term(psi, tangent_cone(p, verts[i]));
    c.expect(c0 == expected[i], "mu^L_0(K" + std::to_string(i) + ") = " + c0.to_string({"d1", "d2"}));
    sum += c0;
  }
  c.expect(sum == q(1), "sum of constants");
  auto s = taylor_at_zero(interp::mu(psi, cone2(rv({1, 0}), rv({0, 1}))), 1);
  c.expect(s.coefficient(Monomial::variable(0)) == q(-1, 24), "xi1 coefficient of mu^L(K0)");
}

void example2(Check& c) {
  auto psi = symbolic_inner();
  Polytope p = triangle(1);
  RatVector verts[3] = {rv({0, 0}), rv({1, 0}), rv({0, 1})};
  const Scalar &a = pa, &b = pb, &cc = pc;
  Scalar expected[3] = {
      (q(3) * a * cc - a * b - b * cc) / (q(12) * a * cc),
      (a * b + q(4) * a * cc + q(10) * b * cc + q(2) * b * b + q(5) * cc * cc) /
          (q(12) * (a * cc + q(2) * b * cc + cc * cc)),
      (q(5) * a * a + q(2) * b * b + q(10) * a * b + q(4) * a * cc + b * cc) / (q(12) * (a * a + q(2) * a * b + a * cc))};
  Scalar standard[3] = {q(1, 4), q(3, 8), q(3, 8)};
  Scalar sum(0);
  for (int i = 0; i < 3; ++i) {
    Cone k = tangent_cone(p, verts[i]);
    Scalar c0 = interp::constant_term(psi, k);
    c.expect(c0 == expected[i], "mu^Q_0(K" + std::to_string(i) + ")");
    c.expect(interp::constant_term(ComplementMap::standard(2), k) == standard[i], "standard constant");
    sum += c0;
  }
  c.expect(sum == q(1), "sum of symbolic constants");
  std::mt19937 rng(77);
  for (int trial = 0; trial < 5; ++trial) {
    QMatrix g = random_unimodular(rng);
    Cone k = cone2(g * rv({1, 0}), g * rv({0, 1}));
    auto qpsi = ComplementMap::inner_product(random_rational_q(rng, 2));
    const auto& gens = k.generators();
    SVector r1 = lattice::to_scalars(lattice::primitive_normal({gens[0]}, gens[1], k.lattice()));
    SVector r2 = lattice::to_scalars(lattice::primitive_normal({gens[1]}, gens[0], k.lattice()));
    auto form = [&](const SVector& x, const SVector& y) { return lattice::dot(x, qpsi.matrix() * y); };
    Scalar ptip = q(1, 4) - form(r1, r2) / q(12) * (form(r1, r1).inverse() + form(r2, r2).inverse());
    c.expect(interp::constant_term(qpsi, k) == ptip, "unimodular cone formula, trial " + std::to_string(trial));
  }
}

void examples34(Check& c) {
  Polytope p = triangle(2);
  RatVector verts[3] = {rv({0, 0}), rv({2, 0}), rv({0, 1})};
  auto flag = symbolic_flag();
  auto inner = symbolic_inner();
  const Scalar &a = pa, &b = pb, &cc = pc;
  Scalar ex3[3] = {(d1 * d1 + q(3) * d1 * d2 + d2 * d2) / (q(12) * d1 * d2),
                   (q(11) * d1 * d1 - q(7) * d1 * d2 + d2 * d2) / (q(12) * d1 * (q(2) * d1 - d2)),
                   (d1 * d1 - q(4) * d1 * d2 + q(2) * d2 * d2) / (q(-6) * d2 * (q(2) * d1 - d2))};
  Scalar ex4[3] = {(q(3) * a * cc - a * b - b * cc) / (q(12) * a * cc),
                   (a * b + q(5) * a * cc + q(4) * b * b + q(25) * b * cc + q(22) * cc * cc) /
                       (q(12) * (a * cc + q(4) * b * cc + q(4) * cc * cc)),
                   (q(2) * a * a + q(8) * a * b + q(7) * a * cc + q(2) * b * b + q(2) * b * cc) /
                       (q(6) * (a * a + q(4) * a * b + q(4) * a * cc))};
  Scalar standard[3] = {q(1, 4), q(9, 20), q(3, 10)};
  for (int i = 0; i < 3; ++i) {
    Cone k = tangent_cone(p, verts[i]);
    c.expect(interp::constant_term(flag, k) == ex3[i], "flag constant " + std::to_string(i));
    c.expect(interp::constant_term(inner, k) == ex4[i], "symbolic inner-product constant " + std::to_string(i));
    c.expect(interp::constant_term(ComplementMap::standard(2), k) == standard[i],
             "standard constant " + std::to_string(i));
  }
  for (const auto& psi : {flag, inner, ComplementMap::standard(2), ComplementMap::flag({{q(1), q(3)}, {q(0), q(1)}})})
    c.expect(euler::count_lattice_points(psi, p).total == q(4), "count = 4 under " + psi.to_string());
}

void interpolator(Check& c) {
  for (long w : {1, 2})
    for (const auto& psi : {symbolic_flag(), symbolic_inner()})
      c.expect(canonical_equal(interp::face_expansion(Kind::mu, psi, triangle(w)), genfun::s_of(triangle(w))),
               "triangle " + std::to_string(w) + " under " + psi.to_string());
  std::mt19937 rng(31);
  auto numeric_flag = ComplementMap::flag({{q(3), q(7)}, {q(0), q(1)}});
  int done = 0;
  while (done < 20) {
    Polytope p = random_polygon(rng);
    std::vector<ComplementMap> maps = {ComplementMap::standard(2),
                                       ComplementMap::inner_product(random_rational_q(rng, 2)), numeric_flag};
    try {
      interp::default_engine().audit(numeric_flag, tangent_cone(p, p.vertices()[0]));
      for (const auto& f : p.faces()) interp::default_engine().audit(numeric_flag, geom::supporting_cone(p, f));
    } catch (const GenericityError&) {
      maps.pop_back();  // this polygon is not generic for the flag
    }
    MeroFun s = genfun::s_of(p);
    for (const auto& psi : maps)
      c.expect(canonical_equal(interp::face_expansion(Kind::mu, psi, p), s),
               "random polygon " + std::to_string(done) + " under " + psi.to_string());
    ++done;
  }
}

void reverse_side(Check& c) {
  std::mt19937 rng(41);
  std::vector<Cone> cones = {cone2(rv({1, 0}), rv({0, 1})), cone2(rv({-1, 0}), rv({-2, 1})),
                             cone2(rv({0, -1}), rv({2, -1})),
                             Cone(LatticeContext(2), rv({1, 0}), {rv({0, 1})}, {rv({1, 0})}),
                             Cone(LatticeContext(3), rv({0, 0, 0}), {rv({1, 0, 0}), rv({0, 1, 0}), rv({1, 1, 2})})};
  for (int i = 0; i < 5; ++i) cones.push_back(random_lattice_cone2(rng));
  for (const auto& k : cones) {
    const std::size_t n = k.ambient_dim();
    std::vector<ComplementMap> maps = {ComplementMap::standard(n)};
    if (n == 2) maps.push_back(symbolic_flag());
    for (const auto& psi : maps) {
      MeroFun lsum(n), nsum(n);
      for (const auto& [f, fc] : face_cones(k)) {
        MeroFun m = interp::mu(psi, geom::supporting_cone(k, f));
        lsum += interp::lambda(psi, fc) * m;
        nsum += interp::nu(psi, fc) * m;
      }
      c.expect(canonical_equal(lsum, MeroFun(n)), "sum lambda(F) mu(Supp) = 0");
      c.expect(canonical_equal(nsum, MeroFun::constant(n, q(1))), "sum nu(F) mu(Supp) = 1");
    }
  }
  auto id = ComplementMap::standard(2);
  Scalar first[3] = {q(1, 4), q(1, 8), q(1, 8)};
  Scalar second[3] = {q(1, 4), q(1, 20), q(1, 5)};
  RatVector v1[3] = {rv({0, 0}), rv({1, 0}), rv({0, 1})};
  RatVector v2[3] = {rv({0, 0}), rv({2, 0}), rv({0, 1})};
  for (int i = 0; i < 3; ++i) {
    c.expect(interp::constant_term(id, vertex_cone(triangle(1), v1[i]), Kind::nu) == first[i], "nu constant, triangle 1");
    c.expect(interp::constant_term(id, vertex_cone(triangle(2), v2[i]), Kind::nu) == second[i], "nu constant, triangle 2");
  }
  Cone edge(LatticeContext(2), rv({1, 0}), {rv({0, 1})}, {rv({1, 0})});
  c.expect(interp::constant_term(id, edge, Kind::nu) == q(1, 2), "nu constant at the edge point");
  c.expect(euler::em_integral_interior(id, triangle(1), SPoly(q(1))).total == q(1, 2), "1/4 + 1/8 + 1/8 = 1/2");
  c.expect(euler::em_integral_interior(id, triangle(2), SPoly(q(1))).total == q(1), "1/4 + 1/20 + 1/5 + 1/2 = 1");
  for (int trial = 0; trial < 20; ++trial) {
    Polytope p = random_polygon(rng);
    SPoly h = random_poly(rng, 3);
    Scalar direct = euler::integrate_poly_over_face(h, p);
    for (const auto& psi : {id, ComplementMap::inner_product(random_rational_q(rng, 2))})
      c.expect(euler::em_integral(psi, p, h).total == direct, "EM22 on random polygon " + std::to_string(trial));
  }
}

void morelli(Check& c) {
  std::mt19937 rng(53);
  int inner_done = 0, flag_done = 0;
  while (inner_done < 20 || flag_done < 20) {
    Cone k = random_lattice_cone2(rng);
    if (inner_done < 20) {
      auto r = interp::morelli_duality_check(ComplementMap::inner_product(random_rational_q(rng, 2)), k);
      c.expect(r.agree, "inner product: " + r.nu0.to_string() + " vs " + r.mu_dual0.to_string());
      ++inner_done;
    }
    if (flag_done < 20) {
      try {
        auto r = interp::morelli_duality_check(symbolic_flag(), k);
        c.expect(r.agree, "symbolic flag: " + r.nu0.to_string({"d1", "d2"}) + " vs " +
                              r.mu_dual0.to_string({"d1", "d2"}));
        ++flag_done;
      } catch (const GenericityError&) {
      }
    }
  }
}

void properties(Check& c) {
  auto flag = symbolic_flag();
  auto inner = symbolic_inner();
  // additivity: K2 = C1 ∪ C2 along the ray (1,-1)
  Cone ray(LatticeContext(2), rv({0, 0}), {rv({1, -1})});
  for (const auto& psi : {flag, inner}) {
    MeroFun split = interp::mu(psi, cone2(rv({0, -1}), rv({1, -1}))) +
                    interp::mu(psi, cone2(rv({1, -1}), rv({2, -1}))) - interp::mu(psi, ray);
    c.expect(canonical_equal(interp::mu(psi, cone2(rv({0, -1}), rv({2, -1}))), split), "additivity");
  }
  // lattice invariance, including a non-standard lattice
  std::mt19937 rng(61);
  LatticeContext sheared(QMatrix::from_rows({{2, 1}, {0, 1}}), "sheared");
  for (int i = 0; i < 5; ++i) {
    Cone k = random_lattice_cone2(rng);
    c.expect(canonical_equal(interp::mu(inner, k.translated(rv({3, -2}))), interp::mu(inner, k)), "translation by Z^2");
    Cone ks(sheared, rv({0, 0}), k.generators());
    c.expect(canonical_equal(interp::mu(inner, ks.translated(rv({2, 0}))), interp::mu(inner, ks)),
             "translation in the sheared lattice");
  }
  // isometry equivariance
  for (int i = 0; i < 10; ++i) {
    QMatrix g = random_unimodular(rng);
    Cone k = random_lattice_cone2(rng);
    Cone gk = cone2(g * k.generators()[0], g * k.generators()[1]);
    SMatrix ginv = lattice::to_scalar(lattice::inverse(g));
    for (const auto& psi : {flag, inner}) {
      try {
        MeroFun lhs = genfun::pullback(interp::mu(psi.transformed(g), gk), ginv);
        c.expect(canonical_equal(lhs, interp::mu(psi, k)), "isometry " + std::to_string(i));
      } catch (const GenericityError&) {
        // g moved the flag onto a face of gK; the statement needs a generic map
      }
    }
  }
  // regularity
  for (int i = 0; i < 10; ++i) {
    Cone k = random_lattice_cone2(rng);
    for (const auto& psi : {inner, ComplementMap::standard(2)}) {
      bool regular = true;
      try {
        taylor_at_zero(interp::mu(psi, k), 2);
        taylor_at_zero(interp::nu(psi, k), 2);
        taylor_at_zero(interp::lambda(psi, k), 2);
      } catch (const GenuinePoleError&) {
        regular = false;
      }
      c.expect(regular, "regularity at 0");
    }
  }
  // residues along a ray of simplicial 3-cones
  std::uniform_int_distribution<long> r3(-3, 3);
  LatticeContext z3(3);
  int tested = 0;
  while (tested < 10) {
    std::vector<RatVector> g = {rv({r3(rng), r3(rng), r3(rng)}), rv({r3(rng), r3(rng), r3(rng)}),
                                rv({r3(rng), r3(rng), r3(rng)})};
    if (lattice::rank(lattice::rows_matrix(g, 3)) != 3) continue;
    Cone k(z3, rv({0, 0, 0}), g);
    geom::ConeFace first_ray;
    for (const auto& f : k.faces())
      if (f.rays == std::vector<std::size_t>{0}) first_ray = f;
    auto [qd, kbar] = geom::transverse_cone(k, first_ray);
    const RatVector& v1 = k.generators()[0];
    c.expect(canonical_equal(genfun::residue_along(genfun::s_of(k), v1, z3), -genfun::s_of(kbar)), "residue of S");
    c.expect(canonical_equal(genfun::residue_along(genfun::i_of(k), v1, z3), -genfun::i_of(kbar)), "residue of I");
    ++tested;
  }
  // half-open decompositions: every probe point is covered exactly once
  std::vector<std::pair<Cone, std::vector<RatVector>>> cases = {
      {Cone(LatticeContext(2), rv({0, 1}), {rv({0, -1}), rv({2, -1})}), {rv({1, -1})}},
      {Cone(z3, rv({1, 0, 0}), {rv({1, 0, 1}), rv({0, 1, 1}), rv({-1, 0, 1}), rv({0, -1, 1})}), {rv({1, 1, 2})}},
      {Cone(z3, rv({0, 0, 0}), {rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1}), rv({1, 1, -1})}), {}}};
  for (const auto& [k, extra] : cases) {
    auto pieces = extra.empty() ? geom::halfopen_decompose(k) : geom::halfopen_decompose(k, extra);
    const std::size_t n = k.ambient_dim();
    std::vector<long> idx(n, -6);
    int wrong = 0, probes = 0;
    for (;;) {
      RatVector x(n);
      for (std::size_t i = 0; i < n; ++i) x[i] = mpq_class(idx[i], 2);
      int covered = 0;
      for (const auto& p : pieces) covered += geom::contains(p, x);
      wrong += covered != (k.contains(x) ? 1 : 0);
      ++probes;
      std::size_t i = 0;
      while (i < n && ++idx[i] > 6) idx[i++] = -6;
      if (i == n) break;
    }
    c.expect(wrong == 0, std::to_string(wrong) + " of " + std::to_string(probes) + " probes miscovered");
  }
}

void exclusions(Check& c) {
  std::cout << "  excluded: the conjectured constant-term coincidence in all dimensions, Morelli's\n"
               "  dimension <= 4 range and its failure above 4, toric-variety quantities.\n";
  // Dimension-3 spot check of nu(K)(0) = mu*(K^v)(0), reported only.
  std::mt19937 rng(71);
  std::uniform_int_distribution<long> r(-2, 2);
  auto psi = ComplementMap::standard(3);
  int agree = 0, total = 0;
  while (total < 5) {
    std::vector<RatVector> g = {rv({r(rng), r(rng), r(rng)}), rv({r(rng), r(rng), r(rng)}),
                                rv({r(rng), r(rng), r(rng)})};
    if (lattice::rank(lattice::rows_matrix(g, 3)) != 3) continue;
    Cone k(LatticeContext(3), rv({0, 0, 0}), g);
    Scalar nu0 = interp::constant_term(psi, k, Kind::nu);
    Scalar mu0 = interp::constant_term(psi.dual(), geom::dual_cone(k), Kind::mu);
    agree += nu0 == mu0;
    ++total;
    std::cout << "  dim 3 cone " << total << ": nu(K)(0) = " << nu0.to_string()
              << ", mu*(K^v)(0) = " << mu0.to_string() << (nu0 == mu0 ? " (coincide)" : " (differ)") << '\n';
  }
  std::cout << "  dim 3 coincidences: " << agree << "/" << total << " (reported, not asserted)\n";
  c.expect(total == 5, "spot checks ran");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<void(Check&)> run;
    double limit_s;
  };
  const std::vector<Criterion> criteria = {
      {1, "Bernoulli series coefficients", bernoulli, 1},
      {2, "Brion sums and face integrals on 50 random polytopes", brion, 120},
      {3, "flag constants on the unit triangle", example1, 0},
      {4, "inner-product constants and the unimodular formula", example2, 0},
      {5, "singular triangle constants and lattice point count", examples34, 0},
      {6, "interpolator identity", interpolator, 300},
      {7, "Moebius identities, nu volumes, reverse Euler-Maclaurin", reverse_side, 0},
      {8, "Morelli duality on random 2D cones", morelli, 0},
      {9, "property suites", properties, 0},
      {10, "exclusions reported", exclusions, 0},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    std::string error;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = cr.limit_s <= 0 || secs < cr.limit_s;
    bool ok = error.empty() && c.ok() && c.total() > 0 && in_time;
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " [" << cr.id << "] " << cr.name << " (" << std::fixed
              << std::setprecision(2) << secs << " s";
    if (cr.limit_s > 0) std::cout << ", limit " << std::setprecision(0) << cr.limit_s << " s";
    std::cout << "): " << c.summary();
    if (!error.empty()) std::cout << "; error: " << error;
    std::cout << '\n' << std::defaultfloat;
  }
  return failed == 0 ? 0 : 1;
}

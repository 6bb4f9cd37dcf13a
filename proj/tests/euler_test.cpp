#include <gtest/gtest.h>

#include <random>

#include "polyem/errors.hpp"
#include "polyem/euler/euler.hpp"
#include "polyem/exactmath/parse.hpp"

namespace polyem::euler {
namespace {

using lattice::LatticeContext;
using lattice::RatVector;
using lattice::SMatrix;

RatVector rv(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Scalar q(long a, long b = 1) { return Scalar(a, b); }

PolyFunc poly(const char* text, std::size_t n = 2) {
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  return exact::parse_polynomial(text, vars);
}

Polytope triangle(long w) { return Polytope(LatticeContext(2), {rv({0, 0}), rv({w, 0}), rv({0, 1})}); }

ComplementMap symbolic_flag() {
  return ComplementMap::flag({{Scalar::parameter(0), Scalar::parameter(1)}, {q(0), q(1)}}, {"d1", "d2"});
}

Polytope random_polygon(std::mt19937& rng, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<long> c(lo, hi);
  for (;;) {
    std::vector<RatVector> pts;
    for (int i = 0; i < 5; ++i) {
      RatVector x = rv({c(rng), c(rng)});
      if (std::find(pts.begin(), pts.end(), x) == pts.end()) pts.push_back(x);
    }
    Polytope p(LatticeContext(2), pts);
    if (p.dim() == 2) return p;
  }
}

TEST(Integrate, FacesAndSimplices) {
  LatticeContext lat(2);
  EXPECT_EQ(integrate_poly_over_face(poly("1"), Polytope(lat, {rv({0, 0}), rv({2, 0})})), q(2));
  EXPECT_EQ(integrate_poly_over_face(poly("1"), triangle(1)), q(1, 2));
  EXPECT_EQ(integrate_poly_over_face(poly("x1*x2"), triangle(1)), q(1, 24));
  // Dirichlet oracle a! b! / (a+b+2)!
  EXPECT_EQ(integrate_poly_over_face(poly("x1^3*x2^2"), triangle(1)), q(6 * 2, 5040));
  // a diagonal edge has relative lattice length 1 per primitive step
  EXPECT_EQ(integrate_poly_over_face(poly("1"), Polytope(lat, {rv({0, 0}), rv({3, 3})})), q(3));
  EXPECT_EQ(integrate_poly_over_face(poly("x1 + x2"), Polytope(lat, {rv({1, 2})})), q(3));
  // a square: two simplices
  Polytope sq(lat, {rv({0, 0}), rv({2, 0}), rv({0, 2}), rv({2, 2})});
  EXPECT_EQ(integrate_poly_over_face(poly("x1^2"), sq), q(16, 3));
  LatticeContext lat3(3);
  Polytope tet(lat3, {rv({0, 0, 0}), rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})});
  EXPECT_EQ(integrate_poly_over_face(poly("1", 3), tet), q(1, 6));
  EXPECT_EQ(integrate_poly_over_face(poly("x1*x2*x3", 3), tet), q(1, 720));
  Polytope flat(lat3, {rv({0, 0, 1}), rv({1, 0, 1}), rv({0, 1, 1})});
  EXPECT_EQ(integrate_poly_over_face(poly("x3", 3), flat), q(1, 2));
}

TEST(ApplyOperator, Differentiation) {
  auto s = exact::TruncSeries::constant(2, 2, q(3));
  EXPECT_EQ(apply_operator(DiffOperator(s), poly("x1 + x2")), poly("3*x1 + 3*x2"));
  exact::TruncSeries t(2, 2);
  t.set_coefficient(exact::Monomial::variable(0), q(-1, 24));
  EXPECT_EQ(apply_operator(DiffOperator(t), poly("x1^2")), poly("-x1/12"));
}

TEST(EmSum, PaperTriangles) {
  auto id = ComplementMap::standard(2);
  EXPECT_EQ(count_lattice_points(id, triangle(2)).total, q(4));
  EXPECT_EQ(count_lattice_points(id, triangle(1)).total, q(3));
  auto sym = count_lattice_points(symbolic_flag(), triangle(2));
  EXPECT_EQ(sym.total, q(4));
  int vertex_terms = 0;
  for (const auto& f : sym.faces)
    if (f.face.dim == 0) {
      ++vertex_terms;
      EXPECT_FALSE(f.weight.is_rational());
    }
  EXPECT_EQ(vertex_terms, 3);
  auto weights = count_lattice_points(id, triangle(2));
  std::vector<Scalar> vertex_weights;
  for (const auto& f : weights.faces)
    if (f.face.dim == 0) vertex_weights.push_back(f.weight);
  std::sort(vertex_weights.begin(), vertex_weights.end(),
            [](const Scalar& a, const Scalar& b) { return a.rational() < b.rational(); });
  EXPECT_EQ(vertex_weights, (std::vector<Scalar>{q(1, 4), q(3, 10), q(9, 20)}));
}

TEST(EmSum, SegmentIsClassicalEulerMaclaurin) {
  LatticeContext lat(1);
  auto psi = ComplementMap::standard(1);
  for (long n : {1, 4, 7}) {
    Polytope seg(lat, {rv({0}), rv({n})});
    EXPECT_EQ(count_lattice_points(psi, seg).total, q(n + 1));
    EXPECT_EQ(em_sum(psi, seg, poly("x1", 1)).total, q(n * (n + 1) / 2));
    EXPECT_EQ(em_sum(psi, seg, poly("x1^3 - 2*x1", 1)).total, q(n * n * (n + 1) * (n + 1) / 4 - n * (n + 1)));
  }
}

TEST(EmSum, RandomPolygonsAgainstBruteForce) {
  std::mt19937 rng(11);
  SMatrix qm(2, 2);
  qm(0, 0) = q(3);
  qm(0, 1) = qm(1, 0) = q(1);
  qm(1, 1) = q(2);
  std::vector<ComplementMap> maps = {ComplementMap::standard(2), ComplementMap::inner_product(qm),
                                     ComplementMap::flag({{q(3), q(7)}, {q(0), q(1)}})};
  for (int trial = 0; trial < 5; ++trial) {
    Polytope p = random_polygon(rng);
    PolyFunc h = poly("x1^2 + x2");
    Oracles o = brute_force_oracles(p, h);
    for (const auto& psi : maps) {
      EXPECT_EQ(em_sum(psi, p, h).total, o.sum_h);
      EXPECT_EQ(count_lattice_points(psi, p).total, o.count);
      EXPECT_EQ(em_integral(psi, p, poly("x1")).total, integrate_poly_over_face(poly("x1"), p));
      EXPECT_EQ(em_integral_interior(psi, p, h).total, o.integral);
    }
    // Pick's formula
    EXPECT_EQ(o.count, o.volume + o.boundary_count * q(1, 2) + q(1));
  }
}

TEST(EmSum, ThreeDimensionalSimplices) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> c(-2, 2);
  auto psi = ComplementMap::standard(3);
  int done = 0;
  while (done < 2) {
    Polytope p(LatticeContext(3), {rv({c(rng), c(rng), c(rng)}), rv({c(rng), c(rng), c(rng)}),
                                   rv({c(rng), c(rng), c(rng)}), rv({c(rng), c(rng), c(rng)})});
    if (p.dim() != 3) continue;
    ++done;
    Oracles o = brute_force_oracles(p, poly("x1*x2 + x3", 3));
    EXPECT_EQ(count_lattice_points(psi, p).total, o.count);
    EXPECT_EQ(em_sum(psi, p, poly("x1*x2 + x3", 3)).total, o.sum_h);
    EXPECT_EQ(volume(psi, p).total, o.volume);
  }
}

TEST(EmIntegral, ExampleNuVolumes) {
  auto id = ComplementMap::standard(2);
  EXPECT_EQ(em_integral_interior(id, triangle(1), poly("1")).total, q(1, 2));
  auto second = em_integral_interior(id, triangle(2), poly("1"));
  EXPECT_EQ(second.total, q(1));
  for (const auto& f : second.faces)
    if (f.face.dim == 1 && f.measure == q(1)) EXPECT_EQ(f.weight, q(1, 2));
  EXPECT_EQ(volume(id, triangle(2)).total, q(1));
  EXPECT_EQ(volume(symbolic_flag(), triangle(2)).total, q(1));
  Polytope rational(LatticeContext(2), {RatVector{0, 0}, RatVector{mpq_class(1, 2), 0}, RatVector{0, 1}});
  EXPECT_THROW(volume(id, rational), DomainError);
}

}  // namespace
}  // namespace polyem::euler

#include <gtest/gtest.h>

#include <cstdlib>
#include <random>
#include <set>

#include "polyem/errors.hpp"
#include "polyem/geometry/geometry.hpp"

using namespace polyem;
using namespace polyem::geom;
using polyem::lattice::QMatrix;
using polyem::lattice::operator+;
using polyem::lattice::operator-;

namespace {

RatVector V(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::vector<int> face_counts(const Polytope& p) {
  std::vector<int> c(p.dim() + 1, 0);
  for (const auto& f : p.faces()) ++c[f.dim];
  return c;
}

// Probe grid of lattice points (and half-integers) in [-r, r]^n.
std::vector<RatVector> grid(std::size_t n, long r, long denom) {
  std::vector<RatVector> out;
  std::vector<long> c(n, -r * denom);
  while (true) {
    RatVector v;
    for (long x : c) v.emplace_back(mpq_class(x, denom));
    for (auto& x : v) x.canonicalize();
    out.push_back(v);
    std::size_t i = 0;
    while (i < n && c[i] == r * denom) c[i++] = -r * denom;
    if (i == n) return out;
    ++c[i];
  }
}

}  // namespace

TEST(HToV, Quadrant) {
  auto d = h_to_v(2, {}, {V({1, 0}), V({0, 1})});
  EXPECT_TRUE(d.lineality.empty());
  ASSERT_EQ(d.rays.size(), 2u);
  EXPECT_EQ(d.rays[0], V({0, 1}));
  EXPECT_EQ(d.rays[1], V({1, 0}));
}

TEST(HToV, HalfPlaneHasLineality) {
  auto d = h_to_v(2, {}, {V({0, 1})});
  ASSERT_EQ(d.lineality.size(), 1u);
  ASSERT_EQ(d.rays.size(), 1u);
  EXPECT_EQ(d.rays[0], V({0, 1}));
}

TEST(Polytope, UnitTriangleFaces) {
  LatticeContext z2(2);
  Polytope t(z2, {V({0, 0}), V({1, 0}), V({0, 1})});
  EXPECT_EQ(t.dim(), 2);
  EXPECT_EQ(t.faces().size(), 7u);
  EXPECT_EQ(face_counts(t), (std::vector<int>{3, 3, 1}));
  EXPECT_TRUE(t.contains(V({0, 0})));
  EXPECT_FALSE(t.relative_interior_contains(V({0, 0})));
  EXPECT_EQ(lattice_points(t).size(), 3u);
}

TEST(Polytope, DropsNonExtremePoints) {
  LatticeContext z2(2);
  Polytope sq(z2, {V({0, 0}), V({2, 0}), V({1, 0}), V({0, 2}), V({2, 2}), V({1, 1})});
  EXPECT_EQ(sq.vertices().size(), 4u);
  EXPECT_EQ(face_counts(sq), (std::vector<int>{4, 4, 1}));
  EXPECT_EQ(lattice_points(sq).size(), 9u);
  EXPECT_THROW(Polytope(z2, {V({0, 0}), V({0, 0})}), DomainError);
}

TEST(Polytope, LowerDimensional) {
  LatticeContext z3(3);
  Polytope seg(z3, {V({0, 0, 0}), V({2, 2, 2})});
  EXPECT_EQ(seg.dim(), 1);
  EXPECT_EQ(seg.equations().size(), 2u);
  EXPECT_EQ(lattice_points(seg).size(), 3u);
  EXPECT_TRUE(seg.relative_interior_contains(V({1, 1, 1})));
  Polytope pt(z3, {V({1, 2, 3})});
  EXPECT_EQ(pt.dim(), 0);
  EXPECT_EQ(pt.faces().size(), 1u);
}

TEST(Polytope, RandomSimplicesHaveSimplexFaceCounts) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> c(-5, 5);
  LatticeContext z3(3);
  int tested = 0;
  while (tested < 10) {
    std::vector<RatVector> pts;
    for (int i = 0; i < 4; ++i) pts.push_back(V({c(rng), c(rng), c(rng)}));
    std::vector<RatVector> d = {pts[1] - pts[0], pts[2] - pts[0], pts[3] - pts[0]};
    if (lattice::rank(lattice::rows_matrix(d, 3)) != 3) continue;
    Polytope p(z3, pts);
    EXPECT_EQ(face_counts(p), (std::vector<int>{4, 6, 4, 1}));
    ++tested;
  }
}

TEST(Polytope, EulerCharacteristicOfRandomHulls) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> c(-5, 5);
  LatticeContext z3(3);
  for (int iter = 0; iter < 10; ++iter) {
    std::vector<RatVector> pts;
    std::set<RatVector> seen;
    while (pts.size() < 7) {
      RatVector v = V({c(rng), c(rng), c(rng)});
      if (seen.insert(v).second) pts.push_back(v);
    }
    Polytope p(z3, pts);
    auto fc = face_counts(p);
    long chi = 0;
    for (int k = 0; k <= p.dim(); ++k) chi += (k % 2 ? -1 : 1) * fc[k];
    EXPECT_EQ(chi, 1);
    // every inequality is tight on at least dim vertices
    for (const auto& [w, off] : p.facet_inequalities()) {
      int tight = 0;
      for (const auto& v : p.vertices()) {
        EXPECT_GE(lattice::dot(w, v), off);
        if (lattice::dot(w, v) == off) ++tight;
      }
      EXPECT_GE(tight, p.dim());
    }
  }
}

TEST(SupportingCone, TriangleVertices) {
  LatticeContext z2(2);
  Polytope t(z2, {V({0, 0}), V({2, 0}), V({0, 1})});
  for (const auto& f : t.faces()) {
    if (f.dim != 0) continue;
    Cone k = supporting_cone(t, f);
    EXPECT_TRUE(k.pointed());
    EXPECT_TRUE(k.simplicial());
    if (t.vertices()[f.vertices[0]] == V({0, 1})) {
      EXPECT_EQ(k.generators(), (std::vector<RatVector>{V({0, -1}), V({2, -1})}));
      EXPECT_EQ(k.apex(), V({0, 1}));
    }
    if (t.vertices()[f.vertices[0]] == V({0, 0})) {
      EXPECT_EQ(k.generators(), (std::vector<RatVector>{V({0, 1}), V({1, 0})}));
    }
  }
}

TEST(SupportingCone, EdgeHasLineality) {
  LatticeContext z2(2);
  Polytope t(z2, {V({0, 0}), V({2, 0}), V({0, 1})});
  for (const auto& f : t.faces()) {
    if (f.dim != 1) continue;
    Cone k = supporting_cone(t, f);
    EXPECT_EQ(k.lineality().size(), 1u);
    EXPECT_EQ(k.generators().size(), 1u);
    EXPECT_EQ(k.dim(), 2);
    // half-plane containing the triangle
    for (const auto& v : t.vertices()) EXPECT_TRUE(k.contains(v));
  }
  Cone whole = supporting_cone(t, t.faces().front());
  EXPECT_EQ(whole.lineality().size(), 2u);
  EXPECT_TRUE(whole.generators().empty());
}

TEST(Cone, FacesOfQuadrantAndNonSimplicial) {
  LatticeContext z3(3);
  Cone q(z3, V({0, 0, 0}), {V({1, 0, 0}), V({0, 1, 0}), V({0, 0, 1})});
  EXPECT_EQ(q.faces().size(), 8u);
  Cone sq(z3, V({0, 0, 0}), {V({1, 0, 1}), V({0, 1, 1}), V({-1, 0, 1}), V({0, -1, 1}), V({0, 0, 1})});
  EXPECT_EQ(sq.generators().size(), 4u);  // (0,0,1) is not extreme
  EXPECT_EQ(sq.faces().size(), 10u);      // 1 + 4 + 4 + 1
  EXPECT_FALSE(sq.simplicial());
  EXPECT_TRUE(sq.contains(V({0, 0, 5})));
  EXPECT_TRUE(sq.relative_interior_contains(V({0, 0, 5})));
  EXPECT_FALSE(sq.contains(V({2, 0, 1})));
}

TEST(Cone, GeneratorsArePrimitive) {
  LatticeContext z2(2);
  Cone k(z2, V({0, 0}), {V({4, 2}), V({0, 3})});
  EXPECT_EQ(k.generators(), (std::vector<RatVector>{V({0, 1}), V({2, 1})}));
  LatticeContext lat(QMatrix::from_rows({{2, 0}, {0, 1}}), "2Z x Z");
  Cone k2(lat, V({0, 0}), {V({1, 0}), V({0, 1})});
  EXPECT_EQ(k2.generators(), (std::vector<RatVector>{V({0, 1}), V({2, 0})}));
}

TEST(Cone, TransverseCone) {
  LatticeContext z3(3);
  Cone q(z3, V({0, 0, 0}), {V({1, 0, 0}), V({0, 1, 0}), V({1, 1, 2})});
  for (const auto& f : q.faces()) {
    auto [qd, t] = transverse_cone(q, f);
    EXPECT_EQ(static_cast<int>(t.ambient_dim()), 3 - f.dim);
    EXPECT_TRUE(t.pointed());
    EXPECT_EQ(t.dim(), 3 - f.dim);
  }
}

TEST(Cone, DoubleDualIsIdentity) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> c(-4, 4);
  LatticeContext z3(3);
  for (int iter = 0; iter < 15; ++iter) {
    std::vector<RatVector> gens;
    for (int i = 0; i < 3 + iter % 3; ++i) gens.push_back(V({c(rng), c(rng), c(rng)}));
    Cone k(z3, V({0, 0, 0}), gens);
    Cone dd = dual_cone(dual_cone(k));
    EXPECT_EQ(dd.generators(), k.generators());
    EXPECT_EQ(dd.lineality().size(), k.lineality().size());
    EXPECT_EQ(dd.dim(), k.dim());
  }
}

TEST(HalfOpen, K2SplitsIntoTwoPieces) {
  LatticeContext z2(2);
  Cone k2(z2, V({0, 1}), {V({0, -1}), V({2, -1})});
  auto pieces = halfopen_decompose(k2, {V({1, -1})});
  ASSERT_EQ(pieces.size(), 2u);
  int open_count = 0;
  for (const auto& p : pieces)
    for (bool o : p.open) open_count += o;
  EXPECT_EQ(open_count, 1);
  for (const auto& x : grid(2, 4, 2)) {
    int n = 0;
    for (const auto& p : pieces) n += contains(p, x);
    EXPECT_EQ(n, k2.contains(x) ? 1 : 0) << lattice::to_string(x);
  }
  EXPECT_THROW(halfopen_decompose(k2, {V({1, 1})}), DomainError);
}

TEST(HalfOpen, IndicatorSumsOnNonSimplicialCones) {
  LatticeContext z2(2), z3(3);
  Cone four(z2, V({0, 0}), {V({1, 0}), V({2, 1}), V({1, 2}), V({0, 1})});
  auto p2 = halfopen_decompose(four);
  EXPECT_EQ(p2.size(), 1u);  // (2,1),(1,2) are not extreme in 2D
  Cone fan2(z2, V({0, 0}), {V({1, -1}), V({-1, 1})}, {});
  EXPECT_THROW(halfopen_decompose(fan2), DomainError);  // a line: not pointed

  Cone sq(z3, V({1, 0, 0}), {V({1, 0, 1}), V({0, 1, 1}), V({-1, 0, 1}), V({0, -1, 1})});
  auto pieces = halfopen_decompose(sq, {V({1, 1, 2})});
  EXPECT_GE(pieces.size(), 3u);
  auto probes = grid(3, 3, 2);
  ASSERT_GE(probes.size(), 1000u);
  for (const auto& x : probes) {
    int n = 0;
    for (const auto& p : pieces) n += contains(p, x);
    EXPECT_EQ(n, sq.contains(x) ? 1 : 0) << lattice::to_string(x);
  }
}

TEST(HalfOpen, FourRaySplitIntoThree) {
  LatticeContext z2(2);
  Cone k(z2, V({0, 0}), {V({1, 0}), V({0, 1})});
  auto pieces = halfopen_decompose(k, {V({2, 1}), V({1, 2})});
  EXPECT_EQ(pieces.size(), 3u);
  for (const auto& x : grid(2, 5, 3)) {
    int n = 0;
    for (const auto& p : pieces) n += contains(p, x);
    EXPECT_EQ(n, k.contains(x) ? 1 : 0);
  }
}

TEST(BoxPoints, CountEqualsRelativeVolume) {
  std::mt19937 rng(13);
  std::uniform_int_distribution<long> c(-4, 4);
  LatticeContext z3(3);
  for (int iter = 0; iter < 30; ++iter) {
    std::size_t k = 1 + iter % 3;
    std::vector<RatVector> gens;
    for (std::size_t i = 0; i < k; ++i) gens.push_back(V({c(rng), c(rng), c(rng)}));
    if (lattice::rank(lattice::rows_matrix(gens, 3)) != k) continue;
    std::vector<bool> open(k);
    for (std::size_t i = 0; i < k; ++i) open[i] = (iter >> i) & 1;
    auto pts = box_points(V({0, 0, 0}), gens, open, z3);
    EXPECT_EQ(mpq_class(static_cast<long>(pts.size())), lattice::relative_volume(gens, z3));
  }
  // apex off the lattice affine hull: no points
  EXPECT_TRUE(box_points(V({0, 0, 0}) + RatVector{mpq_class(1, 2), 0, 0}, {V({0, 1, 0})}, {false}, z3).empty());
}

TEST(BoxPoints, SizeGuard) {
  LatticeContext z2(2);
  setenv("POLYEM_MAX_ENUM", "10", 1);
  EXPECT_THROW(box_points(V({0, 0}), {V({7, 0}), V({0, 7})}, {false, false}, z2), SizeGuardError);
  unsetenv("POLYEM_MAX_ENUM");
  EXPECT_EQ(box_points(V({0, 0}), {V({7, 0}), V({0, 7})}, {false, false}, z2).size(), 49u);
}

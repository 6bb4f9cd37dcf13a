#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "polyem/errors.hpp"
#include "polyem/genfun/genfun.hpp"

using namespace polyem;
using namespace polyem::genfun;
using lattice::LatticeContext;
using lattice::to_scalars;
using lattice::operator+;

namespace {

RatVector V(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

SVector S(std::initializer_list<long> xs) { return to_scalars(V(xs)); }

// c e^<xi,a> / prod(1 - e^<xi,w>)
MeroFun exp_term(long c, SVector a, std::vector<SVector> exp_dens, std::vector<SVector> lin_dens = {}) {
  MeroFun f(a.size());
  f.add_term({Scalar(c), std::move(a), std::move(lin_dens), std::move(exp_dens)});
  return f;
}

MeroFun finite_sum(std::initializer_list<std::initializer_list<long>> pts) {
  MeroFun f;
  bool first = true;
  for (auto p : pts) {
    MeroFun e = MeroFun::exponential(V(p));
    if (first) {
      f = e;
      first = false;
    } else {
      f += e;
    }
  }
  return f;
}

Polytope random_polytope(std::mt19937& rng, std::size_t n, std::size_t npts) {
  std::uniform_int_distribution<long> c(-3, 3);
  std::vector<RatVector> pts;
  std::set<RatVector> seen;
  while (pts.size() < npts) {
    RatVector v(n);
    for (auto& x : v) x = c(rng);
    if (seen.insert(v).second) pts.push_back(v);
  }
  return Polytope(LatticeContext(n), pts);
}

}  // namespace

TEST(MeroFun, CanonicalFormMergesAndOrients) {
  MeroFun f = exp_term(1, S({0}), {S({-1})});  // 1/(1-e^{-xi}) = -e^{xi}/(1-e^{xi})
  MeroFun g = exp_term(-1, S({1}), {S({1})});
  EXPECT_TRUE(canonical_equal(f, g));
  MeroFun zero_term = exp_term(0, S({3}), {S({1})});
  EXPECT_TRUE(canonical_equal(f, f + zero_term));
  EXPECT_TRUE((f - f).canonical().is_zero());
  EXPECT_FALSE(canonical_equal(f, f.scaled(Scalar(2))));
  // 1/(1-e^x) - e^x/(1-e^x) = 1
  MeroFun one = exp_term(1, S({0}), {S({1})}) - exp_term(1, S({1}), {S({1})});
  EXPECT_TRUE(canonical_equal(one, MeroFun::constant(1, Scalar(1))));
}

TEST(MeroFun, Rendering) {
  MeroFun f = exp_term(1, S({1, -1}), {S({0, -1}), S({2, -1})});
  EXPECT_EQ(f.to_string(), "exp(xi1 - xi2)/((1 - exp(-xi2))*(1 - exp(2*xi1 - xi2)))");
  MeroFun g = exp_term(-2, S({0, 0}), {}, {S({1, 0})});
  EXPECT_EQ(g.to_string(), "-2/xi1");
  EXPECT_EQ(MeroFun(2).to_string(), "0");
}

TEST(Simplicial, BasicCones) {
  LatticeContext z1(1), z2(2);
  auto ray = geom::halfopen_decompose(Cone(z1, V({0}), {V({1})}));
  EXPECT_TRUE(canonical_equal(s_simplicial(ray[0], z1), exp_term(1, S({0}), {S({1})})));
  Cone quad(z2, V({0, 0}), {V({1, 0}), V({0, 1})});
  EXPECT_TRUE(canonical_equal(s_of(quad), exp_term(1, S({0, 0}), {S({1, 0}), S({0, 1})})));
  EXPECT_TRUE(canonical_equal(i_simplicial(Cone(z1, V({0}), {V({1})})), exp_term(-1, S({0}), {}, {S({1})})));
  EXPECT_TRUE(canonical_equal(i_simplicial(quad), exp_term(1, S({0, 0}), {}, {S({1, 0}), S({0, 1})})));
  Cone shifted(z2, V({1, 0}), {V({1, 0}), V({0, 1})});
  EXPECT_TRUE(canonical_equal(i_of(shifted), i_of(quad).times_exp(S({1, 0}))));
}

TEST(Simplicial, K2ExponentialSum) {
  LatticeContext z2(2);
  Cone k2(z2, V({0, 0}), {V({0, -1}), V({2, -1})});
  MeroFun expected = exp_term(1, S({0, 0}), {S({0, -1}), S({2, -1})}) +
                     exp_term(1, S({1, -1}), {S({0, -1}), S({2, -1})});
  EXPECT_TRUE(canonical_equal(s_of(k2), expected));
  // recombining the two half-open pieces of the split along (1,-1)
  MeroFun pieces(2);
  for (const auto& p : geom::halfopen_decompose(k2, {V({1, -1})})) pieces += s_simplicial(p, z2);
  EXPECT_TRUE(canonical_equal(pieces, expected));
}

TEST(Brion, PaperTriangles) {
  LatticeContext z2(2);
  Polytope t1(z2, {V({0, 0}), V({1, 0}), V({0, 1})});
  EXPECT_TRUE(canonical_equal(s_of(t1), finite_sum({{0, 0}, {1, 0}, {0, 1}})));
  Polytope t3(z2, {V({0, 0}), V({2, 0}), V({0, 1})});
  EXPECT_TRUE(canonical_equal(s_of(t3), finite_sum({{0, 0}, {1, 0}, {2, 0}, {0, 1}})));
  Cone plane(z2, V({0, 0}), {V({1, 0}), V({-1, 0}), V({0, 1}), V({0, -1})});
  EXPECT_TRUE(s_of(plane).is_zero());
  EXPECT_TRUE(i_of(plane).is_zero());
}

TEST(Brion, RationalVerticesAndNonStandardLattice) {
  LatticeContext z2(2);
  Polytope p(z2, {V({0, 0}), RatVector{mpq_class(5, 2), 0}, V({0, 1})});
  EXPECT_TRUE(canonical_equal(s_of(p), from_exppoly(brute_force_sum(p))));
  LatticeContext lat(lattice::QMatrix::from_rows({{2, 1}, {0, 1}}), "sheared");
  Polytope q(lat, {V({0, 0}), V({4, 0}), V({0, 3})});
  EXPECT_TRUE(canonical_equal(s_of(q), from_exppoly(brute_force_sum(q))));
}

TEST(Brion, RandomPolytopesMatchEnumeration) {
  std::mt19937 rng(3);
  for (int iter = 0; iter < 12; ++iter) {
    std::size_t n = 1 + iter % 3;
    Polytope p = random_polytope(rng, n, n + 2);
    EXPECT_TRUE(canonical_equal(s_of(p), from_exppoly(brute_force_sum(p)))) << iter;
    // Taylor of S(P) equals the Taylor series of the finite sum up to order 4
    TruncSeries a = taylor_at_zero(s_of(p), 4);
    TruncSeries b = taylor_at_zero(from_exppoly(brute_force_sum(p)), 4);
    EXPECT_TRUE((a - b).is_zero_up_to(4));
  }
}

TEST(Interior, Examples) {
  LatticeContext z1(1), z2(2);
  EXPECT_TRUE(canonical_equal(s_interior(Polytope(z1, {V({0}), V({2})})), MeroFun::exponential(V({1}))));
  EXPECT_TRUE(canonical_equal(s_interior(Polytope(z2, {V({0, 0}), V({1, 0}), V({0, 1})})), MeroFun(2)));
  EXPECT_TRUE(canonical_equal(s_interior(Polytope(z2, {V({0, 0}), V({3, 0}), V({0, 3})})),
                              MeroFun::exponential(V({1, 1}))));
  Cone quad(z2, V({0, 0}), {V({1, 0}), V({0, 1})});
  EXPECT_TRUE(canonical_equal(s_interior(quad), exp_term(1, S({1, 1}), {S({1, 0}), S({0, 1})})));
}

TEST(Valuation, HalfOpenPiecesAndTranslation) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<long> c(-3, 3);
  LatticeContext z2(2);
  for (int iter = 0; iter < 10; ++iter) {
    RatVector g1 = V({c(rng), c(rng)}), g2 = V({c(rng), c(rng)});
    if (lattice::rank(lattice::rows_matrix({g1, g2}, 2)) != 2) continue;
    Cone k(z2, V({0, 0}), {g1, g2});
    RatVector mid = k.generators()[0] + k.generators()[1];
    MeroFun pieces(2);
    for (const auto& p : geom::halfopen_decompose(k, {mid})) pieces += s_simplicial(p, z2);
    EXPECT_TRUE(canonical_equal(pieces, s_of(k)));
    RatVector s = V({c(rng), c(rng)});
    EXPECT_TRUE(canonical_equal(s_of(k.translated(s)), s_of(k).times_exp(to_scalars(s))));
    RatVector half = {mpq_class(1, 2), mpq_class(-1, 3)};
    EXPECT_TRUE(canonical_equal(i_of(k.translated(half)), i_of(k).times_exp(to_scalars(half))));
  }
}

TEST(Numeric, ConeSumConverges) {
  LatticeContext z2(2);
  Cone k(z2, V({0, 0}), {V({1, 0}), V({1, 2})});
  RatVector xi = {mpq_class(-1, 2), mpq_class(-1, 3)};
  long double direct = 0;
  for (long y = 0; y <= 200; ++y)
    for (long x = 0; x <= 200; ++x)
      if (k.contains(V({x, y}))) direct += std::exp(-0.5L * x - y / 3.0L);
  EXPECT_NEAR(static_cast<double>(s_of(k).evaluate(xi)), static_cast<double>(direct), 1e-9);
}

TEST(Taylor, ExponentialAndBernoulli) {
  TruncSeries e = taylor_at_zero(MeroFun::exponential(V({2})), 4);
  EXPECT_EQ(e.coefficient(exact::Monomial::variable(0, 3)), Scalar(8, 6));
  MeroFun b = exp_term(1, S({0}), {S({1})}) + exp_term(1, S({0}), {}, {S({1})});
  TruncSeries t = taylor_at_zero(b, 6);
  TruncSeries ref = exact::bernoulli_series(6);
  EXPECT_TRUE((t - ref).is_zero_up_to(6));
  EXPECT_THROW(taylor_at_zero(exp_term(1, S({0}), {}, {S({1})}), 2), GenuinePoleError);
  EXPECT_THROW(taylor_at_zero(exp_term(1, S({0, 0}), {S({1, 1})}), 1), GenuinePoleError);
}

TEST(Taylor, TwoVariableBernoulliProduct) {
  // (1/(1-e^x1) + 1/x1) (1/(1-e^x2) + 1/x2) = B(x1) B(x2)
  MeroFun b1 = exp_term(1, S({0, 0}), {S({1, 0})}) + exp_term(1, S({0, 0}), {}, {S({1, 0})});
  MeroFun b2 = exp_term(1, S({0, 0}), {S({0, 1})}) + exp_term(1, S({0, 0}), {}, {S({0, 1})});
  TruncSeries t = taylor_at_zero(b1 * b2, 4);
  EXPECT_EQ(t.coefficient(exact::Monomial{}), Scalar(1, 4));
  exact::Monomial x1x2 = exact::Monomial::variable(0) * exact::Monomial::variable(1);
  EXPECT_EQ(t.coefficient(x1x2), Scalar(1, 144));
  EXPECT_EQ(t.coefficient(exact::Monomial::variable(0, 3) * exact::Monomial::variable(1)), Scalar(-1, 720 * 12));
}

TEST(Residue, Examples) {
  LatticeContext z2(2);
  MeroFun f = s_of(Cone(z2, V({0, 0}), {V({1, 0}), V({0, 1})}));
  MeroFun r = residue_along(f, V({1, 0}), z2);
  EXPECT_TRUE(canonical_equal(r, exp_term(-1, S({0}), {S({1})})));
  MeroFun reg = exp_term(1, S({0, 0}), {S({0, 1})});
  EXPECT_TRUE(residue_along(reg, V({1, 0}), z2).is_zero());
  MeroFun double_pole = exp_term(1, S({0, 0}), {S({1, 0}), S({2, 0})});
  EXPECT_THROW(residue_along(double_pole, V({1, 0}), z2), DomainError);
}

TEST(Residue, RandomSimplicialConesSatisfyA5b) {
  std::mt19937 rng(21);
  std::uniform_int_distribution<long> c(-3, 3);
  LatticeContext z3(3);
  int tested = 0;
  while (tested < 10) {
    std::vector<RatVector> g = {V({c(rng), c(rng), c(rng)}), V({c(rng), c(rng), c(rng)}),
                                V({c(rng), c(rng), c(rng)})};
    if (lattice::rank(lattice::rows_matrix(g, 3)) != 3) continue;
    Cone k(z3, V({0, 0, 0}), g);
    const RatVector& v1 = k.generators()[0];
    geom::ConeFace ray;
    for (const auto& f : k.faces())
      if (f.rays == std::vector<std::size_t>{0}) ray = f;
    auto [q, kbar] = geom::transverse_cone(k, ray);
    EXPECT_TRUE(canonical_equal(residue_along(s_of(k), v1, z3), -s_of(kbar)));
    EXPECT_TRUE(canonical_equal(residue_along(i_of(k), v1, z3), -i_of(kbar)));
    ++tested;
  }
}

TEST(Pullback, IdentityAndProjection) {
  LatticeContext z2(2);
  MeroFun f = s_of(Cone(z2, V({0, 0}), {V({1, 0}), V({1, 2})}));
  lattice::SMatrix id = lattice::SMatrix::identity(2);
  EXPECT_TRUE(canonical_equal(pullback(f, id), f));
  // B(eta) pulled back along eta = <xi, (1, 2)>
  MeroFun b = exp_term(1, S({0}), {S({1})}) + exp_term(1, S({0}), {}, {S({1})});
  lattice::SMatrix t(2, 1);
  t(0, 0) = 1;
  t(1, 0) = 2;
  MeroFun pb = pullback(b, t);
  MeroFun expected = exp_term(1, S({0, 0}), {S({1, 2})}) + exp_term(1, S({0, 0}), {}, {S({1, 2})});
  EXPECT_TRUE(canonical_equal(pb, expected));
  EXPECT_EQ(pb.dim(), 2u);
}

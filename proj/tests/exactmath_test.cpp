#include <gtest/gtest.h>

#include <random>

#include "polyem/errors.hpp"
#include "polyem/exactmath/parse.hpp"
#include "polyem/exactmath/scalar.hpp"
#include "polyem/exactmath/series.hpp"
#include "polyem/exactmath/zpoly.hpp"

using namespace polyem;
using namespace polyem::exact;

namespace {

const std::vector<std::string> kD = {"d1", "d2"};
const std::vector<std::string> kABC = {"a", "b", "c"};

Scalar S(const char* text, const std::vector<std::string>& names = kABC) {
  return parse_scalar(text, names);
}

ZPoly random_zpoly(std::mt19937& rng, int nvars, int max_deg, int nterms) {
  std::uniform_int_distribution<int> coef(-4, 4), deg(0, max_deg), var(0, nvars - 1);
  std::vector<ZPoly::Term> ts;
  for (int t = 0; t < nterms; ++t) {
    Monomial m;
    int d = deg(rng);
    for (int k = 0; k < d; ++k) ++m.exp[var(rng)];
    ts.emplace_back(m, coef(rng));
  }
  return ZPoly::from_terms(ts);
}

Scalar random_scalar(std::mt19937& rng) {
  ZPoly den;
  while (den.is_zero()) den = random_zpoly(rng, 3, 2, 2);
  return Scalar::fraction(random_zpoly(rng, 3, 2, 3), den);
}

TruncSeries random_series(std::mt19937& rng, int nvars, int order, bool unit_constant) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  TruncSeries s(nvars, order);
  for (std::size_t i = 0; i < s.size(); ++i) s.set_coefficient(s.monomial_at(i), Scalar(num(rng), den(rng)));
  if (unit_constant) s.set_coefficient(Monomial{}, Scalar(1));
  return s;
}

}  // namespace

TEST(ZPoly, ArithmeticAndPrinting) {
  ZPoly d1 = ZPoly::variable(0), d2 = ZPoly::variable(1);
  ZPoly p = d1 * d1 + ZPoly(3) * d1 * d2 + d2 * d2;
  EXPECT_EQ(p.to_string(kD), "d1^2 + 3*d1*d2 + d2^2");
  EXPECT_EQ((p - p).is_zero(), true);
  EXPECT_EQ((d1 - d2).to_string(kD), "d1 - d2");
  auto q = (p * (d1 - d2)).divide_exact(d1 - d2);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, p);
  EXPECT_FALSE(p.divide_exact(d1 - d2).has_value());
}

TEST(ZPoly, GcdRecoversCommonFactor) {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 60; ++iter) {
    ZPoly a = random_zpoly(rng, 3, 2, 3), b = random_zpoly(rng, 3, 2, 3), c = random_zpoly(rng, 3, 2, 2);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    ZPoly g = gcd(a * c, b * c);
    // c | g and g | a*c, g | b*c
    EXPECT_TRUE(g.divide_exact(c).has_value() || g.divide_exact(-c).has_value());
    EXPECT_TRUE((a * c).divide_exact(g).has_value());
    EXPECT_TRUE((b * c).divide_exact(g).has_value());
    // cofactors are coprime
    ZPoly h = gcd(*(a * c).divide_exact(g), *(b * c).divide_exact(g));
    EXPECT_TRUE(h.is_constant() && h.constant_value() == 1) << h.to_string(kABC);
  }
}

TEST(Scalar, CanonicalForm) {
  Scalar s = S("(d1^2 + d2^2 + 3*d1*d2)/(12*d1*d2)", kD);
  EXPECT_EQ(s.to_string(kD), "(d1^2 + 3*d1*d2 + d2^2)/(12*d1*d2)");
  Scalar t = S("(2*d1^2 - 2*d2^2)/(4*d1 + 4*d2)", kD);
  EXPECT_EQ(t.to_string(kD), "(d1 - d2)/2");
  EXPECT_EQ(S("(d1 - d2)/(d2 - d1)", kD), Scalar(-1));
  EXPECT_TRUE(S("d1/d1", kD).is_rational());
  EXPECT_EQ(S("6/4"), Scalar(3, 2));
  EXPECT_EQ(S("1/(-d1)", kD).to_string(kD), "-1/d1");
}

TEST(Scalar, FieldAxiomsOnRandomInputs) {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 40; ++iter) {
    Scalar x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x - x, Scalar());
    if (!x.is_zero()) {
      EXPECT_EQ(x * x.inverse(), Scalar(1));
      EXPECT_EQ(x.inverse().inverse(), x);
    }
  }
}

TEST(Scalar, ParseErrors) {
  EXPECT_THROW(parse_scalar("d3", kD), ParseError);
  EXPECT_THROW(parse_scalar("1/0"), ParseError);
  EXPECT_THROW(parse_scalar("(1"), ParseError);
  EXPECT_EQ(parse_polynomial("x1^2 + x2/3", {"x1", "x2"}).to_string({"x1", "x2"}), "x1^2 + 1/3*x2");
}

TEST(Series, DifferenceOfSquares) {
  TruncSeries a = TruncSeries::from_poly(parse_polynomial("1 + x", {"x"}), 1, 2);
  TruncSeries b = TruncSeries::from_poly(parse_polynomial("1 - x", {"x"}), 1, 2);
  EXPECT_EQ((a * b).to_poly(), parse_polynomial("1 - x^2", {"x"}));
}

TEST(Series, ProductMatchesNaiveConvolution) {
  std::mt19937 rng(3);
  for (int iter = 0; iter < 10; ++iter) {
    TruncSeries p = random_series(rng, 3, 3, false), q = random_series(rng, 3, 3, false);
    TruncSeries r = series_arith(p, q, SeriesOp::mul);
    for (std::size_t k = 0; k < r.size(); ++k) {
      Scalar expected;
      const Monomial& mk = r.monomial_at(k);
      for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j)
          if (p.monomial_at(i) * q.monomial_at(j) == mk) expected += p.at(i) * q.at(j);
      EXPECT_EQ(r.at(k), expected);
    }
  }
}

TEST(Series, MismatchedVariablesRejected) {
  EXPECT_THROW(TruncSeries(1, 2) + TruncSeries(2, 2), DomainError);
}

TEST(Series, GeometricInverse) {
  TruncSeries s = TruncSeries::from_poly(parse_polynomial("1 + x", {"x"}), 1, 6);
  EXPECT_EQ(series_invert(s).to_poly(), parse_polynomial("1 - x + x^2 - x^3 + x^4 - x^5 + x^6", {"x"}));
  EXPECT_THROW(series_invert(TruncSeries(1, 3)), DomainError);
}

TEST(Series, InverseRoundTrip) {
  std::mt19937 rng(5);
  for (int iter = 0; iter < 5; ++iter) {
    TruncSeries s = random_series(rng, 2, 5, true);
    TruncSeries r = series_invert(s);
    EXPECT_EQ(series_invert(r).to_poly(), s.to_poly());
    EXPECT_EQ((s * r).to_poly(), SPoly(Scalar(1)));
  }
}

TEST(Series, InvertingExpQuotientGivesBernoulli) {
  // (1 - e^z)/(-z) = 1 + z/2 + z^2/6 + ...; invert, negate, divide by z.
  const int n = 8;
  TruncSeries u(1, n + 1);
  const auto& e = exp_coefficients(n + 2);
  for (int k = 0; k <= n + 1; ++k) u.set_coefficient(Monomial::variable(0, k), Scalar(e[k + 1]));
  TruncSeries inv = series_invert(u);
  // 1/(1-e^z) = -inv/z, so B(z) = -(inv - 1)/z.
  TruncSeries num = -(inv - TruncSeries::constant(1, n + 1, Scalar(1)));
  TruncSeries b = divide_by_linear_form(num, {Scalar(1)});
  EXPECT_EQ(b.to_poly(), bernoulli_series(n).to_poly());
  EXPECT_EQ(b.valid_order(), n);
}

TEST(Series, DivideByLinearForm) {
  std::vector<std::string> v = {"x1", "x2"};
  TruncSeries s = TruncSeries::from_poly(parse_polynomial("x1*x2 + x1^2", v), 2, 3);
  TruncSeries q = divide_by_linear_form(s, {Scalar(1), Scalar(0)});
  EXPECT_EQ(q.to_poly(), parse_polynomial("x1 + x2", v));
  EXPECT_EQ(q.valid_order(), 2);
  TruncSeries bad = TruncSeries::from_poly(parse_polynomial("x2^2", v), 2, 3);
  EXPECT_THROW(divide_by_linear_form(bad, {Scalar(1), Scalar(0)}), NonDivisibleError);
}

TEST(Series, LinearFormTimesBernoulliDivides) {
  const int n = 6;
  std::vector<Scalar> v = {Scalar(1), Scalar(1)};
  TruncSeries b = compose_with_linear_form(
      [&] {
        std::vector<mpq_class> c;
        TruncSeries bs = bernoulli_series(n + 1);
        for (int k = 0; k <= n + 1; ++k) c.push_back(bs.coefficient(Monomial::variable(0, k)).rational());
        return c;
      }(),
      v, n + 1);
  TruncSeries q = divide_by_linear_form(b.times_linear_form(v), v);
  EXPECT_EQ(q.truncated(n).to_poly(), b.truncated(n).to_poly());
}

TEST(Series, MultiplyDivideRoundTrip) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int iter = 0; iter < 10; ++iter) {
    TruncSeries p = random_series(rng, 3, 4, false);
    std::vector<Scalar> l = {Scalar(c(rng)), Scalar(c(rng)), Scalar(c(rng))};
    if (l[0].is_zero() && l[1].is_zero() && l[2].is_zero()) l[1] = Scalar(1);
    TruncSeries q = divide_by_linear_form(p.times_linear_form(l), l);
    EXPECT_EQ(q.valid_order(), 3);
    EXPECT_EQ(q.to_poly(), p.truncated(3).to_poly());
  }
}

TEST(Series, SymbolicLinearForm) {
  std::vector<Scalar> l = {S("d1", kD), S("d2/(d1 - d2)", kD)};
  TruncSeries p = TruncSeries::from_poly(parse_polynomial("1 + 2*x1 - x2^2", {"x1", "x2"}), 2, 4);
  TruncSeries q = divide_by_linear_form(p.times_linear_form(l), l);
  EXPECT_EQ(q.to_poly(), p.truncated(3).to_poly());
}

TEST(Bernoulli, Coefficients) {
  TruncSeries b = bernoulli_series(5);
  const Scalar expected[] = {Scalar(1, 2), Scalar(-1, 12), Scalar(0), Scalar(1, 720), Scalar(0), Scalar(-1, 30240)};
  for (int k = 0; k <= 5; ++k) EXPECT_EQ(b.coefficient(Monomial::variable(0, k)), expected[k]) << k;
  EXPECT_EQ(bernoulli_series(0).constant_term(), Scalar(1, 2));
}

TEST(Bernoulli, ReflectionIdentity) {
  for (int n = 0; n <= 12; ++n) {
    TruncSeries b = bernoulli_series(n);
    for (int k = 0; k <= n; ++k) {
      Scalar c = b.coefficient(Monomial::variable(0, k));
      Scalar sum = (k % 2 == 0) ? c + c : Scalar();  // B(z) + B(-z)
      EXPECT_EQ(sum, k == 0 ? Scalar(1) : Scalar());
      if (k % 2 == 0 && k > 0) EXPECT_TRUE(c.is_zero());
    }
  }
}

#include "polyem/genfun/merofun.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <tuple>

#include "polyem/errors.hpp"

namespace polyem::genfun {

using exact::Monomial;

std::strong_ordering structural_compare(const SVector& a, const SVector& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (auto c = structural_compare(a[i], b[i]); c != 0) return c;
  return std::strong_ordering::equal;
}

namespace {

SVector negated(const SVector& v) {
  SVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(-x);
  return r;
}

SVector vec_add(const SVector& a, const SVector& b) {
  if (a.size() != b.size()) throw DomainError("vector dimension mismatch");
  SVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool is_zero_vec(const SVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

std::strong_ordering compare_lists(const std::vector<SVector>& a, const std::vector<SVector>& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (auto c = structural_compare(a[i], b[i]); c != 0) return c;
  return std::strong_ordering::equal;
}

/// Order on (point, lin_dens, exp_dens), ignoring the coefficient.
std::strong_ordering compare_shape(const Term& a, const Term& b) {
  if (auto c = structural_compare(a.point, b.point); c != 0) return c;
  if (auto c = compare_lists(a.lin_dens, b.lin_dens); c != 0) return c;
  return compare_lists(a.exp_dens, b.exp_dens);
}

void check_dim(const SVector& v, std::size_t n) {
  if (v.size() != n) throw DomainError("MeroFun vector has the wrong dimension");
}

std::vector<std::string> default_names(std::size_t n, const std::vector<std::string>& names) {
  if (!names.empty()) return names;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("xi" + std::to_string(i + 1));
  return out;
}

}  // namespace

// ---- MeroFun ----------------------------------------------------------------

MeroFun MeroFun::constant(std::size_t n, const Scalar& c) {
  MeroFun f(n);
  if (!c.is_zero()) f.terms_.push_back({c, SVector(n), {}, {}});
  return f;
}

MeroFun MeroFun::exponential(const SVector& a) {
  MeroFun f(a.size());
  f.terms_.push_back({Scalar(1), a, {}, {}});
  return f;
}

void MeroFun::add_term(Term t) {
  check_dim(t.point, n_);
  for (const auto& v : t.lin_dens) {
    check_dim(v, n_);
    if (is_zero_vec(v)) throw DomainError("zero linear-form denominator");
  }
  for (const auto& w : t.exp_dens) {
    check_dim(w, n_);
    if (is_zero_vec(w)) throw DomainError("zero exponential denominator");
  }
  if (!t.coeff.is_zero()) terms_.push_back(std::move(t));
}

MeroFun MeroFun::operator-() const { return scaled(Scalar(-1)); }

MeroFun operator+(const MeroFun& a, const MeroFun& b) {
  MeroFun r = a;
  r += b;
  return r;
}

MeroFun operator-(const MeroFun& a, const MeroFun& b) {
  MeroFun r = a;
  r -= b;
  return r;
}

MeroFun& MeroFun::operator+=(const MeroFun& o) {
  if (o.n_ != n_) throw DomainError("MeroFun dimension mismatch");
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

MeroFun& MeroFun::operator-=(const MeroFun& o) { return *this += -o; }

MeroFun operator*(const MeroFun& a, const MeroFun& b) {
  if (a.n_ != b.n_) throw DomainError("MeroFun dimension mismatch");
  MeroFun r(a.n_);
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      Term p{s.coeff * t.coeff, vec_add(s.point, t.point), s.lin_dens, s.exp_dens};
      p.lin_dens.insert(p.lin_dens.end(), t.lin_dens.begin(), t.lin_dens.end());
      p.exp_dens.insert(p.exp_dens.end(), t.exp_dens.begin(), t.exp_dens.end());
      if (!p.coeff.is_zero()) r.terms_.push_back(std::move(p));
    }
  return r;
}

MeroFun MeroFun::scaled(const Scalar& c) const {
  MeroFun r(n_);
  if (c.is_zero()) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

MeroFun MeroFun::times_exp(const SVector& a) const {
  check_dim(a, n_);
  MeroFun r = *this;
  for (auto& t : r.terms_) t.point = vec_add(t.point, a);
  return r;
}

MeroFun MeroFun::canonical() const {
  std::vector<Term> ts;
  for (Term t : terms_) {
    for (auto& v : t.lin_dens) {
      auto lead = std::find_if(v.begin(), v.end(), [](const Scalar& x) { return !x.is_zero(); });
      Scalar c = *lead;
      if (!c.is_one()) {
        for (auto& x : v) x /= c;
        t.coeff /= c;
      }
    }
    for (auto& w : t.exp_dens) {
      SVector m = negated(w);
      if (structural_compare(m, w) < 0) {
        // 1/(1-e^w) = -e^{-w}/(1-e^{-w})
        t.point = vec_add(t.point, m);
        t.coeff = -t.coeff;
        w = std::move(m);
      }
    }
    std::sort(t.lin_dens.begin(), t.lin_dens.end(), SVectorLess{});
    std::sort(t.exp_dens.begin(), t.exp_dens.end(), SVectorLess{});
    ts.push_back(std::move(t));
  }
  std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) { return compare_shape(a, b) < 0; });
  MeroFun r(n_);
  for (auto& t : ts) {
    if (!r.terms_.empty() && compare_shape(r.terms_.back(), t) == 0) {
      r.terms_.back().coeff += t.coeff;
      if (r.terms_.back().coeff.is_zero()) r.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      r.terms_.push_back(std::move(t));
    }
  }
  return r;
}

long double MeroFun::evaluate(const RatVector& xi, const std::vector<mpq_class>& params) const {
  auto num = [&](const Scalar& s) -> long double {
    auto v = s.evaluate(params);
    if (!v) throw DomainError("parameter values hit a pole of a coefficient");
    return v->get_d();
  };
  auto pair = [&](const SVector& v) {
    long double s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += xi[i].get_d() * num(v[i]);
    return s;
  };
  long double total = 0;
  for (const auto& t : terms_) {
    long double x = num(t.coeff) * std::exp(pair(t.point));
    for (const auto& v : t.lin_dens) x /= pair(v);
    for (const auto& w : t.exp_dens) x /= 1.0L - std::exp(pair(w));
    total += x;
  }
  return total;
}

std::string MeroFun::to_string(const std::vector<std::string>& var_names,
                               const std::vector<std::string>& param_names) const {
  if (terms_.empty()) return "0";
  auto names = default_names(n_, var_names);
  auto form = [&](const SVector& v) { return SPoly::linear(v).to_string(names, param_names); };
  auto wrap = [](const std::string& s) {
    return s.find_first_of(" */") == std::string::npos && s[0] != '-' ? s : "(" + s + ")";
  };
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    std::string c = t.coeff.to_string(param_names);
    bool neg = !c.empty() && c[0] == '-' && c.find_first_of(" ", 1) == std::string::npos;
    if (neg) c = c.substr(1);
    if (i == 0)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string body = wrap(c);
    if (!is_zero_vec(t.point)) body = (body == "1" ? "" : body + "*") + "exp(" + form(t.point) + ")";
    std::vector<std::string> dens;
    for (const auto& v : t.lin_dens) dens.push_back(wrap(form(v)));
    for (const auto& w : t.exp_dens) dens.push_back("(1 - exp(" + form(w) + "))");
    if (!dens.empty()) {
      std::string d = dens[0];
      for (std::size_t j = 1; j < dens.size(); ++j) d += "*" + dens[j];
      body += "/" + (dens.size() > 1 ? "(" + d + ")" : d);
    }
    out += body;
  }
  return out;
}

// ---- ExpPoly ----------------------------------------------------------------

void ExpPoly::add(const SVector& point, const SPoly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(point, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExpPoly operator+(const ExpPoly& a, const ExpPoly& b) {
  ExpPoly r = a;
  for (const auto& [pt, p] : b.terms_) r.add(pt, p);
  return r;
}

ExpPoly ExpPoly::times_linear_form(const SVector& v) const {
  ExpPoly r(n_);
  SPoly l = SPoly::linear(v);
  for (const auto& [pt, p] : terms_) r.add(pt, p * l);
  return r;
}

ExpPoly ExpPoly::times_one_minus_exp(const SVector& w) const {
  ExpPoly r = *this;
  for (const auto& [pt, p] : terms_) r.add(vec_add(pt, w), -p);
  return r;
}

ClearedFun clear_denominators(const MeroFun& f) {
  MeroFun c = f.canonical();
  std::map<SVector, int, SVectorLess> lin_max, exp_max;
  auto count = [](const std::vector<SVector>& vs) {
    std::map<SVector, int, SVectorLess> m;
    for (const auto& v : vs) ++m[v];
    return m;
  };
  // Terms sharing denominators are summed before clearing.
  std::map<std::pair<std::vector<SVector>, std::vector<SVector>>, ExpPoly,
           decltype([](const auto& a, const auto& b) {
             if (auto x = compare_lists(a.first, b.first); x != 0) return x < 0;
             return compare_lists(a.second, b.second) < 0;
           })>
      groups;
  for (const auto& t : c.terms()) {
    for (const auto& [v, k] : count(t.lin_dens)) lin_max[v] = std::max(lin_max[v], k);
    for (const auto& [v, k] : count(t.exp_dens)) exp_max[v] = std::max(exp_max[v], k);
    auto [it, _] = groups.try_emplace({t.lin_dens, t.exp_dens}, ExpPoly(c.dim()));
    it->second.add(t.point, SPoly(t.coeff));
  }
  ClearedFun out{ExpPoly(c.dim()), {}, {}};
  for (const auto& [v, k] : lin_max) out.lin_dens.insert(out.lin_dens.end(), k, v);
  for (const auto& [v, k] : exp_max) out.exp_dens.insert(out.exp_dens.end(), k, v);
  for (auto& [dens, num] : groups) {
    ExpPoly p = num;
    auto have_lin = count(dens.first), have_exp = count(dens.second);
    for (const auto& [v, k] : exp_max)
      for (int i = have_exp[v]; i < k; ++i) p = p.times_one_minus_exp(v);
    for (const auto& [v, k] : lin_max)
      for (int i = have_lin[v]; i < k; ++i) p = p.times_linear_form(v);
    out.numerator = out.numerator + p;
  }
  return out;
}

MeroFun from_exppoly(const ExpPoly& p) {
  // Graded order, x1 before x2: 1 + exp(xi1) + exp(xi2) + ...
  std::vector<std::pair<std::vector<mpq_class>, Scalar>> terms;
  for (const auto& [pt, poly] : p.terms()) {
    if (poly.total_degree() > 0) throw DomainError("from_exppoly: polynomial coefficients are not supported");
    std::vector<mpq_class> key{0};
    for (const auto& c : pt) {
      key[0] += c.rational();
      key.push_back(-c.rational());
    }
    terms.push_back({std::move(key), poly.coefficient(Monomial{})});
  }
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  MeroFun f(p.dim());
  for (auto& [key, c] : terms) {
    SVector pt;
    for (std::size_t i = 1; i < key.size(); ++i) pt.push_back(Scalar(mpq_class(-key[i])));
    f.add_term({c, pt, {}, {}});
  }
  return f;
}

bool canonical_equal(const MeroFun& f, const MeroFun& g) {
  if (f.dim() != g.dim()) throw DomainError("MeroFun dimension mismatch");
  MeroFun h = (f - g).canonical();
  if (h.is_zero()) return true;
  return clear_denominators(h).numerator.is_zero();
}

// ---- Taylor expansion -------------------------------------------------------

namespace {

std::vector<Monomial> monomials_of_degree(int n, int k) {
  std::vector<Monomial> out;
  Monomial m;
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == n - 1) {
      m.exp[var] = static_cast<std::uint16_t>(left);
      out.push_back(m);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m.exp[var] = static_cast<std::uint16_t>(e);
      rec(var + 1, left - e);
    }
    m.exp[var] = 0;
  };
  rec(0, k);
  return out;
}

mpq_class monomial_value(const Monomial& m, const RatVector& c) {
  mpq_class v = 1;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (int e = 0; e < m.exp[i]; ++e) v *= c[i];
  return v;
}

/// Laurent coefficients of f(t c) for powers -shift..order, as a vector
/// indexed by power + shift.
std::vector<Scalar> line_expansion(const MeroFun& f, const RatVector& c, int order, int shift) {
  std::vector<Scalar> acc(shift + order + 1);
  const SVector cs = lattice::to_scalars(c);
  for (const auto& t : f.terms()) {
    const int m = static_cast<int>(t.lin_dens.size() + t.exp_dens.size());
    const int top = order + m;
    Scalar pref = t.coeff;
    Scalar alpha = lattice::dot(cs, t.point);
    std::vector<Scalar> s(top + 1);
    const auto& ex = exact::exp_coefficients(top);
    Scalar pw(1);
    for (int j = 0; j <= top; ++j) {
      s[j] = pw * Scalar(ex[j]);
      pw *= alpha;
      if (pw.is_zero()) break;
    }
    const auto& todd = exact::todd_coefficients(top);
    for (const auto& w : t.exp_dens) {
      // 1/(1 - e^{t g}) = -(1/(t g)) * todd(t g)
      Scalar g = lattice::dot(cs, w);
      pref = -pref / g;
      std::vector<Scalar> h(top + 1);
      Scalar gp(1);
      for (int j = 0; j <= top; ++j) {
        h[j] = gp * Scalar(todd[j]);
        gp *= g;
      }
      std::vector<Scalar> r(top + 1);
      for (int i = 0; i <= top; ++i) {
        if (s[i].is_zero()) continue;
        for (int j = 0; i + j <= top; ++j)
          if (!h[j].is_zero()) r[i + j] += s[i] * h[j];
      }
      s = std::move(r);
    }
    for (const auto& v : t.lin_dens) pref /= lattice::dot(cs, v);
    for (int j = 0; j <= top; ++j) {
      int p = j - m;
      if (p < -shift) throw std::logic_error("line_expansion: shift too small");
      if (!s[j].is_zero()) acc[p + shift] += pref * s[j];
    }
  }
  return acc;
}

}  // namespace

TruncSeries taylor_at_zero(const MeroFun& f, int order) {
  const int n = static_cast<int>(f.dim());
  if (order < 0) throw DomainError("negative Taylor order");
  int shift = 0;
  std::vector<SVector> dens;
  for (const auto& t : f.terms()) {
    shift = std::max(shift, static_cast<int>(t.lin_dens.size() + t.exp_dens.size()));
    dens.insert(dens.end(), t.lin_dens.begin(), t.lin_dens.end());
    dens.insert(dens.end(), t.exp_dens.begin(), t.exp_dens.end());
  }
  TruncSeries out(n, order);
  if (n == 0) {
    Scalar c;
    for (const auto& t : f.terms()) {
      if (!t.lin_dens.empty() || !t.exp_dens.empty()) throw GenuinePoleError("pole in a 0-dimensional space");
      c += t.coeff;
    }
    out.set_coefficient(Monomial{}, c);
    return out;
  }
  // Directions avoiding every polar hyperplane; enough of them to
  // interpolate all homogeneous parts of degree <= order.
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<long> dist(-9, 9);
  std::vector<RatVector> pts;
  std::vector<std::vector<Monomial>> monos(order + 1);
  for (int k = 0; k <= order; ++k) monos[k] = monomials_of_degree(n, k);
  auto admissible = [&](const RatVector& c) {
    SVector cs = lattice::to_scalars(c);
    for (const auto& v : dens)
      if (lattice::dot(cs, v).is_zero()) return false;
    return true;
  };
  std::vector<std::vector<std::size_t>> rows(order + 1);
  auto full_rank = [&]() {
    for (int k = 0; k <= order; ++k) {
      lattice::QMatrix a(monos[k].size(), pts.size());
      for (std::size_t i = 0; i < monos[k].size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j) a(i, j) = monomial_value(monos[k][i], pts[j]);
      rows[k] = lattice::rref(a).pivots;
      if (rows[k].size() < monos[k].size()) return false;
    }
    return true;
  };
  const std::size_t need = monos[order].size();
  for (int attempts = 0; pts.size() < need || !full_rank(); ++attempts) {
    if (attempts > 100000) throw std::logic_error("taylor_at_zero: no admissible directions");
    RatVector c(n);
    for (auto& x : c) x = dist(rng);
    if (admissible(c)) pts.push_back(c);
  }
  std::vector<std::vector<Scalar>> values;
  for (const auto& c : pts) {
    auto lv = line_expansion(f, c, order, shift);
    for (int p = 0; p < shift; ++p)
      if (!lv[p].is_zero()) throw GenuinePoleError("function is not regular at the origin");
    values.push_back(std::move(lv));
  }
  for (int k = 0; k <= order; ++k) {
    const auto& ms = monos[k];
    lattice::QMatrix a(ms.size(), ms.size());
    for (std::size_t r = 0; r < ms.size(); ++r)
      for (std::size_t i = 0; i < ms.size(); ++i) a(r, i) = monomial_value(ms[i], pts[rows[k][r]]);
    lattice::QMatrix inv = lattice::inverse(a);
    for (std::size_t i = 0; i < ms.size(); ++i) {
      Scalar coef;
      for (std::size_t r = 0; r < ms.size(); ++r)
        if (inv(i, r) != 0) coef += Scalar(inv(i, r)) * values[rows[k][r]][k + shift];
      if (!coef.is_zero()) out.set_coefficient(ms[i], coef);
    }
  }
  return out;
}

// ---- residues and pullbacks -------------------------------------------------

MeroFun residue_along(const MeroFun& f, const RatVector& v1, const lattice::LatticeContext& lat) {
  if (v1.size() != f.dim()) throw DomainError("residue_along: dimension mismatch");
  if (lattice::is_zero_vector(v1)) throw DomainError("residue_along: zero vector");
  lattice::QuotientData q = lattice::adapted_basis(lat, {v1});
  std::size_t p = 0;
  while (v1[p] == 0) ++p;
  // u = r v1 with r returned, or nullopt.
  auto ratio = [&](const SVector& u) -> std::optional<Scalar> {
    Scalar r = u[p] / Scalar(v1[p]);
    for (std::size_t i = 0; i < u.size(); ++i)
      if (!(u[i] - r * Scalar(v1[i])).is_zero()) return std::nullopt;
    return r;
  };
  auto project = [&](const SVector& u) {
    SVector r(q.projection.rows());
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = 0; j < u.size(); ++j)
        if (q.projection(i, j) != 0 && !u[j].is_zero()) r[i] += Scalar(q.projection(i, j)) * u[j];
    return r;
  };
  MeroFun out(f.dim() - 1);
  for (const auto& t : f.terms()) {
    Term r{t.coeff, project(t.point), {}, {}};
    int poles = 0;
    for (const auto& v : t.lin_dens) {
      if (auto c = ratio(v)) {
        ++poles;
        r.coeff /= *c;
      } else {
        r.lin_dens.push_back(project(v));
      }
    }
    for (const auto& w : t.exp_dens) {
      if (auto c = ratio(w)) {
        ++poles;
        r.coeff = -r.coeff / *c;
      } else {
        r.exp_dens.push_back(project(w));
      }
    }
    if (poles > 1) throw DomainError("residue_along: pole of order > 1 along the hyperplane");
    if (poles == 1) out.add_term(std::move(r));
  }
  return out;
}

MeroFun pullback(const MeroFun& f, const SMatrix& t) {
  if (t.cols() != f.dim()) throw DomainError("pullback: dimension mismatch");
  auto map = [&](const SVector& w) { return t * w; };
  MeroFun out(t.rows());
  for (const auto& term : f.terms()) {
    Term r{term.coeff, map(term.point), {}, {}};
    for (const auto& v : term.lin_dens) r.lin_dens.push_back(map(v));
    for (const auto& w : term.exp_dens) r.exp_dens.push_back(map(w));
    for (const auto& v : r.lin_dens)
      if (is_zero_vec(v)) throw DomainError("pullback: a denominator vanishes identically");
    for (const auto& w : r.exp_dens)
      if (is_zero_vec(w)) throw DomainError("pullback: a denominator vanishes identically");
    out.add_term(std::move(r));
  }
  return out;
}

}  // namespace polyem::genfun

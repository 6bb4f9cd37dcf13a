#include "polyem/exactmath/zpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyem::exact {

namespace {

ZPoly normalize_sign(const ZPoly& p) {
  if (!p.is_zero() && sgn(p.leading().second) < 0) return -p;
  return p;
}

ZPoly content_in(const ZPoly& p, int var) {
  ZPoly g;
  for (const auto& [power, c] : p.coefficients_in(var)) {
    g = gcd(g, c);
    if (g.is_constant() && g.constant_value() == 1) break;
  }
  return g;
}

ZPoly divide_or_throw(const ZPoly& a, const ZPoly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw std::logic_error("ZPoly: expected exact division");
  return *q;
}

// Sparse pseudo-remainder of a by b with respect to `var`.
ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b, int var) {
  auto bc = b.coefficients_in(var);
  int db = bc.rbegin()->first;
  const ZPoly& lcb = bc.rbegin()->second;
  ZPoly r = a;
  while (!r.is_zero()) {
    auto rc = r.coefficients_in(var);
    int dr = rc.rbegin()->first;
    if (dr < db) break;
    r = lcb * r - rc.rbegin()->second * b.times_monomial(Monomial::variable(var, dr - db));
  }
  return r;
}

ZPoly monomial_gcd(const ZPoly& mono, const ZPoly& other) {
  Monomial g = mono.leading().first;
  for (const auto& [m, c] : other.terms())
    for (int i = 0; i < kMaxVars; ++i) g.exp[i] = std::min(g.exp[i], m.exp[i]);
  mpz_class ci;
  mpz_gcd(ci.get_mpz_t(), mono.leading().second.get_mpz_t(), other.content().get_mpz_t());
  return ZPoly::term(g, ci);
}

}  // namespace

ZPoly::ZPoly(const mpz_class& c) {
  if (c != 0) terms_.emplace_back(Monomial{}, c);
}

ZPoly ZPoly::variable(int index) { return term(Monomial::variable(index), 1); }

ZPoly ZPoly::term(const Monomial& m, const mpz_class& c) {
  ZPoly p;
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

ZPoly ZPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_compare(a.first, b.first) > 0; });
  ZPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (t.second != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool ZPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

mpz_class ZPoly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw std::logic_error("ZPoly::constant_value on non-constant polynomial");
  return terms_[0].second;
}

int ZPoly::total_degree() const { return terms_.empty() ? -1 : terms_.front().first.degree(); }

int ZPoly::degree_in(int var) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.first.exp[var]);
  return d;
}

int ZPoly::max_var() const {
  int v = -1;
  for (const auto& t : terms_) v = std::max(v, t.first.max_var());
  return v;
}

ZPoly ZPoly::operator-() const {
  ZPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
  ZPoly r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin(), j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    int c = (i == a.terms_.end()) ? -1 : (j == b.terms_.end()) ? 1 : grlex_compare(i->first, j->first);
    if (c > 0) {
      r.terms_.push_back(*i++);
    } else if (c < 0) {
      r.terms_.push_back(*j++);
    } else {
      mpz_class s = i->second + j->second;
      if (s != 0) r.terms_.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  return r;
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + (-b); }

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_constant()) return a.scaled(b.constant_value());
  if (a.is_constant()) return b.scaled(a.constant_value());
  std::map<Monomial, mpz_class, GrlexGreater> acc;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) acc[ma * mb] += ca * cb;
  ZPoly r;
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.emplace_back(m, std::move(c));
  return r;
}

ZPoly ZPoly::scaled(const mpz_class& c) const {
  if (c == 0) return {};
  ZPoly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

ZPoly ZPoly::times_monomial(const Monomial& m) const {
  ZPoly r = *this;
  for (auto& t : r.terms_) t.first = t.first * m;
  return r;
}

std::optional<ZPoly> ZPoly::divide_exact(const ZPoly& d) const {
  if (d.is_zero()) throw std::domain_error("ZPoly: division by zero polynomial");
  if (is_zero()) return ZPoly{};
  if (d.is_constant()) {
    const mpz_class c = d.constant_value();
    ZPoly q = *this;
    for (auto& t : q.terms_) {
      if (!mpz_divisible_p(t.second.get_mpz_t(), c.get_mpz_t())) return std::nullopt;
      mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), c.get_mpz_t());
    }
    return q;
  }
  std::vector<Term> quotient;
  ZPoly r = *this;
  const auto& [dm, dc] = d.leading();
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.leading();
    if (!dm.divides(rm)) return std::nullopt;
    if (!mpz_divisible_p(rc.get_mpz_t(), dc.get_mpz_t())) return std::nullopt;
    mpz_class qc;
    mpz_divexact(qc.get_mpz_t(), rc.get_mpz_t(), dc.get_mpz_t());
    Monomial qm = rm / dm;
    r = r - d.times_monomial(qm).scaled(qc);
    quotient.emplace_back(qm, std::move(qc));
  }
  return from_terms(std::move(quotient));
}

mpz_class ZPoly::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::map<int, ZPoly> ZPoly::coefficients_in(int var) const {
  std::map<int, std::vector<Term>> buckets;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    int p = rest.exp[var];
    rest.exp[var] = 0;
    buckets[p].emplace_back(rest, c);
  }
  std::map<int, ZPoly> out;
  for (auto& [p, ts] : buckets) out.emplace(p, from_terms(std::move(ts)));
  return out;
}

ZPoly ZPoly::from_coefficients(int var, const std::map<int, ZPoly>& coeffs) {
  std::vector<Term> ts;
  for (const auto& [p, c] : coeffs)
    for (const auto& t : c.terms_) ts.emplace_back(t.first * Monomial::variable(var, p), t.second);
  return from_terms(std::move(ts));
}

bool operator==(const ZPoly& a, const ZPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].first == b.terms_[i].first) || a.terms_[i].second != b.terms_[i].second)
      return false;
  return true;
}

std::strong_ordering structural_compare(const ZPoly& a, const ZPoly& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = grlex_compare(a.terms_[i].first, b.terms_[i].first);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    int cc = cmp(a.terms_[i].second, b.terms_[i].second);
    if (cc != 0) return cc < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.terms_.size() <=> b.terms_.size();
}

std::string ZPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    mpz_class a = abs(c);
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_to_string(m, names);
    if (mono.empty()) {
      out += a.get_str();
    } else if (a == 1) {
      out += mono;
    } else {
      out += a.get_str() + "*" + mono;
    }
  }
  return out;
}

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero()) return normalize_sign(b);
  if (b.is_zero()) return normalize_sign(a);
  if (a.is_constant() || b.is_constant()) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    return ZPoly(g);
  }
  if (a.is_monomial()) return monomial_gcd(a, b);
  if (b.is_monomial()) return monomial_gcd(b, a);
  if (a == b || a == -b) return normalize_sign(a);
  if (b.total_degree() <= a.total_degree()) {
    if (a.divide_exact(b)) return normalize_sign(b);
  } else if (b.divide_exact(a)) {
    return normalize_sign(a);
  }

  const int var = std::max(a.max_var(), b.max_var());
  if (a.degree_in(var) == 0) return gcd(a, content_in(b, var));
  if (b.degree_in(var) == 0) return gcd(content_in(a, var), b);

  ZPoly ca = content_in(a, var), cb = content_in(b, var);
  ZPoly pa = divide_or_throw(a, ca), pb = divide_or_throw(b, cb);
  ZPoly gc = gcd(ca, cb);
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  ZPoly g;
  while (true) {
    ZPoly r = pseudo_remainder(pa, pb, var);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (r.degree_in(var) == 0) {
      g = ZPoly(1);
      break;
    }
    pa = std::move(pb);
    pb = divide_or_throw(r, content_in(r, var));
  }
  g = divide_or_throw(g, content_in(g, var));
  return normalize_sign(gc * g);
}

}  // namespace polyem::exact

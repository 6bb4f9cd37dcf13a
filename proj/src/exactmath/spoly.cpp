#include "polyem/exactmath/spoly.hpp"

#include <algorithm>

namespace polyem::exact {

SPoly::SPoly(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

SPoly SPoly::variable(int index) { return term(Monomial::variable(index), Scalar(1)); }

SPoly SPoly::term(const Monomial& m, const Scalar& c) {
  SPoly p;
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

SPoly SPoly::linear(const std::vector<Scalar>& coeffs) {
  SPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) p.terms_.emplace(Monomial::variable(static_cast<int>(i)), coeffs[i]);
  return p;
}

Scalar SPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

int SPoly::total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

void SPoly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SPoly SPoly::operator-() const {
  SPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

SPoly& SPoly::operator+=(const SPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SPoly operator+(const SPoly& a, const SPoly& b) {
  SPoly r = a;
  r += b;
  return r;
}

SPoly operator-(const SPoly& a, const SPoly& b) { return a + (-b); }

SPoly operator*(const SPoly& a, const SPoly& b) {
  SPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

SPoly SPoly::scaled(const Scalar& c) const {
  if (c.is_zero()) return {};
  SPoly r = *this;
  for (auto& [m, v] : r.terms_) v *= c;
  return r;
}

SPoly SPoly::derivative(const Monomial& alpha) const {
  SPoly r;
  for (const auto& [m, c] : terms_) {
    if (!alpha.divides(m)) continue;
    mpz_class factor = 1;
    for (int i = 0; i < kMaxVars; ++i)
      for (int k = 0; k < alpha.exp[i]; ++k) factor *= m.exp[i] - k;
    r.add_term(m / alpha, c * Scalar(factor));
  }
  return r;
}

Scalar SPoly::evaluate(const std::vector<Scalar>& point) const {
  Scalar total;
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (int i = 0; i < kMaxVars; ++i)
      if (m.exp[i] != 0) t *= point.at(i).pow(m.exp[i]);
    total += t;
  }
  return total;
}

SPoly SPoly::linear_substitute(const std::vector<std::vector<Scalar>>& m) const {
  std::vector<SPoly> images;
  for (const auto& row : m) images.push_back(linear(row));
  SPoly r;
  for (const auto& [mono, c] : terms_) {
    SPoly t(c);
    for (int i = 0; i < kMaxVars; ++i)
      for (int k = 0; k < mono.exp[i]; ++k) t = t * images.at(i);
    r += t;
  }
  return r;
}

bool operator==(const SPoly& a, const SPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  return std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                    [](const auto& x, const auto& y) { return x.first == y.first && x.second == y.second; });
}

std::string SPoly::to_string(const std::vector<std::string>& var_names,
                             const std::vector<std::string>& param_names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono = monomial_to_string(m, var_names);
    std::string coeff;
    bool neg = false;
    if (c.is_rational()) {
      mpq_class a = abs(c.rational());
      neg = sgn(c.rational()) < 0;
      coeff = a.get_str();
    } else {
      coeff = c.to_string(param_names);
      if (coeff.find_first_of("+-", 1) != std::string::npos && coeff.front() != '(')
        coeff = "(" + coeff + ")";
    }
    if (!first) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    first = false;
    if (mono.empty()) out += coeff;
    else if (coeff == "1") out += mono;
    else out += coeff + "*" + mono;
  }
  return out;
}

}  // namespace polyem::exact

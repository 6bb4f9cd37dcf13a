#include "polyem/exactmath/monomial.hpp"

#include <stdexcept>

namespace polyem::exact {

int Monomial::degree() const {
  int d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::is_one() const {
  for (auto e : exp)
    if (e != 0) return false;
  return true;
}

int Monomial::max_var() const {
  for (int i = kMaxVars - 1; i >= 0; --i)
    if (exp[i] != 0) return i;
  return -1;
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned(exp[i]) + other.exp[i];
    if (s > 0xFFFF) throw std::overflow_error("monomial exponent overflow");
    r.exp[i] = static_cast<std::uint16_t>(s);
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(exp[i] - other.exp[i]);
  return r;
}

Monomial Monomial::variable(int index, int power) {
  if (index < 0 || index >= kMaxVars) throw std::out_of_range("variable index out of range");
  Monomial m;
  m.exp[index] = static_cast<std::uint16_t>(power);
  return m;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
  return 0;
}

std::string variable_name(const std::vector<std::string>& names, int index) {
  if (index < static_cast<int>(names.size())) return names[index];
  return "p" + std::to_string(index + 1);
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (int i = 0; i < kMaxVars; ++i) {
    if (m.exp[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += variable_name(names, i);
    if (m.exp[i] > 1) out += '^' + std::to_string(m.exp[i]);
  }
  return out;
}

}  // namespace polyem::exact

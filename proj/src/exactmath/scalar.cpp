#include "polyem/exactmath/scalar.hpp"

#include <stdexcept>

#include "polyem/errors.hpp"

namespace polyem::exact {

namespace {

ZPoly divide(const ZPoly& a, const ZPoly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw std::logic_error("Scalar: inexact polynomial division");
  return *q;
}

bool is_unit(const ZPoly& p) { return p.is_constant() && p.constant_value() == 1; }

}  // namespace

Scalar::Scalar(long num, long den) : q_(num, den) {
  if (den == 0) throw DomainError("division by zero");
  q_.canonicalize();
}

Scalar Scalar::fraction(const ZPoly& num, const ZPoly& den) {
  if (den.is_zero()) throw DomainError("division by zero");
  if (num.is_zero()) return {};
  if (num.is_constant() && den.is_constant())
    return Scalar(mpq_class(num.constant_value(), den.constant_value()));
  ZPoly g = gcd(num, den);
  ZPoly n = is_unit(g) ? num : divide(num, g);
  ZPoly d = is_unit(g) ? den : divide(den, g);
  if (sgn(d.leading().second) < 0) {
    n = -n;
    d = -d;
  }
  Scalar s;
  if (n.is_constant() && d.is_constant()) {
    s.q_ = mpq_class(n.constant_value(), d.constant_value());
    s.q_.canonicalize();
    return s;
  }
  s.f_ = std::make_shared<const RatFunc>(RatFunc{std::move(n), std::move(d)});
  return s;
}

Scalar Scalar::parameter(int index) {
  Scalar s;
  s.f_ = std::make_shared<const RatFunc>(RatFunc{ZPoly::variable(index), ZPoly(1)});
  return s;
}

const mpq_class& Scalar::rational() const {
  if (f_) throw DomainError("expected a rational number, got " + to_string());
  return q_;
}

ZPoly Scalar::numerator() const { return f_ ? f_->num : ZPoly(q_.get_num()); }
ZPoly Scalar::denominator() const { return f_ ? f_->den : ZPoly(q_.get_den()); }

int Scalar::max_parameter() const {
  return f_ ? std::max(f_->num.max_var(), f_->den.max_var()) : -1;
}

Scalar Scalar::operator-() const {
  Scalar r;
  if (f_) {
    r.f_ = std::make_shared<const RatFunc>(RatFunc{-f_->num, f_->den});
  } else {
    r.q_ = -q_;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (!f_) return Scalar(mpq_class(1) / q_);
  return fraction(f_->den, f_->num);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (!a.f_ && !b.f_) return Scalar(mpq_class(a.q_ + b.q_));
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  ZPoly an = a.numerator(), ad = a.denominator();
  ZPoly bn = b.numerator(), bd = b.denominator();
  if (ad == bd) return Scalar::fraction(an + bn, ad);
  ZPoly g = gcd(ad, bd);
  if (is_unit(g)) return Scalar::fraction(an * bd + bn * ad, ad * bd);
  ZPoly ad1 = divide(ad, g), bd1 = divide(bd, g);
  return Scalar::fraction(an * bd1 + bn * ad1, ad1 * bd);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (!a.f_ && !b.f_) return Scalar(mpq_class(a.q_ * b.q_));
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  ZPoly an = a.numerator(), ad = a.denominator();
  ZPoly bn = b.numerator(), bd = b.denominator();
  ZPoly g1 = gcd(an, bd), g2 = gcd(bn, ad);
  if (!is_unit(g1)) {
    an = divide(an, g1);
    bd = divide(bd, g1);
  }
  if (!is_unit(g2)) {
    bn = divide(bn, g2);
    ad = divide(ad, g2);
  }
  return Scalar::fraction(an * bn, ad * bd);
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r(1), base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!a.f_ && !b.f_) return a.q_ == b.q_;
  if (!a.f_ || !b.f_) return false;
  if (a.f_ == b.f_) return true;
  return a.f_->num == b.f_->num && a.f_->den == b.f_->den;
}

std::strong_ordering structural_compare(const Scalar& a, const Scalar& b) {
  if (!a.f_ && !b.f_) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  if (!a.f_) return std::strong_ordering::less;
  if (!b.f_) return std::strong_ordering::greater;
  if (auto c = structural_compare(a.f_->den, b.f_->den); c != 0) return c;
  return structural_compare(a.f_->num, b.f_->num);
}

mpq_class evaluate(const ZPoly& p, const std::vector<mpq_class>& values) {
  mpq_class total = 0;
  for (const auto& [m, c] : p.terms()) {
    mpq_class t = c;
    for (int i = 0; i < kMaxVars; ++i) {
      if (m.exp[i] == 0) continue;
      if (i >= static_cast<int>(values.size()))
        throw DomainError("missing value for parameter " + std::to_string(i + 1));
      for (int k = 0; k < m.exp[i]; ++k) t *= values[i];
    }
    total += t;
  }
  return total;
}

std::optional<mpq_class> Scalar::evaluate(const std::vector<mpq_class>& values) const {
  if (!f_) return q_;
  mpq_class d = exact::evaluate(f_->den, values);
  if (d == 0) return std::nullopt;
  return mpq_class(exact::evaluate(f_->num, values) / d);
}

std::string Scalar::to_string(const std::vector<std::string>& names) const {
  if (!f_) return q_.get_str();
  std::string num = f_->num.to_string(names);
  if (f_->num.terms().size() > 1) num = "(" + num + ")";
  if (is_unit(f_->den)) return num;
  std::string den = f_->den.to_string(names);
  if (den.find_first_of(" *+-") != std::string::npos) den = "(" + den + ")";
  return num + "/" + den;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace polyem::exact

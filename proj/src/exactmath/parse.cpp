#include "polyem/exactmath/parse.hpp"

#include <algorithm>
#include <cctype>

#include "polyem/errors.hpp"

namespace polyem::exact {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& names) : text_(text), names_(names) {}

  Scalar parse() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  std::string_view text_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse \"" + std::string(text_) + "\": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    while (true) {
      if (accept('+')) v += term();
      else if (accept('-')) v -= term();
      else return v;
    }
  }

  Scalar term() {
    Scalar v = unary();
    while (true) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        Scalar d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = atom();
    if (accept('^')) {
      bool neg = accept('-');
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an integer exponent");
      int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      if (neg && base.is_zero()) fail("division by zero");
      return base.pow(neg ? -e : e);
    }
    return base;
  }

  Scalar atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Scalar(mpz_class(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string id(text_.substr(start, pos_ - start));
      auto it = std::find(names_.begin(), names_.end(), id);
      if (it == names_.end()) fail("undeclared symbol '" + id + "'");
      return Scalar::parameter(static_cast<int>(it - names_.begin()));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

Scalar parse_scalar(std::string_view text, const std::vector<std::string>& names) {
  if (names.size() > static_cast<std::size_t>(kMaxVars)) throw ParseError("too many parameters");
  return Parser(text, names).parse();
}

SPoly scalar_to_poly(const Scalar& s) {
  ZPoly den = s.denominator();
  if (!den.is_constant()) throw ParseError("expected a polynomial, got " + s.to_string());
  mpz_class d = den.constant_value();
  SPoly p;
  const ZPoly num = s.numerator();
  for (const auto& [m, c] : num.terms()) p.add_term(m, Scalar(mpq_class(c, d)));
  return p;
}

SPoly parse_polynomial(std::string_view text, const std::vector<std::string>& vars) {
  return scalar_to_poly(parse_scalar(text, vars));
}

}  // namespace polyem::exact

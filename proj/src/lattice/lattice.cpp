#include "polyem/lattice/lattice.hpp"

#include <sstream>

namespace polyem::lattice {

RatVector operator+(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw DomainError("vector dimension mismatch");
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw DomainError("vector dimension mismatch");
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVector operator*(const mpq_class& s, const RatVector& v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

mpq_class dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw DomainError("vector dimension mismatch");
  mpq_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Scalar dot(const SVector& a, const SVector& b) {
  if (a.size() != b.size()) throw DomainError("vector dimension mismatch");
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

bool is_zero_vector(const RatVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_integral(const RatVector& v) {
  for (const auto& x : v)
    if (x.get_den() != 1) return false;
  return true;
}

RatVector primitive(const RatVector& v) {
  if (is_zero_vector(v)) throw DomainError("zero vector has no primitive multiple");
  mpz_class l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  mpz_class g = 0;
  std::vector<mpz_class> ints;
  for (const auto& x : v) {
    mpz_class e = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
    ints.push_back(e);
  }
  RatVector r;
  for (auto& e : ints) r.emplace_back(mpz_class(e / g));
  return r;
}

SVector to_scalars(const RatVector& v) {
  SVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

RatVector to_rationals(const SVector& v) {
  RatVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x.rational());
  return r;
}

std::string to_string(const RatVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

QMatrix rows_matrix(const std::vector<RatVector>& rows, std::size_t n) {
  QMatrix m(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) throw DomainError("vector dimension mismatch");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<RatVector> span_basis(const std::vector<RatVector>& vs, std::size_t n) {
  auto res = rref(rows_matrix(vs, n));
  std::vector<RatVector> out;
  for (std::size_t r = 0; r < res.pivots.size(); ++r) out.push_back(res.reduced.row(r));
  return out;
}

std::vector<RatVector> annihilator(const std::vector<RatVector>& vs, std::size_t n) {
  return nullspace(rows_matrix(vs, n));
}

bool in_span(const std::vector<RatVector>& basis, const RatVector& v) {
  if (basis.empty()) return is_zero_vector(v);
  auto b = basis;
  std::size_t r0 = rank(rows_matrix(basis, v.size()));
  b.push_back(v);
  return rank(rows_matrix(b, v.size())) == r0;
}

LatticeContext::LatticeContext(std::size_t n, std::string label)
    : n_(n), basis_(QMatrix::identity(n)), inverse_(QMatrix::identity(n)), label_(std::move(label)) {}

LatticeContext::LatticeContext(const QMatrix& basis, std::string label)
    : n_(basis.rows()), basis_(basis), label_(std::move(label)) {
  if (basis.rows() != basis.cols()) throw DomainError("lattice basis must be square");
  auto inv = try_inverse(basis);
  if (!inv) throw DomainError("lattice basis is singular");
  inverse_ = *inv;
  standard_ = basis == QMatrix::identity(n_);
}

RatVector LatticeContext::to_coords(const RatVector& x) const { return standard_ ? x : inverse_ * x; }
RatVector LatticeContext::from_coords(const RatVector& y) const { return standard_ ? y : basis_ * y; }

Matrix<mpq_class> column_hermite_transform(const std::vector<std::vector<mpz_class>>& a, std::size_t n) {
  std::vector<std::vector<mpz_class>> m = a;
  std::vector<std::vector<mpz_class>> u(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  auto combine = [&](std::size_t ci, std::size_t cj, const mpz_class& s, const mpz_class& t,
                     const mpz_class& p, const mpz_class& q) {
    // col_i <- s col_i + t col_j ; col_j <- p col_i + q col_j
    auto apply = [&](std::vector<std::vector<mpz_class>>& mat) {
      for (auto& row : mat) {
        mpz_class x = row[ci], y = row[cj];
        row[ci] = s * x + t * y;
        row[cj] = p * x + q * y;
      }
    };
    apply(m);
    apply(u);
  };
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i >= n) throw DomainError("matrix has more rows than columns");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m[i][j] == 0) continue;
      mpz_class x = m[i][i], y = m[i][j], g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      combine(i, j, s, t, mpz_class(-y / g), mpz_class(x / g));
    }
    if (m[i][i] == 0) throw DomainError("matrix does not have full row rank");
    if (m[i][i] < 0) {
      for (auto& row : m) row[i] = -row[i];
      for (auto& row : u) row[i] = -row[i];
    }
  }
  QMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = u[i][j];
  return r;
}

QuotientData adapted_basis(const LatticeContext& lat, const std::vector<RatVector>& w0) {
  const std::size_t n = lat.dim();
  std::vector<RatVector> w;
  for (const auto& v : w0) w.push_back(lat.to_coords(v));
  std::vector<RatVector> basis = span_basis(w, n);
  const std::size_t k = basis.size();
  std::vector<std::vector<mpz_class>> a;
  for (const auto& row : annihilator(basis, n)) {
    RatVector p = primitive(row);
    std::vector<mpz_class> ints;
    for (const auto& x : p) ints.push_back(x.get_num());
    a.push_back(std::move(ints));
  }
  QMatrix u = column_hermite_transform(a, n);
  // Kernel columns (the last k) first, then the rest.
  QMatrix p(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t src = j < k ? (n - k) + j : j - k;
    for (std::size_t i = 0; i < n; ++i) p(i, j) = u(i, src);
    std::size_t lead = 0;
    while (lead < n && p(lead, j) == 0) ++lead;
    if (lead < n && p(lead, j) < 0)
      for (std::size_t i = 0; i < n; ++i) p(i, j) = -p(i, j);
  }
  QMatrix pinv = inverse(p);
  QuotientData q;
  q.n = n;
  q.k = k;
  q.subspace = w0;
  q.adapted = lat.basis() * p;
  q.projection = QMatrix(n - k, n);
  QMatrix proj_full = pinv * lat.basis_inverse();
  for (std::size_t i = 0; i < n - k; ++i)
    for (std::size_t j = 0; j < n; ++j) q.projection(i, j) = proj_full(k + i, j);
  q.lift = QMatrix(n, n - k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n - k; ++j) q.lift(i, j) = q.adapted(i, k + j);
  return q;
}

mpq_class relative_volume(const std::vector<RatVector>& vectors, const LatticeContext& lat) {
  const std::size_t n = lat.dim();
  const std::size_t k = vectors.size();
  if (k == 0) return 1;
  if (rank(rows_matrix(vectors, n)) != k) throw DomainError("relative_volume: dependent vectors");
  QuotientData q = adapted_basis(lat, vectors);
  QMatrix inv = inverse(q.adapted);
  QMatrix m(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    RatVector c = inv * vectors[j];
    for (std::size_t i = 0; i < k; ++i) m(i, j) = c[i];
  }
  return abs(determinant(m));
}

RatVector primitive_normal(const std::vector<RatVector>& facet_span, const RatVector& side,
                           const LatticeContext& lat) {
  const std::size_t n = lat.dim();
  auto ann = annihilator(facet_span, n);
  if (ann.size() != 1) throw DomainError("primitive_normal: facet span must have codimension 1");
  // Make primitive in dual lattice coordinates B^T rho.
  RatVector dual = primitive(lat.basis().transpose() * ann[0]);
  RatVector rho = lat.basis_inverse().transpose() * dual;
  mpq_class s = dot(rho, side);
  if (s == 0) throw DomainError("primitive_normal: side vector lies in the facet span");
  if (s < 0) rho = mpq_class(-1) * rho;
  return rho;
}

}  // namespace polyem::lattice

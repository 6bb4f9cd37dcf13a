#include "polyem/interp/complement.hpp"

#include <sstream>

#include "polyem/errors.hpp"

namespace polyem::interp {

using exact::Scalar;
using lattice::to_scalar;

namespace {

SMatrix columns_matrix(const std::vector<SVector>& cols, std::size_t n) {
  SMatrix m(n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
  return m;
}

std::string render(const SVector& v, const std::vector<std::string>& names) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string(names);
  return s + ")";
}

std::string render_subspace(const std::vector<SVector>& u, const std::vector<std::string>& names) {
  std::string s = "span{";
  for (std::size_t i = 0; i < u.size(); ++i) s += (i ? ", " : "") + render(u[i], names);
  return s + "}";
}

}  // namespace

ComplementMap ComplementMap::inner_product(SMatrix q, std::vector<std::string> params) {
  if (q.rows() != q.cols()) throw DomainError("inner product matrix must be square");
  const std::size_t n = q.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!(q(i, j) == q(j, i))) throw DomainError("inner product matrix must be symmetric");
  ComplementMap m;
  m.kind_ = Kind::inner_product;
  m.n_ = n;
  m.q_ = std::move(q);
  m.params_ = std::move(params);
  if (!m.symbolic()) {
    // Sylvester's criterion on the leading principal minors.
    for (std::size_t k = 1; k <= n; ++k) {
      SMatrix minor(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) minor(i, j) = m.q_(i, j);
      if (lattice::determinant(minor).rational() <= 0)
        throw DomainError("inner product matrix is not positive definite");
    }
  } else if (lattice::determinant(m.q_).is_zero()) {
    throw DomainError("inner product matrix is degenerate");
  }
  m.finish();
  return m;
}

ComplementMap ComplementMap::standard(std::size_t n) { return inner_product(SMatrix::identity(n)); }

ComplementMap ComplementMap::flag(std::vector<SVector> vectors, std::vector<std::string> params) {
  const std::size_t n = vectors.size();
  for (const auto& v : vectors)
    if (v.size() != n) throw DomainError("a complete flag in V* needs n vectors of length n");
  ComplementMap m;
  m.kind_ = Kind::flag;
  m.n_ = n;
  m.flag_ = std::move(vectors);
  m.params_ = std::move(params);
  if (n > 0 && lattice::determinant(columns_matrix(m.flag_, n)).is_zero())
    throw DomainError("flag vectors are linearly dependent");
  m.finish();
  return m;
}

bool ComplementMap::symbolic() const {
  for (std::size_t i = 0; i < q_.rows(); ++i)
    for (std::size_t j = 0; j < q_.cols(); ++j)
      if (!q_(i, j).is_rational()) return true;
  for (const auto& v : flag_)
    for (const auto& x : v)
      if (!x.is_rational()) return true;
  return false;
}

void ComplementMap::finish() {
  // Parameter names are deliberately left out: the same symbolic entries
  // denote the same map whatever they are called.
  std::ostringstream os;
  os << (kind_ == Kind::flag ? "F" : "Q") << n_ << ':';
  if (kind_ == Kind::flag) {
    for (const auto& v : flag_) os << render(v, {});
  } else {
    for (std::size_t i = 0; i < n_; ++i) os << render(q_.row(i), {});
  }
  fingerprint_ = os.str();
}

std::string ComplementMap::to_string() const {
  if (kind_ == Kind::flag) return "flag " + render_subspace(flag_, params_);
  std::string s = "inner product [";
  for (std::size_t i = 0; i < n_; ++i) s += (i ? "; " : "") + render(q_.row(i), params_);
  return s + "]";
}

std::vector<SVector> ComplementMap::complement(const std::vector<SVector>& u) const {
  SMatrix um = columns_matrix(u, n_).transpose();
  const std::size_t r = lattice::rank(um);
  if (kind_ == Kind::inner_product) {
    return lattice::nullspace(um * q_);
  }
  std::vector<SVector> l(flag_.begin(), flag_.begin() + static_cast<long>(n_ - r));
  std::vector<SVector> both = u;
  both.insert(both.end(), l.begin(), l.end());
  if (lattice::rank(columns_matrix(both, n_)) != n_)
    throw GenericityError("flag is not generic for " + render_subspace(u, params_) +
                          ": it meets L_" + std::to_string(n_ - r) + " = " + render_subspace(l, params_));
  return l;
}

std::pair<SMatrix, ComplementMap> ComplementMap::projection_to_quotient(const QuotientData& qd) const {
  if (qd.n != n_) throw DomainError("complement map and quotient live in different dimensions");
  const std::size_t m = qd.n - qd.k;
  const std::size_t k = qd.k;
  ComplementMap induced;
  induced.kind_ = kind_;
  induced.n_ = m;
  induced.params_ = params_;
  SMatrix t(n_, m);
  if (m == 0) {
    if (kind_ == Kind::inner_product) induced.q_ = SMatrix(0, 0);
    induced.finish();
    return {t, induced};
  }
  SMatrix e = to_scalar(qd.dual_embedding());  // n x m
  auto fail = [&] {
    std::vector<SVector> w;
    for (const auto& x : qd.subspace) w.push_back(lattice::to_scalars(x));
    return GenericityError("complement map " + to_string() + " is not generic for the quotient by " +
                           render_subspace(w, params_));
  };
  if (kind_ == Kind::inner_product) {
    SMatrix qe = q_ * e;
    SMatrix g = e.transpose() * qe;
    auto ginv = lattice::try_inverse(g);
    if (!ginv) throw fail();
    t = qe * *ginv;
    induced.q_ = g;
  } else {
    SMatrix full(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < m; ++j) full(i, j) = e(i, j);
      for (std::size_t j = 0; j < k; ++j) full(i, m + j) = flag_[j][i];
    }
    auto inv = lattice::try_inverse(full);
    if (!inv) throw fail();
    SMatrix s(m, n_);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n_; ++j) s(i, j) = (*inv)(i, j);
    t = s.transpose();
    for (std::size_t j = k; j < n_; ++j) induced.flag_.push_back(s * flag_[j]);
  }
  induced.finish();
  return {t, induced};
}

ComplementMap ComplementMap::dual() const {
  if (kind_ == Kind::inner_product) {
    auto inv = lattice::try_inverse(q_);
    if (!inv) throw DomainError("degenerate inner product");
    ComplementMap d = *this;
    d.q_ = *inv;
    d.finish();
    return d;
  }
  SMatrix inv = lattice::inverse(columns_matrix(flag_, n_));
  ComplementMap d = *this;
  d.flag_.clear();
  for (std::size_t i = n_; i-- > 0;) d.flag_.push_back(inv.row(i));
  d.finish();
  return d;
}

ComplementMap ComplementMap::transformed(const lattice::QMatrix& g) const {
  SMatrix gs = to_scalar(g);
  SMatrix ginv_t = to_scalar(lattice::inverse(g)).transpose();
  ComplementMap r = *this;
  if (kind_ == Kind::inner_product) {
    r.q_ = gs * q_ * gs.transpose();
  } else {
    for (auto& v : r.flag_) v = ginv_t * v;
  }
  r.finish();
  return r;
}

}  // namespace polyem::interp

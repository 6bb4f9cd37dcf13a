#include "polyem/exactmath/series.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "polyem/errors.hpp"

namespace polyem::exact {

/// Monomial enumeration and index tables shared by all series of one shape.
struct SeriesLayout {
  int nvars = 0;
  int order = 0;
  std::vector<Monomial> monos;
  std::vector<int> degree;
  std::vector<std::size_t> start;  // start[d] = first index of degree d; start[order+1] = size
  std::unordered_map<std::uint64_t, int> index;
  std::vector<std::vector<int>> up;    // up[v][j] = index of monos[j] * x_v, or -1
  std::vector<std::vector<int>> down;  // down[v][j] = index of monos[j] / x_v, or -1

  mutable std::once_flag product_once;
  mutable std::vector<int> product;  // product[i * size + j], -1 past the order

  static std::uint64_t key(const Monomial& m) {
    std::uint64_t k = 0;
    for (int i = 0; i < kMaxVars; ++i) k = (k << 8) | m.exp[i];
    return k;
  }

  int find(const Monomial& m) const {
    auto it = index.find(key(m));
    return it == index.end() ? -1 : it->second;
  }

  const std::vector<int>& products() const {
    std::call_once(product_once, [this] {
      const std::size_t n = monos.size();
      product.assign(n * n, -1);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (degree[i] + degree[j] <= order) product[i * n + j] = find(monos[i] * monos[j]);
    });
    return product;
  }
};

namespace {

void enumerate_degree(int nvars, int var, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    cur.exp[var] = static_cast<std::uint16_t>(remaining);
    out.push_back(cur);
    cur.exp[var] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur.exp[var] = static_cast<std::uint16_t>(e);
    enumerate_degree(nvars, var + 1, remaining - e, cur, out);
  }
  cur.exp[var] = 0;
}

std::shared_ptr<const SeriesLayout> layout_for(int nvars, int order) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const SeriesLayout>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{nvars, order}];
  if (slot) return slot;
  if (order > 255) throw DomainError("series order too large");
  auto l = std::make_shared<SeriesLayout>();
  l->nvars = nvars;
  l->order = order;
  for (int d = 0; d <= order; ++d) {
    l->start.push_back(l->monos.size());
    if (nvars == 0) {
      if (d == 0) l->monos.emplace_back();
    } else {
      Monomial cur;
      enumerate_degree(nvars, 0, d, cur, l->monos);
    }
  }
  l->start.push_back(l->monos.size());
  for (std::size_t i = 0; i < l->monos.size(); ++i) {
    l->degree.push_back(l->monos[i].degree());
    l->index.emplace(SeriesLayout::key(l->monos[i]), static_cast<int>(i));
  }
  l->up.assign(nvars, std::vector<int>(l->monos.size(), -1));
  l->down.assign(nvars, std::vector<int>(l->monos.size(), -1));
  for (int v = 0; v < nvars; ++v) {
    for (std::size_t j = 0; j < l->monos.size(); ++j) {
      Monomial m = l->monos[j];
      if (l->degree[j] < order) {
        Monomial u = m;
        ++u.exp[v];
        l->up[v][j] = l->find(u);
      }
      if (m.exp[v] > 0) {
        --m.exp[v];
        l->down[v][j] = l->find(m);
      }
    }
  }
  slot = l;
  return slot;
}

void check_compatible(const TruncSeries& a, const TruncSeries& b) {
  if (a.nvars() != b.nvars()) throw DomainError("series variable sets differ");
}

}  // namespace

TruncSeries::TruncSeries(int nvars, int order)
    : nvars_(nvars), order_(order), valid_(order), layout_(layout_for(nvars, order)) {
  if (nvars < 0 || nvars > kMaxVars) throw DomainError("unsupported number of series variables");
  if (order < 0) throw DomainError("negative series order");
  coeffs_.resize(layout_->monos.size());
}

TruncSeries TruncSeries::constant(int nvars, int order, const Scalar& c) {
  TruncSeries s(nvars, order);
  s.coeffs_[0] = c;
  return s;
}

TruncSeries TruncSeries::from_poly(const SPoly& p, int nvars, int order) {
  TruncSeries s(nvars, order);
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() > order) continue;
    if (m.max_var() >= nvars) throw DomainError("polynomial uses more variables than the series");
    s.coeffs_[s.layout_->find(m)] = c;
  }
  return s;
}

TruncSeries TruncSeries::linear_form(const std::vector<Scalar>& v, int order) {
  TruncSeries s(static_cast<int>(v.size()), order);
  if (order >= 1)
    for (std::size_t i = 0; i < v.size(); ++i) s.coeffs_[s.layout_->up[i][0]] = v[i];
  return s;
}

const Scalar& TruncSeries::coefficient(const Monomial& m) const {
  static const Scalar zero;
  int i = m.degree() <= order_ ? layout_->find(m) : -1;
  return i < 0 ? zero : coeffs_[i];
}

void TruncSeries::set_coefficient(const Monomial& m, const Scalar& c) {
  int i = m.degree() <= order_ ? layout_->find(m) : -1;
  if (i < 0) throw DomainError("monomial outside series storage");
  coeffs_[i] = c;
}

const Monomial& TruncSeries::monomial_at(std::size_t i) const { return layout_->monos[i]; }

bool TruncSeries::is_zero_up_to(int degree) const {
  std::size_t end = layout_->start[std::min(degree, order_) + 1];
  for (std::size_t i = 0; i < end; ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r = *this;
  for (auto& c : r.coeffs_)
    if (!c.is_zero()) c = -c;
  return r;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  check_compatible(a, b);
  const TruncSeries& lo = a.order_ <= b.order_ ? a : b;
  const TruncSeries& hi = a.order_ <= b.order_ ? b : a;
  TruncSeries r = lo;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
    if (!hi.coeffs_[i].is_zero()) r.coeffs_[i] += hi.coeffs_[i];
  r.valid_ = std::min(a.valid_, b.valid_);
  return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  check_compatible(a, b);
  TruncSeries r(a.nvars_, std::min(a.order_, b.order_));
  const SeriesLayout& l = *r.layout_;
  const auto& prod = l.products();
  const std::size_t n = l.monos.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    std::size_t jend = l.start[r.order_ - l.degree[i] + 1];
    for (std::size_t j = 0; j < jend; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r.coeffs_[prod[i * n + j]] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  r.valid_ = std::min(a.valid_, b.valid_);
  return r;
}

TruncSeries TruncSeries::scaled(const Scalar& c) const {
  TruncSeries r = *this;
  for (auto& x : r.coeffs_)
    if (!x.is_zero()) x *= c;
  return r;
}

TruncSeries TruncSeries::times_linear_form(const std::vector<Scalar>& v) const {
  if (static_cast<int>(v.size()) != nvars_) throw DomainError("linear form dimension mismatch");
  TruncSeries r(nvars_, order_);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].is_zero() || layout_->degree[j] >= order_) continue;
    for (int var = 0; var < nvars_; ++var)
      if (!v[var].is_zero()) r.coeffs_[layout_->up[var][j]] += coeffs_[j] * v[var];
  }
  r.valid_ = std::min(valid_ + 1, order_);
  return r;
}

TruncSeries TruncSeries::truncated(int order) const {
  if (order >= order_) return *this;
  TruncSeries r(nvars_, order);
  std::copy(coeffs_.begin(), coeffs_.begin() + static_cast<long>(r.coeffs_.size()), r.coeffs_.begin());
  r.valid_ = std::min(valid_, order);
  return r;
}

TruncSeries TruncSeries::with_valid_order(int v) const {
  TruncSeries r = *this;
  r.valid_ = std::min(v, valid_);
  return r;
}

SPoly TruncSeries::to_poly() const {
  SPoly p;
  if (valid_ < 0) return p;
  for (std::size_t i = 0; i < layout_->start[valid_ + 1]; ++i) p.add_term(layout_->monos[i], coeffs_[i]);
  return p;
}

std::string TruncSeries::to_string(const std::vector<std::string>& var_names,
                                   const std::vector<std::string>& param_names) const {
  std::string s = to_poly().to_string(var_names, param_names);
  return s + " + O(" + std::to_string(valid_ + 1) + ")";
}

TruncSeries series_arith(const TruncSeries& lhs, const TruncSeries& rhs, SeriesOp op) {
  return op == SeriesOp::add ? lhs + rhs : lhs * rhs;
}

TruncSeries series_invert(const TruncSeries& s) {
  if (s.coeffs_[0].is_zero()) throw DomainError("series inversion needs a nonzero constant term");
  TruncSeries r(s.nvars_, s.order_);
  const SeriesLayout& l = *r.layout_;
  const auto& prod = l.products();
  const std::size_t n = l.monos.size();
  const Scalar inv0 = s.coeffs_[0].inverse();
  r.coeffs_[0] = inv0;
  const Scalar neg = -inv0;
  for (int d = 1; d <= s.order_; ++d) {
    std::vector<Scalar> acc(l.start[d + 1] - l.start[d]);
    // contributions s_i * r_j with deg i + deg j = d, deg i > 0
    for (std::size_t j = 0; j < l.start[d]; ++j) {
      if (r.coeffs_[j].is_zero()) continue;
      int di = d - l.degree[j];
      for (std::size_t i = l.start[di]; i < l.start[di + 1]; ++i) {
        if (s.coeffs_[i].is_zero()) continue;
        acc[prod[i * n + j] - l.start[d]] += s.coeffs_[i] * r.coeffs_[j];
      }
    }
    for (std::size_t k = 0; k < acc.size(); ++k)
      if (!acc[k].is_zero()) r.coeffs_[l.start[d] + k] = neg * acc[k];
  }
  r.valid_ = s.valid_;
  return r;
}

TruncSeries divide_by_linear_form(const TruncSeries& s, const std::vector<Scalar>& v) {
  if (static_cast<int>(v.size()) != s.nvars_) throw DomainError("linear form dimension mismatch");
  int p = -1;
  for (int i = 0; i < s.nvars_; ++i)
    if (!v[i].is_zero()) {
      p = i;
      break;
    }
  if (p < 0) throw DomainError("division by the zero linear form");
  if (s.order_ == 0) throw DomainError("cannot divide an order-0 series");
  const SeriesLayout& l = *s.layout_;
  const Scalar inv = v[p].inverse();
  TruncSeries q(s.nvars_, s.order_ - 1);
  if (s.valid_ >= 0 && !s.coeffs_[0].is_zero())
    throw NonDivisibleError("series has a nonzero constant term");
  for (int d = 1; d <= s.order_; ++d) {
    // Reduce the degree-d component, leading with the highest power of x_p.
    std::vector<std::size_t> idx;
    for (std::size_t i = l.start[d]; i < l.start[d + 1]; ++i) idx.push_back(i);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return l.monos[a].exp[p] > l.monos[b].exp[p];
    });
    std::vector<Scalar> h(s.coeffs_.begin() + static_cast<long>(l.start[d]),
                          s.coeffs_.begin() + static_cast<long>(l.start[d + 1]));
    for (std::size_t i : idx) {
      Scalar c = h[i - l.start[d]];
      if (c.is_zero()) continue;
      if (l.monos[i].exp[p] == 0) {
        if (d <= s.valid_) throw NonDivisibleError("series is not divisible by the linear form");
        continue;
      }
      int qi = l.down[p][i];
      Scalar qc = c * inv;
      q.coeffs_[qi] = qc;
      for (int var = 0; var < s.nvars_; ++var) {
        if (v[var].is_zero()) continue;
        int target = l.up[var][qi];
        h[target - l.start[d]] -= qc * v[var];
      }
    }
  }
  q.valid_ = std::min(s.valid_ - 1, q.order_);
  return q;
}

TruncSeries compose_with_linear_form(const std::vector<mpq_class>& c, const std::vector<Scalar>& v,
                                     int order) {
  const int nvars = static_cast<int>(v.size());
  int top = std::min<int>(static_cast<int>(c.size()) - 1, order);
  TruncSeries r = TruncSeries::constant(nvars, order, top >= 0 ? Scalar(c[top]) : Scalar());
  for (int k = top - 1; k >= 0; --k) {
    r = r.times_linear_form(v);
    TruncSeries ck = TruncSeries::constant(nvars, order, Scalar(c[k]));
    r = r + ck;
  }
  return r.with_valid_order(order);
}

const std::vector<mpq_class>& todd_coefficients(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<mpq_class>> snapshots;
  static std::vector<mpq_class> g{mpq_class(1)};
  std::lock_guard<std::mutex> lock(mu);
  // u_j = 1/(j+1)!;  g_k = -sum_{j=1..k} u_j g_{k-j}
  while (static_cast<int>(g.size()) <= n) {
    int k = static_cast<int>(g.size());
    mpq_class acc = 0;
    mpz_class fact = 1;
    for (int j = 1; j <= k; ++j) {
      fact *= j + 1;
      acc += g[k - j] / mpq_class(fact);
    }
    g.push_back(-acc);
  }
  auto& snap = snapshots[n];
  if (snap.empty()) snap.assign(g.begin(), g.begin() + n + 1);
  return snap;
}

const std::vector<mpq_class>& exp_coefficients(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<mpq_class>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (slot.empty()) {
    mpz_class fact = 1;
    for (int k = 0; k <= n; ++k) {
      if (k > 0) fact *= k;
      slot.emplace_back(mpz_class(1), fact);
    }
  }
  return slot;
}

TruncSeries bernoulli_series(int order) {
  if (order < 0) throw DomainError("negative series order");
  const auto& g = todd_coefficients(order + 1);
  TruncSeries b(1, order);
  for (int k = 0; k <= order; ++k) b.set_coefficient(Monomial::variable(0, k), Scalar(mpq_class(-g[k + 1])));
  return b;
}

}  // namespace polyem::exact

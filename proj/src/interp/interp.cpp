#include "polyem/interp/interp.hpp"

#include <mutex>
#include <sstream>

#include "polyem/errors.hpp"

namespace polyem::interp {

using genfun::pullback;
using genfun::Term;
using lattice::operator-;
using lattice::to_scalars;

namespace {

std::string describe(const std::vector<RatVector>& vs) {
  std::string s;
  for (const auto& v : vs) s += lattice::to_string(v);
  return s;
}

std::vector<RatVector> face_generators(const Cone& k, const geom::ConeFace& f) {
  std::vector<RatVector> gens;
  for (auto i : f.rays) gens.push_back(k.generators()[i]);
  return gens;
}

// Same cone, apex moved to its representative with lattice coordinates in [0,1).
Cone reduced(const Cone& k) {
  const auto& lat = k.lattice();
  RatVector y = lat.to_coords(k.apex());
  bool changed = false;
  for (auto& c : y) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
    if (f != 0) {
      c -= f;
      changed = true;
    }
  }
  if (!changed) return k;
  return k.translated(lat.from_coords(y) - k.apex());
}

const geom::ConeFace& minimal_face(const Cone& k) { return k.faces().back(); }

Term simple_term(std::size_t n, std::vector<SVector> lin, std::vector<SVector> ex, Scalar c = Scalar(1)) {
  return Term{std::move(c), SVector(n), std::move(lin), std::move(ex)};
}

// u with B(<xi,u>) the half-plane interpolator for the inward normal rho.
SVector omega_direction(const ComplementMap& psi, const RatVector& rho) {
  SVector r = to_scalars(rho);
  SVector u;
  Scalar den;
  if (psi.kind() == ComplementMap::Kind::flag) {
    const auto& l = psi.flag_vectors()[0];
    u = {l[1], -l[0]};
    den = lattice::dot(r, u);
  } else {
    u = psi.matrix() * r;
    den = lattice::dot(r, u);
  }
  if (den.is_zero()) throw GenericityError("complement map is not generic for the normal " + lattice::to_string(rho));
  for (auto& x : u) x /= den;
  return u;
}

SVector negated(SVector v) {
  for (auto& x : v) x = -x;
  return v;
}

}  // namespace

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::mu:
      return "mu";
    case Kind::lambda:
      return "lambda";
    case Kind::nu:
      return "nu";
  }
  return "?";
}

std::string cache_key(Kind kind, const ComplementMap& psi, const Cone& k) {
  std::ostringstream os;
  os << kind_name(kind) << '|' << psi.fingerprint() << '|';
  const auto& b = k.lattice().basis();
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) os << b(i, j) << ',';
  os << '|' << lattice::to_string(k.apex()) << '|' << describe(k.generators()) << '|' << describe(k.lineality());
  return os.str();
}

InterpolatorEngine& default_engine() {
  static InterpolatorEngine engine;
  return engine;
}

MeroFun InterpolatorEngine::mu(const ComplementMap& psi, const Cone& k) { return compute(Kind::mu, psi, k); }
MeroFun InterpolatorEngine::lambda(const ComplementMap& psi, const Cone& k) {
  return compute(Kind::lambda, psi, k);
}
MeroFun InterpolatorEngine::nu(const ComplementMap& psi, const Cone& k) { return compute(Kind::nu, psi, k); }

MeroFun InterpolatorEngine::compute(Kind kind, const ComplementMap& psi, const Cone& k) {
  if (psi.dim() != k.ambient_dim()) throw DomainError("complement map and cone have different dimensions");
  if (kind != Kind::mu && !k.is_lattice_cone())
    throw DomainError(std::string(kind_name(kind)) + " is only defined for lattice cones");
  if (!psi.symbolic()) audit(psi, k);
  return lookup_or_compute(kind, psi, k);
}

void InterpolatorEngine::audit(const ComplementMap& psi, const Cone& k) const {
  if (k.ambient_dim() == 0) return;
  for (const auto& face : k.faces()) {
    if (face.dim == 0) continue;
    auto [q, transverse] = geom::transverse_cone(k, face);
    ComplementMap induced = psi;
    try {
      induced = psi.projection_to_quotient(q).second;
    } catch (const GenericityError& e) {
      throw GenericityError("face cone" + describe(face_generators(k, face)) + " + lin" + describe(k.lineality()) +
                            " of the cone at " + lattice::to_string(k.apex()) + ": " + e.what());
    }
    if (transverse.ambient_dim() < k.ambient_dim()) audit(induced, transverse);
  }
}

std::size_t InterpolatorEngine::cache_size() const {
  std::shared_lock lock(mutex_);
  return cache_.size();
}

void InterpolatorEngine::clear() {
  std::unique_lock lock(mutex_);
  cache_.clear();
}

MeroFun InterpolatorEngine::lookup_or_compute(Kind kind, const ComplementMap& psi, const Cone& k0) {
  Cone k = reduced(k0);
  std::string key = cache_key(kind, psi, k);
  {
    std::shared_lock lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  MeroFun value = kind == Kind::mu ? compute_mu(psi, k) : compute_inverse(kind, psi, k);
  std::unique_lock lock(mutex_);
  return cache_.try_emplace(std::move(key), std::move(value)).first->second;
}

MeroFun InterpolatorEngine::through_lineality(Kind kind, const ComplementMap& psi, const Cone& k) {
  auto [q, transverse] = geom::transverse_cone(k, minimal_face(k));
  auto [t, induced] = psi.projection_to_quotient(q);
  return pullback(lookup_or_compute(kind, induced, transverse), t).canonical();
}

MeroFun InterpolatorEngine::compute_mu(const ComplementMap& psi, const Cone& k) {
  const std::size_t n = k.ambient_dim();
  if (n == 0) return MeroFun::constant(0, Scalar(1));
  if (!k.pointed()) return through_lineality(Kind::mu, psi, k);
  MeroFun acc(n);
  for (const auto& face : k.faces()) {
    if (face.dim == 0) continue;
    auto [q, transverse] = geom::transverse_cone(k, face);
    auto [t, induced] = psi.projection_to_quotient(q);
    MeroFun m = pullback(lookup_or_compute(Kind::mu, induced, transverse), t);
    if (m.is_zero()) continue;
    acc += m * genfun::i_of(Cone(k.lattice(), k.apex(), face_generators(k, face)));
  }
  return (genfun::s_of(k) - acc).times_exp(negated(to_scalars(k.apex()))).canonical();
}

MeroFun InterpolatorEngine::compute_inverse(Kind kind, const ComplementMap& psi, const Cone& k) {
  const std::size_t n = k.ambient_dim();
  if (n == 0) return MeroFun::constant(0, Scalar(1));
  if (!k.pointed()) return through_lineality(kind, psi, k);
  MeroFun acc = kind == Kind::nu ? MeroFun::constant(n, Scalar(1)) : MeroFun(n);
  if (k.dim() == 0) return MeroFun::constant(n, Scalar(1));
  // The face F = K contributes value(K) * mu(Supp(K,K)) = value(K) * 1.
  for (const auto& face : k.faces()) {
    if (face.dim == k.dim()) continue;
    MeroFun f = lookup_or_compute(kind, psi, Cone(k.lattice(), k.apex(), face_generators(k, face)));
    acc -= f * lookup_or_compute(Kind::mu, psi, geom::supporting_cone(k, face));
  }
  return acc.canonical();
}

MeroFun bernoulli_fun(const SVector& u) {
  MeroFun f(u.size());
  f.add_term(simple_term(u.size(), {}, {u}));
  f.add_term(simple_term(u.size(), {u}, {}));
  return f;
}

namespace {

struct Shape2d {
  enum { ray, half_plane, unimodular } type;
  SVector v1, v2;
  SVector u1, u2;  // B-arguments for the faces Cone(v1), Cone(v2) (or the half-plane)
};

Shape2d classify(const ComplementMap& psi, const Cone& k) {
  const std::size_t n = k.ambient_dim();
  const auto& lat = k.lattice();
  if (!lat.contains(k.apex())) throw DomainError("closed forms need an apex in the lattice");
  if (n == 1 && k.pointed() && k.dim() == 1) return {Shape2d::ray, to_scalars(k.generators()[0]), {}, {}, {}};
  if (n == 2 && k.lineality().size() == 1 && k.dim() == 2) {
    RatVector rho = lattice::primitive_normal(k.lineality(), k.generators()[0], lat);
    return {Shape2d::half_plane, {}, {}, omega_direction(psi, rho), {}};
  }
  if (n == 2 && k.simplicial() && k.dim() == 2 && lattice::relative_volume(k.generators(), lat) == 1) {
    const auto& v1 = k.generators()[0];
    const auto& v2 = k.generators()[1];
    RatVector rho1 = lattice::primitive_normal({v1}, v2, lat);
    RatVector rho2 = lattice::primitive_normal({v2}, v1, lat);
    return {Shape2d::unimodular, to_scalars(v1), to_scalars(v2), omega_direction(psi, rho1),
            omega_direction(psi, rho2)};
  }
  throw DomainError("no closed form for this cone (need a ray in a line, a half-plane or a unimodular 2-cone)");
}

MeroFun inverse_linear(const SVector& v) {
  MeroFun f(v.size());
  f.add_term(simple_term(v.size(), {v}, {}));
  return f;
}

}  // namespace

MeroFun mu_closed_form_2d(const ComplementMap& psi, const Cone& k) {
  Shape2d s = classify(psi, k);
  switch (s.type) {
    case Shape2d::ray:
      return bernoulli_fun(s.v1);
    case Shape2d::half_plane:
      return bernoulli_fun(s.u1);
    case Shape2d::unimodular: {
      MeroFun f(2);
      f.add_term(simple_term(2, {}, {s.v1, s.v2}));
      f.add_term(simple_term(2, {s.v1, s.v2}, {}, Scalar(-1)));
      f += inverse_linear(s.v1) * bernoulli_fun(s.u1);
      f += inverse_linear(s.v2) * bernoulli_fun(s.u2);
      return f;
    }
  }
  return MeroFun(k.ambient_dim());
}

MeroFun nu_closed_form_2d(const ComplementMap& psi, const Cone& k) {
  Shape2d s = classify(psi, k);
  switch (s.type) {
    case Shape2d::ray:
      return bernoulli_fun(negated(s.v1));
    case Shape2d::half_plane:
      return bernoulli_fun(negated(s.u1));
    case Shape2d::unimodular: {
      MeroFun f(2);
      f.add_term(simple_term(2, {s.v1, s.v2}, {}));
      MeroFun e1(2), e2(2), e12(2);
      e1.add_term(Term{Scalar(1), s.v1, {}, {s.v1}});
      e2.add_term(Term{Scalar(1), s.v2, {}, {s.v2}});
      SVector sum = s.v1;
      for (std::size_t i = 0; i < 2; ++i) sum[i] += s.v2[i];
      e12.add_term(Term{Scalar(1), sum, {}, {s.v1, s.v2}});
      f -= e1 * bernoulli_fun(negated(s.u1));
      f -= e2 * bernoulli_fun(negated(s.u2));
      f -= e12;
      return f;
    }
  }
  return MeroFun(k.ambient_dim());
}

namespace {

MeroFun face_factor(Kind kind, const geom::Polytope& f) {
  switch (kind) {
    case Kind::mu:
      return genfun::i_of(f);
    case Kind::lambda:
      return genfun::s_of(f);
    case Kind::nu:
      return genfun::s_interior(f);
  }
  return MeroFun(f.ambient_dim());
}

MeroFun face_factor(Kind kind, const Cone& f) {
  switch (kind) {
    case Kind::mu:
      return genfun::i_of(f);
    case Kind::lambda:
      return genfun::s_of(f);
    case Kind::nu:
      return genfun::s_interior(f);
  }
  return MeroFun(f.ambient_dim());
}

}  // namespace

MeroFun face_expansion(Kind kind, const ComplementMap& psi, const geom::Polytope& p) {
  MeroFun sum(p.ambient_dim());
  for (const auto& face : p.faces()) {
    MeroFun w = default_engine().compute(kind, psi, geom::supporting_cone(p, face));
    if (w.is_zero()) continue;
    sum += w * face_factor(kind, geom::Polytope(p.lattice(), p.face_vertices(face)));
  }
  return sum.canonical();
}

MeroFun face_expansion(Kind kind, const ComplementMap& psi, const Cone& k) {
  if (!k.pointed()) throw DomainError("face expansion needs a pointed cone");
  MeroFun sum(k.ambient_dim());
  for (const auto& face : k.faces()) {
    MeroFun w = default_engine().compute(kind, psi, geom::supporting_cone(k, face));
    if (w.is_zero()) continue;
    sum += w * face_factor(kind, Cone(k.lattice(), k.apex(), face_generators(k, face)));
  }
  return sum.canonical();
}

Scalar constant_term(const ComplementMap& psi, const Cone& k, Kind kind) {
  return genfun::taylor_at_zero(default_engine().compute(kind, psi, k), 0).constant_term();
}

MorelliResult morelli_duality_check(const ComplementMap& psi, const Cone& k) {
  if (k.ambient_dim() > 2) throw DomainError("the Morelli duality check is limited to dimension <= 2");
  if (!lattice::is_zero_vector(k.apex())) throw DomainError("the Morelli duality check needs a cone with apex 0");
  MorelliResult r;
  r.nu0 = constant_term(psi, k, Kind::nu);
  r.mu_dual0 = constant_term(psi.dual(), geom::dual_cone(k), Kind::mu);
  r.agree = r.nu0 == r.mu_dual0;
  return r;
}

SPoly DiffOperator::apply(const SPoly& h) const {
  const int deg = h.total_degree();
  if (deg > s_.valid_order())
    throw DomainError("polynomial degree " + std::to_string(deg) + " exceeds the operator order " +
                      std::to_string(s_.valid_order()));
  SPoly out;
  for (std::size_t i = 0; i < s_.size(); ++i) {
    const auto& m = s_.monomial_at(i);
    if (m.degree() > deg) break;
    if (s_.at(i).is_zero()) continue;
    out += h.derivative(m).scaled(s_.at(i));
  }
  return out;
}

}  // namespace polyem::interp

#include "polyem/cli/cli.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "polyem/errors.hpp"
#include "polyem/exactmath/parse.hpp"

namespace polyem::cli {

using exact::Scalar;
using genfun::MeroFun;
using geom::Cone;
using geom::Polytope;
using interp::ComplementMap;
using interp::Kind;
using lattice::LatticeContext;
using lattice::RatVector;
using Json = nlohmann::ordered_json;

namespace {

// ---- input ----------------------------------------------------------------

std::string load(const std::string& spec) {
  auto first = spec.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && spec[first] == '{') return spec;
  std::ifstream in(spec);
  if (!in) throw ParseError("cannot open " + spec);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Scalar parse_entry(const nlohmann::json& v, const std::vector<std::string>& names) {
  if (v.is_number_integer()) return Scalar(v.get<long>());
  if (v.is_string()) return exact::parse_scalar(v.get<std::string>(), names);
  throw ParseError("expected a number or a string, got " + v.dump());
}

mpq_class parse_rational(const nlohmann::json& v) {
  Scalar s = parse_entry(v, {});
  return s.rational();
}

RatVector parse_point(const nlohmann::json& v) {
  if (!v.is_array()) throw ParseError("expected an array of coordinates, got " + v.dump());
  RatVector out;
  for (const auto& x : v) out.push_back(parse_rational(x));
  return out;
}

std::vector<RatVector> parse_points(const nlohmann::json& v, const char* what) {
  if (!v.is_array()) throw ParseError(std::string("\"") + what + "\" must be an array of points");
  std::vector<RatVector> out;
  for (const auto& p : v) out.push_back(parse_point(p));
  return out;
}

std::size_t common_dim(const std::vector<RatVector>& pts) {
  if (pts.empty()) throw ParseError("no points given");
  for (const auto& p : pts)
    if (p.size() != pts[0].size()) throw ParseError("points of different dimensions");
  if (pts[0].size() > 4) throw ParseError("dimensions above 4 are not supported");
  return pts[0].size();
}

LatticeContext parse_lattice(const nlohmann::json& doc, std::size_t n) {
  if (!doc.contains("lattice")) return LatticeContext(n);
  auto basis = parse_points(doc["lattice"], "lattice");
  if (basis.size() != n) throw ParseError("the lattice needs exactly n basis vectors");
  for (const auto& b : basis)
    if (b.size() != n) throw ParseError("lattice basis vectors have the wrong dimension");
  try {
    return LatticeContext(lattice::QMatrix::from_columns(basis), "custom");
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid lattice: ") + e.what());
  }
}

template <class F>
auto rethrow_as_parse(F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

// ---- output -----------------------------------------------------------------

std::vector<std::string> xi_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("xi" + std::to_string(i));
  return names;
}

Json point_json(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

struct Context {
  const JobSpec& job;
  std::vector<std::string> params;
  Json doc;
  bool failed = false;

  std::string str(const Scalar& s) const { return s.to_string(params); }
  std::string str(const MeroFun& f) const { return f.to_string({}, params); }
};

void render_text(const Json& doc, std::ostream& out) {
  for (const auto& [key, value] : doc.items()) {
    if (key == "checks") {
      for (const auto& c : value) {
        out << c["status"].get<std::string>() << ' ' << c["identity"].get<std::string>();
        if (c.contains("detail")) out << ": " << c["detail"].get<std::string>();
        out << '\n';
      }
    } else if (value.is_array() && !value.empty() && value[0].is_object()) {
      out << key << ":\n";
      for (const auto& row : value) {
        out << ' ';
        for (const auto& [k, v] : row.items()) {
          out << ' ' << k << '=';
          if (v.is_string()) {
            out << v.get<std::string>();
          } else if (v.is_array()) {
            for (const auto& p : v) {
              out << '(';
              for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i].get<std::string>();
              out << ')';
            }
          } else {
            out << v.dump();
          }
        }
        out << '\n';
      }
    } else {
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
}

// ---- commands -----------------------------------------------------------------

Json face_json(const Polytope& p, const geom::PolytopeFace& f) {
  Json verts = Json::array();
  for (const auto& v : p.face_vertices(f)) verts.push_back(point_json(v));
  return Json{{"vertices", verts}, {"dim", f.dim}};
}

void table(Context& cx, const Polytope& p, const euler::LocalFormula& lf, const char* weight_name,
           const char* measure_name) {
  Json rows = Json::array();
  for (const auto& t : lf.faces) {
    Json row = face_json(p, t.face);
    row[weight_name] = cx.str(t.weight);
    row[measure_name] = cx.str(t.measure);
    row["contribution"] = cx.str(t.contribution);
    rows.push_back(row);
  }
  cx.doc["faces"] = rows;
}

exact::SPoly parse_poly(const JobSpec& job, std::size_t n, bool required) {
  if (job.poly.empty()) {
    if (required) throw ParseError("--poly is required for " + job.command);
    return exact::SPoly(Scalar(1));
  }
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  return exact::parse_polynomial(job.poly, vars);
}

void add_check(Context& cx, const std::string& name, bool ok, const std::string& detail) {
  Json c{{"identity", name}, {"status", ok ? "PASS" : "FAIL"}};
  if (!detail.empty()) c["detail"] = detail;
  if (!ok) cx.failed = true;
  cx.doc["checks"].push_back(c);
}

void check_equal(Context& cx, const std::string& name, const MeroFun& lhs, const MeroFun& rhs,
                 const std::string& pass_detail = "") {
  bool ok = genfun::canonical_equal(lhs, rhs);
  add_check(cx, name, ok, ok ? pass_detail : "discrepancy " + cx.str((lhs - rhs).canonical()));
}

void check_equal(Context& cx, const std::string& name, const Scalar& lhs, const Scalar& rhs) {
  bool ok = lhs == rhs;
  add_check(cx, name, ok, ok ? cx.str(lhs) : cx.str(lhs) + " vs " + cx.str(rhs) + ", discrepancy " + cx.str(lhs - rhs));
}

bool wants(const JobSpec& job, const std::string& name) { return job.identity == "all" || job.identity == name; }

// A A^T + I for a random integer matrix A: always positive definite.
ComplementMap random_inner_product(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> d(-3, 3);
  lattice::SMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Scalar(d(rng));
  lattice::SMatrix q = a * a.transpose();
  for (std::size_t i = 0; i < n; ++i) q(i, i) += Scalar(1);
  return ComplementMap::inner_product(q);
}

void verify_polytope(Context& cx, const ComplementMap& psi, const Polytope& p) {
  const JobSpec& job = cx.job;
  cx.doc["checks"] = Json::array();
  const bool lattice_p = p.is_lattice_polytope();
  MeroFun s = genfun::s_of(p);
  std::string echoed = cx.str(s);
  std::optional<MeroFun> brute;
  try {
    brute = genfun::from_exppoly(genfun::brute_force_sum(p));
    echoed = cx.str(*brute);
  } catch (const SizeGuardError&) {
    if (job.identity == "brion") throw;
  }
  if (wants(job, "brion") && brute) check_equal(cx, "brion", s, *brute, "S(P) = " + echoed);
  if (wants(job, "interpolator"))
    check_equal(cx, "interpolator", interp::face_expansion(Kind::mu, psi, p), s, "S(P) = " + echoed);
  if (lattice_p) {
    MeroFun i = genfun::i_of(p);
    if (wants(job, "lambda")) check_equal(cx, "lambda", interp::face_expansion(Kind::lambda, psi, p), i);
    if (wants(job, "nu")) check_equal(cx, "nu", interp::face_expansion(Kind::nu, psi, p), i);
  } else if (job.identity == "lambda" || job.identity == "nu" || job.identity == "em22") {
    throw DomainError("identity " + job.identity + " needs a lattice polytope");
  }
  const bool em_checks = wants(job, "em") || wants(job, "em22") || wants(job, "psi-independence");
  if (!em_checks) return;
  exact::SPoly h = parse_poly(job, p.ambient_dim(), false);
  euler::Oracles o = euler::brute_force_oracles(p, h);
  if (wants(job, "em")) check_equal(cx, "em", euler::em_sum(psi, p, h).total, o.sum_h);
  if (lattice_p && wants(job, "em22")) check_equal(cx, "em22", euler::em_integral(psi, p, h).total, o.integral);
  if (wants(job, "psi-independence")) {
    ComplementMap other = random_inner_product(p.ambient_dim(), job.seed);
    check_equal(cx, "psi-independence", euler::em_sum(other, p, h).total, euler::em_sum(psi, p, h).total);
  }
}

void verify_cone(Context& cx, const ComplementMap& psi, const Cone& k) {
  const JobSpec& job = cx.job;
  cx.doc["checks"] = Json::array();
  if (!k.pointed()) throw DomainError("verify needs a pointed cone");
  if (wants(job, "interpolator"))
    check_equal(cx, "interpolator", interp::face_expansion(Kind::mu, psi, k), genfun::s_of(k));
  if (wants(job, "regularity")) {
    bool ok = true;
    std::string detail;
    try {
      detail = "mu(K)(0) = " + cx.str(interp::constant_term(psi, k));
    } catch (const GenuinePoleError& e) {
      ok = false;
      detail = e.what();
    }
    add_check(cx, "regularity", ok, detail);
  }
  if (!k.is_lattice_cone()) {
    if (job.identity == "lambda" || job.identity == "nu" || job.identity == "morelli")
      throw DomainError("identity " + job.identity + " needs a lattice cone");
    return;
  }
  const bool lam = wants(job, "lambda") || job.identity == "mobius";
  const bool nuq = wants(job, "nu") || job.identity == "mobiusIS0";
  if (lam || nuq) {
    MeroFun lsum(k.ambient_dim()), nsum(k.ambient_dim());
    for (const auto& f : k.faces()) {
      std::vector<RatVector> gens;
      for (auto i : f.rays) gens.push_back(k.generators()[i]);
      Cone fc(k.lattice(), k.apex(), gens);
      MeroFun m = interp::mu(psi, geom::supporting_cone(k, f));
      if (lam) lsum += interp::lambda(psi, fc) * m;
      if (nuq) nsum += interp::nu(psi, fc) * m;
    }
    MeroFun i = genfun::i_of(k);
    if (lam) {
      check_equal(cx, "mobius", lsum, MeroFun(k.ambient_dim()));
      check_equal(cx, "lambda", interp::face_expansion(Kind::lambda, psi, k), i);
    }
    if (nuq) {
      check_equal(cx, "mobiusIS0", nsum, MeroFun::constant(k.ambient_dim(), Scalar(1)));
      check_equal(cx, "nu", interp::face_expansion(Kind::nu, psi, k), i);
    }
  }
  if (wants(job, "morelli") && k.ambient_dim() <= 2 && lattice::is_zero_vector(k.apex())) {
    auto r = interp::morelli_duality_check(psi, k);
    add_check(cx, "morelli", r.agree, "nu(K)(0) = " + cx.str(r.nu0) + ", mu*(K^v)(0) = " + cx.str(r.mu_dual0));
  }
}

Kind kind_of(const std::string& command) {
  if (command == "mu") return Kind::mu;
  if (command == "lambda") return Kind::lambda;
  return Kind::nu;
}

void run_interpolator(Context& cx, const ComplementMap& psi, const std::optional<Cone>& k,
                      const std::optional<Polytope>& p) {
  const JobSpec& job = cx.job;
  Kind kind = kind_of(job.command);
  if (k) {
    if (job.constant_term) {
      cx.doc["constant_term"] = cx.str(interp::constant_term(psi, *k, kind));
      return;
    }
    MeroFun f = interp::default_engine().compute(kind, psi, *k);
    cx.doc["function"] = cx.str(f);
    if (job.order)
      cx.doc["taylor"] = genfun::taylor_at_zero(f, *job.order).to_string(xi_names(k->ambient_dim()), cx.params);
    return;
  }
  Json rows = Json::array();
  for (const auto& face : p->faces()) {
    Json row = face_json(*p, face);
    row["constant_term"] = cx.str(interp::constant_term(psi, geom::supporting_cone(*p, face), kind));
    rows.push_back(row);
  }
  cx.doc["faces"] = rows;
}

void dispatch(Context& cx) {
  const JobSpec& job = cx.job;
  static const std::vector<std::string> commands = {"expand", "mu",        "lambda", "nu",    "count",
                                                    "volume", "sum",       "integrate", "verify"};
  if (std::find(commands.begin(), commands.end(), job.command) == commands.end())
    throw ParseError("unknown command '" + job.command + "'");
  if (job.format != "text" && job.format != "json") throw ParseError("--format must be text or json");
  if (job.order && *job.order < 0) throw ParseError("--order must be non-negative");
  if (job.polytope.empty() == job.cone.empty()) throw ParseError("give exactly one of --polytope and --cone");

  std::optional<Polytope> p;
  std::optional<Cone> k;
  if (!job.polytope.empty()) p = parse_polytope(load(job.polytope));
  if (!job.cone.empty()) k = parse_cone(load(job.cone));
  const std::size_t n = p ? p->ambient_dim() : k->ambient_dim();
  ComplementMap psi = job.cmap.empty() ? ComplementMap::standard(n) : parse_cmap(load(job.cmap), n);
  cx.params = psi.parameters();
  cx.doc["command"] = job.command;
  cx.doc["complement_map"] = psi.to_string();

  const bool polytope_only = job.command == "count" || job.command == "volume" || job.command == "sum" ||
                             job.command == "integrate";
  if (polytope_only && !p) throw ParseError(job.command + " needs --polytope");

  if (job.command == "expand") {
    MeroFun s = p ? genfun::s_of(*p) : genfun::s_of(*k);
    MeroFun i = p ? genfun::i_of(*p) : genfun::i_of(*k);
    cx.doc["S"] = cx.str(s);
    cx.doc["I"] = cx.str(i);
    if (job.order && p) {
      cx.doc["S_taylor"] = genfun::taylor_at_zero(s, *job.order).to_string(xi_names(n), cx.params);
      cx.doc["I_taylor"] = genfun::taylor_at_zero(i, *job.order).to_string(xi_names(n), cx.params);
    }
  } else if (job.command == "mu" || job.command == "lambda" || job.command == "nu") {
    run_interpolator(cx, psi, k, p);
  } else if (job.command == "count") {
    auto lf = euler::count_lattice_points(psi, *p);
    cx.doc["count"] = cx.str(lf.total);
    table(cx, *p, lf, "mu0", "volume");
  } else if (job.command == "volume") {
    auto lf = euler::volume(psi, *p);
    cx.doc["volume"] = cx.str(lf.total);
    table(cx, *p, lf, "lambda0", "points");
  } else if (job.command == "sum") {
    auto lf = euler::em_sum(psi, *p, parse_poly(job, n, true));
    cx.doc["sum"] = cx.str(lf.total);
    table(cx, *p, lf, "mu0", "volume");
  } else if (job.command == "integrate") {
    auto lf = euler::em_integral(psi, *p, parse_poly(job, n, true));
    cx.doc["integral"] = cx.str(lf.total);
    table(cx, *p, lf, "lambda0", "points");
  } else {
    if (p) {
      verify_polytope(cx, psi, *p);
    } else {
      verify_cone(cx, psi, *k);
    }
    if (cx.doc["checks"].empty()) throw ParseError("unknown or inapplicable identity '" + job.identity + "'");
    cx.doc["result"] = cx.failed ? "FAIL" : "PASS";
  }
}

}  // namespace

Polytope parse_polytope(const std::string& json_text) {
  return rethrow_as_parse([&] {
    auto doc = parse_json(json_text);
    if (!doc.is_object() || !doc.contains("points")) throw ParseError("polytope JSON needs \"points\"");
    auto pts = parse_points(doc["points"], "points");
    const std::size_t n = common_dim(pts);
    return Polytope(parse_lattice(doc, n), pts);
  });
}

Cone parse_cone(const std::string& json_text) {
  return rethrow_as_parse([&] {
    auto doc = parse_json(json_text);
    if (!doc.is_object() || !doc.contains("apex")) throw ParseError("cone JSON needs \"apex\"");
    RatVector apex = parse_point(doc["apex"]);
    const std::size_t n = common_dim({apex});
    std::vector<RatVector> gens, lin;
    if (doc.contains("generators")) gens = parse_points(doc["generators"], "generators");
    if (doc.contains("lineality")) lin = parse_points(doc["lineality"], "lineality");
    for (const auto& v : gens)
      if (v.size() != n) throw ParseError("generator of the wrong dimension");
    for (const auto& v : lin)
      if (v.size() != n) throw ParseError("lineality vector of the wrong dimension");
    return Cone(parse_lattice(doc, n), apex, gens, lin);
  });
}

ComplementMap parse_cmap(const std::string& json_text, std::size_t expected_dim) {
  return rethrow_as_parse([&] {
    auto doc = parse_json(json_text);
    if (!doc.is_object() || !doc.contains("kind")) throw ParseError("complement map JSON needs \"kind\"");
    std::vector<std::string> params;
    if (doc.contains("parameters")) {
      if (!doc["parameters"].is_array()) throw ParseError("\"parameters\" must be an array of names");
      for (const auto& x : doc["parameters"]) params.push_back(x.get<std::string>());
    }
    auto rows = [&](const char* key) {
      if (!doc.contains(key) || !doc[key].is_array()) throw ParseError(std::string("complement map needs \"") + key + "\"");
      std::vector<lattice::SVector> out;
      for (const auto& r : doc[key]) {
        if (!r.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array of arrays");
        lattice::SVector v;
        for (const auto& x : r) v.push_back(parse_entry(x, params));
        if (v.size() != expected_dim) throw ParseError("complement map has the wrong dimension");
        out.push_back(std::move(v));
      }
      if (out.size() != expected_dim) throw ParseError("complement map has the wrong dimension");
      return out;
    };
    const auto kind = doc["kind"].get<std::string>();
    if (kind == "standard") return ComplementMap::standard(expected_dim);
    if (kind == "inner_product") return ComplementMap::inner_product(lattice::SMatrix::from_rows(rows("matrix")), params);
    if (kind == "flag") return ComplementMap::flag(rows("vectors"), params);
    throw ParseError("unknown complement map kind '" + kind + "'");
  });
}

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  Context cx{job, {}, Json::object(), false};
  try {
    dispatch(cx);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const GenericityError& e) {
    err << "genericity error: " << e.what() << '\n';
    return kGenericityError;
  } catch (const SizeGuardError& e) {
    err << "size guard: " << e.what() << '\n';
    return kSizeGuard;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  if (job.format == "json") {
    out << cx.doc.dump(2) << '\n';
  } else {
    render_text(cx.doc, out);
  }
  return cx.failed ? kVerifyFailed : kOk;
}

}  // namespace polyem::cli

#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "polyem/euler/euler.hpp"

namespace polyem::cli {

/// Exit statuses of `run`.
enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kParseError = 2,
  kGenericityError = 3,
  kSizeGuard = 4,
  kDomainError = 5,
};

struct JobSpec {
  std::string command;  // expand, mu, lambda, nu, count, volume, sum, integrate, verify
  // File paths, or inline JSON when the text starts with '{'.
  std::string polytope;
  std::string cone;
  std::string cmap;  // empty: standard inner product
  std::optional<int> order;
  std::string poly;  // polynomial in x1..xn
  std::string format = "text";
  unsigned seed = 1;
  bool constant_term = false;
  std::string identity = "all";
};

/// Input formats:
///   polytope {"points": [["0","0"],["2","0"],["0","1"]], "lattice": [[...], ...]}
///   cone     {"apex": [...], "generators": [[...]], "lineality": [[...]], "lattice": ...}
///   cmap     {"kind":"inner_product","matrix":[["1","0"],["0","1"]]} or
///            {"kind":"flag","vectors":[["d1","d2"],["0","1"]],"parameters":["d1","d2"]}
/// "lattice" lists basis vectors of Λ (default Z^n). Numbers are strings
/// ("3/4") or JSON integers. Throws ParseError.
geom::Polytope parse_polytope(const std::string& json_text);
geom::Cone parse_cone(const std::string& json_text);
interp::ComplementMap parse_cmap(const std::string& json_text, std::size_t expected_dim);

/// Runs one job; the report goes to `out`, diagnostics to `err`.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

}  // namespace polyem::cli

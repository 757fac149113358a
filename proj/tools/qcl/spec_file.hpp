#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qclifford/car.hpp"
#include "qclifford/clifford.hpp"

namespace qcl::cli {

using Parameters = std::map<std::string, mpq_class>;

// Algebra definition file. Matrix entries are exact: "p/q" strings, integers,
// {"re": ..., "im": ...} objects in the Q(i) ring, or linear expressions in
// the declared parameters such as "1/2*a - n11 + 1".
struct AlgebraSpec {
  int dim = 0;
  Ring ring = Ring::Rational;
  std::vector<std::vector<nlohmann::json>> b;
  Parameters params;
  std::map<std::string, std::string> elements;
  struct Car {
    int n = 0;
    std::vector<std::vector<nlohmann::json>> a;  // empty: A_extra = 0
  };
  std::optional<Car> car;
};

struct LoadedAlgebra {
  Algebra algebra;
  std::optional<CarContext> car;
};

// Throws InputError (or ParseError) on malformed content.
AlgebraSpec parse_spec(const nlohmann::json& doc);
AlgebraSpec load_spec(const std::filesystem::path& path);

// Evaluates the entries with the spec's parameters, overridden by the given
// values. force_gaussian promotes a Q spec to Q(i).
LoadedAlgebra instantiate(const AlgebraSpec& spec, const Parameters& overrides, int max_dim,
                          bool force_gaussian = false);

// A named element of the spec, or else multivector text.
Multivector resolve_element(const AlgebraSpec& spec, const Algebra& alg, const std::string& text);

// Exact value of one matrix entry.
Scalar evaluate_entry(const nlohmann::json& entry, const Parameters& params, Ring ring);

}  // namespace qcl::cli

#include "spec_file.hpp"

#include <cctype>
#include <fstream>

#include "qclifford/errors.hpp"
#include "qclifford/forms.hpp"
#include "qclifford/text.hpp"

namespace qcl::cli {

using nlohmann::json;

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// expr := [+-] term {(+|-) term};  term := rational | name | rational '*' name
mpq_class evaluate_linear(std::string_view text, const Parameters& params) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> mpq_class {
    throw ParseError("matrix entry: " + what + " in '" + std::string(text) + "'", pos);
  };
  auto name = [&]() -> mpq_class {
    const std::size_t begin = pos;
    while (pos < text.size() && is_name_char(text[pos])) ++pos;
    const std::string id(text.substr(begin, pos - begin));
    auto it = params.find(id);
    if (it == params.end()) {
      pos = begin;
      return fail("unknown parameter '" + id + "'");
    }
    return it->second;
  };
  auto term = [&]() -> mpq_class {
    skip();
    if (pos >= text.size()) return fail("unexpected end");
    if (is_name_start(text[pos])) return name();
    const std::size_t begin = pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
    if (pos == begin) return fail("expected a number or parameter");
    mpq_class value;
    try {
      value = Scalar::parse_rational(text.substr(begin, pos - begin));
    } catch (const ParseError&) {
      pos = begin;
      return fail("malformed rational");
    }
    skip();
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      skip();
      if (pos >= text.size() || !is_name_start(text[pos])) return fail("expected parameter after '*'");
      value *= name();
    }
    return value;
  };

  mpq_class total = 0;
  skip();
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) negative = text[pos++] == '-';
  mpq_class t = term();
  total += negative ? mpq_class(-t) : t;
  for (skip(); pos < text.size(); skip()) {
    const char op = text[pos];
    if (op != '+' && op != '-') return fail("unexpected character '" + std::string(1, op) + "'");
    ++pos;
    t = term();
    total += op == '-' ? mpq_class(-t) : t;
  }
  return total;
}

mpq_class evaluate_real(const json& v, const Parameters& params) {
  if (v.is_string()) return evaluate_linear(v.get<std::string>(), params);
  if (v.is_number_integer()) return mpq_class(std::to_string(v.get<long long>()));
  if (v.is_number()) throw InputError("floating-point matrix entries are not exact; use \"p/q\" strings");
  throw InputError("matrix entries must be strings, integers or {re, im} objects");
}

std::vector<std::vector<json>> read_matrix(const json& m, const char* what) {
  if (!m.is_array()) throw ShapeError(std::string(what) + " must be an array of rows");
  std::vector<std::vector<json>> rows;
  for (const auto& row : m) {
    if (!row.is_array()) throw ShapeError(std::string(what) + " rows must be arrays");
    rows.emplace_back(row.begin(), row.end());
  }
  return rows;
}

Matrix evaluate_matrix(const std::vector<std::vector<json>>& rows, std::size_t n, const Parameters& params,
                       Ring ring, const char* what) {
  if (rows.size() != n) throw ShapeError(std::string(what) + " must have " + std::to_string(n) + " rows");
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n)
      throw ShapeError(std::string(what) + " row " + std::to_string(r + 1) + " must have " + std::to_string(n) +
                       " entries");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = evaluate_entry(rows[r][c], params, ring);
  }
  return m;
}

}  // namespace

Scalar evaluate_entry(const json& entry, const Parameters& params, Ring ring) {
  if (entry.is_object()) {
    if (ring != Ring::Gaussian) throw InputError("{re, im} entries need \"ring\": \"Q(i)\"");
    for (const auto& [key, value] : entry.items())
      if (key != "re" && key != "im") throw InputError("unknown key '" + key + "' in complex entry");
    const mpq_class re = entry.contains("re") ? evaluate_real(entry["re"], params) : mpq_class(0);
    const mpq_class im = entry.contains("im") ? evaluate_real(entry["im"], params) : mpq_class(0);
    return Scalar(re, im);
  }
  return Scalar(evaluate_real(entry, params));
}

AlgebraSpec parse_spec(const json& doc) {
  if (!doc.is_object()) throw InputError("spec file must hold a JSON object");
  for (const auto& [key, value] : doc.items())
    if (key != "dim" && key != "ring" && key != "B" && key != "params" && key != "elements" && key != "car" &&
        key != "comment")
      throw InputError("unknown spec key '" + key + "'");

  AlgebraSpec spec;
  if (doc.contains("ring")) {
    const std::string ring = doc["ring"].get<std::string>();
    if (ring == "Q") spec.ring = Ring::Rational;
    else if (ring == "Q(i)") spec.ring = Ring::Gaussian;
    else throw InputError("ring must be \"Q\" or \"Q(i)\", got \"" + ring + "\"");
  }
  if (doc.contains("params")) {
    if (!doc["params"].is_object()) throw InputError("params must be an object of name: value");
    for (const auto& [name, value] : doc["params"].items()) {
      if (name.empty() || !is_name_start(name[0]) ||
          !std::all_of(name.begin(), name.end(), [](char c) { return is_name_char(c); }))
        throw InputError("invalid parameter name '" + name + "'");
      spec.params[name] = evaluate_real(value, {});
    }
  }
  if (doc.contains("elements")) {
    if (!doc["elements"].is_object()) throw InputError("elements must be an object of name: text");
    for (const auto& [name, value] : doc["elements"].items()) spec.elements[name] = value.get<std::string>();
  }
  if (doc.contains("car")) {
    const json& car = doc["car"];
    if (!car.is_object() || !car.contains("n") || !car["n"].is_number_integer())
      throw InputError("car block needs an integer n");
    AlgebraSpec::Car c;
    c.n = car["n"].get<int>();
    if (c.n < 1) throw InputError("car.n must be positive");
    if (car.contains("A")) c.a = read_matrix(car["A"], "car.A");
    spec.car = std::move(c);
    spec.dim = 2 * spec.car->n;
    if (doc.contains("dim") && doc["dim"].get<int>() != spec.dim) throw ShapeError("dim must equal 2 car.n");
    if (doc.contains("B")) throw InputError("give either B or a car block, not both");
    return spec;
  }
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) throw InputError("spec needs an integer dim");
  spec.dim = doc["dim"].get<int>();
  if (spec.dim < 1) throw ShapeError("dim must be positive");
  if (!doc.contains("B")) throw InputError("spec needs the matrix B");
  spec.b = read_matrix(doc["B"], "B");
  if (spec.b.size() != static_cast<std::size_t>(spec.dim)) throw ShapeError("B must be dim x dim");
  return spec;
}

AlgebraSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open spec file '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("spec file '" + path.string() + "' is not valid JSON: " + e.what(), e.byte);
  }
  try {
    return parse_spec(doc);
  } catch (const json::exception& e) {
    throw InputError("spec file '" + path.string() + "': " + e.what());
  }
}

LoadedAlgebra instantiate(const AlgebraSpec& spec, const Parameters& overrides, int max_dim, bool force_gaussian) {
  Parameters params = spec.params;
  for (const auto& [name, value] : overrides) {
    if (!params.count(name)) throw InputError("unknown parameter '" + name + "'");
    params[name] = value;
  }
  const Ring ring = force_gaussian ? Ring::Gaussian : spec.ring;
  if (spec.dim > max_dim)
    throw DimensionLimitError("dimension " + std::to_string(spec.dim) + " exceeds the limit " +
                              std::to_string(max_dim));
  if (spec.car) {
    const std::size_t d = static_cast<std::size_t>(spec.dim);
    const Matrix a = spec.car->a.empty() ? Matrix(d, d) : evaluate_matrix(spec.car->a, d, params, ring, "car.A");
    CarContext car = build_car(spec.car->n, a, ring);
    return LoadedAlgebra{car.algebra, car};
  }
  const Matrix b = evaluate_matrix(spec.b, static_cast<std::size_t>(spec.dim), params, ring, "B");
  return LoadedAlgebra{Algebra(split_form(b, ring, max_dim)), std::nullopt};
}

Multivector resolve_element(const AlgebraSpec& spec, const Algebra& alg, const std::string& text) {
  auto it = spec.elements.find(text);
  return alg.parse(it != spec.elements.end() ? it->second : text);
}

}  // namespace qcl::cli

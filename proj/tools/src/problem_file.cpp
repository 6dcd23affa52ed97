#include "problem_file.hpp"

#include "cflp/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace cflp::cli {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ProblemParseError(field, what);
}

const json& require(const json& obj, const char* key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

Rational rational_field(const json& v, const std::string& field) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (!v.is_string()) fail(field, "expected a rational string such as \"1/2\"");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(field, e.what());
  }
}

double real_field(const json& v, const std::string& field) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return rational_field(v, field).to_double();
  fail(field, "expected a number");
}

// Coefficients inside literals stay exact when written as "p/q"; JSON numbers
// are taken at their exact binary value.
Rational exact_coeff(const json& v, const std::string& field) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_number()) {
    const double d = v.get<double>();
    if (!std::isfinite(d)) fail(field, "non-finite coefficient");
    return Rational::from_double(d);
  }
  return rational_field(v, field);
}

FracPoly literal(const json& v, const std::string& field) {
  if (!v.is_array()) fail(field, "expected a list of {exponent, coeff}");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string at = field + "[" + std::to_string(i) + "]";
    if (!v[i].is_object()) fail(at, "expected an object");
    terms.push_back(Term{rational_field(require(v[i], "exponent", at), join(at, "exponent")),
                         exact_coeff(require(v[i], "coeff", at), join(at, "coeff"))});
  }
  return FracPoly(std::move(terms));
}

Coefficient coefficient(const json& v, const std::string& field) {
  if (v.is_number()) return Coefficient(v.get<double>());
  if (v.is_object() && v.contains("expr")) return Coefficient(literal(v["expr"], join(field, "expr")));
  fail(field, "expected a number or {\"expr\": [...]}");
}

RightHandSide builtin(const std::string& name, const std::string& field) {
  if (name == "exp") return PointFunction([](double x) { return std::exp(x); });
  if (name == "sin") return PointFunction([](double x) { return std::sin(x); });
  if (name == "cos") return PointFunction([](double x) { return std::cos(x); });
  if (name == "sqrt") return PointFunction([](double x) { return std::sqrt(x); });
  fail(field, "unknown builtin '" + name + "' (expected exp, sin, cos or sqrt)");
}

}  // namespace

FdeProblem parse_problem(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports "line L, column C" inside what().
    fail("syntax", e.what());
  }
  if (!doc.is_object()) fail("document", "expected a JSON object");

  FdeProblem p;
  try {
    p.alpha = Alpha(rational_field(require(doc, "alpha", ""), "alpha"));
  } catch (const DomainError& e) {
    fail("alpha", e.what());
  }
  p.gamma = rational_field(require(doc, "gamma", ""), "gamma");
  if (p.gamma.sign() <= 0) fail("gamma", "must be positive");

  if (const auto it = doc.find("terms"); it != doc.end()) {
    if (!it->is_array()) fail("terms", "expected a list");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string at = "terms[" + std::to_string(i) + "]";
      const json& t = (*it)[i];
      if (!t.is_object()) fail(at, "expected an object");
      const Rational order = rational_field(require(t, "order", at), join(at, "order"));
      if (t.contains("coeff") == t.contains("expr")) fail(at, "needs exactly one of coeff, expr");
      Coefficient c = t.contains("coeff") ? Coefficient(real_field(t["coeff"], join(at, "coeff")))
                                          : Coefficient(literal(t["expr"], join(at, "expr")));
      p.lower_terms.push_back(LowerTerm{std::move(c), order});
    }
  }

  if (const auto it = doc.find("zero_order_coeff"); it != doc.end()) {
    p.zero_order_coeff = coefficient(*it, "zero_order_coeff");
  }

  const json& rhs = require(doc, "rhs", "");
  if (rhs.is_object()) {
    const json& name = require(rhs, "builtin", "rhs");
    if (!name.is_string()) fail("rhs.builtin", "expected a string");
    p.rhs = builtin(name.get<std::string>(), "rhs.builtin");
  } else {
    p.rhs = literal(rhs, "rhs");
  }

  if (const auto it = doc.find("rhs_scale"); it != doc.end()) {
    p.rhs_scale = real_field(*it, "rhs_scale");
  }

  const json& ics = require(doc, "initial_conditions", "");
  if (!ics.is_array()) fail("initial_conditions", "expected a list");
  for (std::size_t i = 0; i < ics.size(); ++i) {
    p.initial_conditions.push_back(
        real_field(ics[i], "initial_conditions[" + std::to_string(i) + "]"));
  }

  const json& m = require(doc, "m", "");
  if (!m.is_number_unsigned()) fail("m", "expected a non-negative integer");
  p.m = m.get<unsigned>();

  try {
    p.validate();
  } catch (const DomainError& e) {
    fail("problem", e.what());
  }
  return p;
}

FdeProblem load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("file", "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

}  // namespace cflp::cli

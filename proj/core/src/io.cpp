// Copyright 2026 The Tropical Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <array>
#include <bit>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tropical/io.hpp"

namespace tropical::io {
namespace {

using json = nlohmann::json;

constexpr std::array<std::pair<ProblemKind, std::string_view>, 10> kKindNames{{
    {ProblemKind::kPrimal, "primal"},
    {ProblemKind::kDual, "dual"},
    {ProblemKind::kPrimalInteger, "primal-integer"},
    {ProblemKind::kDualInteger, "dual-integer"},
    {ProblemKind::kGap, "gap"},
    {ProblemKind::kTslp, "tslp"},
    {ProblemKind::kTslp2, "tslp2"},
    {ProblemKind::kStar, "star"},
    {ProblemKind::kMcm, "mcm"},
    {ProblemKind::kOnesided, "onesided"},
}};

// Solution keys holding node index lists rather than real vectors.
const std::set<std::string, std::less<>> kIndexKeys{"cycle", "path"};

std::string pointer(const std::string& parent, const std::string& key) {
  return parent + "/" + key;
}

std::string pointer(const std::string& parent, std::size_t index) {
  return parent + "/" + std::to_string(index);
}

Scalar read_scalar(const json& node, const std::string& where, bool allow_epsilon) {
  if (node.is_string()) {
    const auto& text = node.get_ref<const std::string&>();
    if (text == "-inf") {
      if (!allow_epsilon) {
        throw ParseError(where, "\"-inf\" is not allowed in a finite-only field");
      }
      return kEpsilon;
    }
    throw ParseError(where, "expected a number or \"-inf\", got string \"" + text +
                                "\" (NaN and +inf are not accepted)");
  }
  if (!node.is_number()) {
    throw ParseError(where, std::string("expected a number, got ") + node.type_name());
  }
  const double value = node.get<double>();
  if (!std::isfinite(value)) throw ParseError(where, "number out of range");
  return value;
}

Vector read_vector(const json& node, const std::string& where, bool allow_epsilon) {
  if (!node.is_array()) throw ParseError(where, "expected an array");
  if (node.empty()) throw ParseError(where, "vector must not be empty");
  std::vector<Scalar> values;
  values.reserve(node.size());
  for (std::size_t i = 0; i < node.size(); ++i) {
    values.push_back(read_scalar(node[i], pointer(where, i), allow_epsilon));
  }
  return Vector(std::move(values));
}

Matrix read_matrix(const json& node, const std::string& where, bool allow_epsilon) {
  if (!node.is_array()) throw ParseError(where, "expected an array of rows");
  if (node.empty()) throw ParseError(where, "matrix must have at least one row");
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t i = 0; i < node.size(); ++i) {
    const std::string row_where = pointer(where, i);
    const Vector row = read_vector(node[i], row_where, allow_epsilon);
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError(row_where, "row has " + std::to_string(row.size()) +
                                      " entries, expected " +
                                      std::to_string(rows.front().size()));
    }
    rows.emplace_back(row.begin(), row.end());
  }
  return Matrix(rows);
}

std::vector<std::size_t> read_indices(const json& node, const std::string& where) {
  if (!node.is_array()) throw ParseError(where, "expected an array of node indices");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    if (!node[i].is_number_unsigned()) {
      throw ParseError(pointer(where, i), "expected a non-negative integer");
    }
    out.push_back(node[i].get<std::size_t>());
  }
  return out;
}

json scalar_json(Scalar v) { return is_epsilon(v) ? json("-inf") : json(v); }

json vector_json(const Vector& v) {
  json out = json::array();
  for (Scalar x : v) out.push_back(scalar_json(x));
  return out;
}

json matrix_json(const Matrix& a) {
  json out = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (Scalar x : a.row(i)) row.push_back(scalar_json(x));
    out.push_back(std::move(row));
  }
  return out;
}

std::string format_real(double v) {
  if (v == 0.0 && std::signbit(v)) return "-0.0";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return buffer;
}

// Compact arrays, one key per line for objects, keys in lexicographic order
// (nlohmann::json stores objects in a std::map).
void write(std::string& out, const json& node, int indent) {
  switch (node.type()) {
    case json::value_t::object: {
      if (node.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = node.begin(); it != node.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out.append(static_cast<std::size_t>(indent + 2), ' ');
        out += json(it.key()).dump();
        out += ": ";
        write(out, it.value(), indent + 2);
      }
      out += "\n";
      out.append(static_cast<std::size_t>(indent), ' ');
      out += "}";
      return;
    }
    case json::value_t::array: {
      out += "[";
      for (std::size_t i = 0; i < node.size(); ++i) {
        if (i) out += ", ";
        write(out, node[i], indent);
      }
      out += "]";
      return;
    }
    case json::value_t::number_float:
      out += format_real(node.get<double>());
      return;
    default:
      out += node.dump();
      return;
  }
}

std::string canonical(const json& node) {
  std::string out;
  write(out, node, 0);
  out += "\n";
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "malformed JSON");
  }
}

bool same_bits(double x, double y) {
  return std::bit_cast<std::uint64_t>(x) == std::bit_cast<std::uint64_t>(y);
}

bool same_bits(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!same_bits(x[i], y[i])) return false;
  }
  return true;
}

bool same_bits(const std::map<std::string, Scalar>& x,
               const std::map<std::string, Scalar>& y) {
  if (x.size() != y.size()) return false;
  for (auto ix = x.begin(), iy = y.begin(); ix != x.end(); ++ix, ++iy) {
    if (ix->first != iy->first || !same_bits(ix->second, iy->second)) return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(ProblemKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<ProblemKind> problem_kind_from_string(std::string_view name) {
  for (const auto& [k, known] : kKindNames) {
    if (known == name) return k;
  }
  return std::nullopt;
}

LpInstance InstanceFile::lp() const {
  if (!a || !b || !c) throw ParseError("/", "instance lacks A, b or c");
  LpInstance inst{*a, *b, *c};
  inst.validate();
  return inst;
}

TwoSidedInstance InstanceFile::two_sided() const {
  if (!a || !c || !d) throw ParseError("/", "instance lacks A, c or d");
  TwoSidedInstance inst{*a, *d, *c};
  inst.validate();
  return inst;
}

InstanceFile parse_instance(std::string_view text) {
  const json root = parse_json(text);
  if (!root.is_object()) throw ParseError("/", "instance must be a JSON object");
  if (!root.contains("problem")) throw ParseError("/problem", "missing field");
  if (!root["problem"].is_string()) throw ParseError("/problem", "expected a string");
  const std::string kind_name = root["problem"].get<std::string>();
  const auto kind = problem_kind_from_string(kind_name);
  if (!kind) throw ParseError("/problem", "unknown problem kind \"" + kind_name + "\"");

  InstanceFile out;
  out.problem = *kind;

  std::set<std::string> required;
  std::set<std::string> optional{"tol"};
  bool epsilon_in_a = false;
  switch (*kind) {
    case ProblemKind::kPrimal:
    case ProblemKind::kDual:
    case ProblemKind::kPrimalInteger:
    case ProblemKind::kDualInteger:
    case ProblemKind::kGap:
      required = {"A", "b", "c"};
      break;
    case ProblemKind::kTslp:
    case ProblemKind::kTslp2:
      required = {"A", "c", "d"};
      break;
    case ProblemKind::kStar:
      required = {"A"};
      optional.insert("lambda");
      epsilon_in_a = true;
      break;
    case ProblemKind::kMcm:
      required = {"A"};
      epsilon_in_a = true;
      break;
    case ProblemKind::kOnesided:
      required = {"A", "b"};
      epsilon_in_a = true;
      break;
  }

  for (auto it = root.begin(); it != root.end(); ++it) {
    const std::string& key = it.key();
    if (key == "problem") continue;
    if (!required.contains(key) && !optional.contains(key)) {
      throw ParseError(pointer("", key), "field not used by problem kind \"" +
                                             kind_name + "\"");
    }
  }
  for (const auto& key : required) {
    if (!root.contains(key)) throw ParseError(pointer("", key), "missing field");
  }

  out.a = read_matrix(root["A"], "/A", epsilon_in_a);
  if (root.contains("b")) out.b = read_vector(root["b"], "/b", false);
  if (root.contains("c")) out.c = read_vector(root["c"], "/c", false);
  if (root.contains("d")) out.d = read_vector(root["d"], "/d", false);
  if (root.contains("lambda")) out.lambda = read_scalar(root["lambda"], "/lambda", false);
  if (root.contains("tol")) {
    const Scalar tol = read_scalar(root["tol"], "/tol", false);
    if (tol < 0) throw ParseError("/tol", "tolerance must be non-negative");
    out.tol = tol;
  }

  const Matrix& a = *out.a;
  if (out.b && out.b->size() != a.rows()) {
    throw ParseError("/b", "length " + std::to_string(out.b->size()) +
                               " does not match the " + std::to_string(a.rows()) +
                               " rows of A");
  }
  const bool square_kind = *kind == ProblemKind::kTslp || *kind == ProblemKind::kTslp2 ||
                           *kind == ProblemKind::kStar || *kind == ProblemKind::kMcm;
  if (square_kind && !a.is_square()) {
    throw ParseError("/A", "matrix must be square for problem kind \"" + kind_name + "\"");
  }
  const std::size_t c_len = square_kind ? a.rows() : a.cols();
  if (out.c && out.c->size() != c_len) {
    throw ParseError("/c", "length " + std::to_string(out.c->size()) + ", expected " +
                               std::to_string(c_len));
  }
  if (out.d && out.d->size() != a.rows()) {
    throw ParseError("/d", "length " + std::to_string(out.d->size()) + ", expected " +
                               std::to_string(a.rows()));
  }
  return out;
}

std::string serialize_instance(const InstanceFile& instance) {
  json root;
  root["problem"] = std::string(to_string(instance.problem));
  if (instance.a) root["A"] = matrix_json(*instance.a);
  if (instance.b) root["b"] = vector_json(*instance.b);
  if (instance.c) root["c"] = vector_json(*instance.c);
  if (instance.d) root["d"] = vector_json(*instance.d);
  if (instance.lambda) root["lambda"] = *instance.lambda;
  if (instance.tol) root["tol"] = *instance.tol;
  return canonical(root);
}

std::string serialize_solution(const SolutionFile& solution) {
  json root;
  root["problem"] = std::string(to_string(solution.problem));
  root["status"] = solution.status;
  root["tool_version"] = solution.tool_version;
  if (solution.method) root["method"] = *solution.method;
  if (solution.iterations) root["iterations"] = *solution.iterations;
  if (solution.solvable) root["solvable"] = *solution.solvable;
  for (const auto& [key, value] : solution.scalars) root[key] = scalar_json(value);
  for (const auto& [key, value] : solution.vectors) root[key] = vector_json(value);
  for (const auto& [key, value] : solution.indices) root[key] = value;
  if (solution.star) root["star"] = matrix_json(*solution.star);
  if (!solution.certificate.empty()) {
    json cert = json::object();
    for (const auto& [key, value] : solution.certificate) cert[key] = scalar_json(value);
    root["certificate"] = std::move(cert);
  }
  return canonical(root);
}

SolutionFile parse_solution(std::string_view text) {
  const json root = parse_json(text);
  if (!root.is_object()) throw ParseError("/", "solution must be a JSON object");
  SolutionFile out;
  bool saw_problem = false;
  bool saw_status = false;
  for (auto it = root.begin(); it != root.end(); ++it) {
    const std::string& key = it.key();
    const json& value = it.value();
    const std::string where = pointer("", key);
    if (key == "problem") {
      const auto kind = value.is_string()
                            ? problem_kind_from_string(value.get<std::string>())
                            : std::nullopt;
      if (!kind) throw ParseError(where, "unknown problem kind");
      out.problem = *kind;
      saw_problem = true;
    } else if (key == "status" || key == "tool_version" || key == "method") {
      if (!value.is_string()) throw ParseError(where, "expected a string");
      if (key == "status") {
        out.status = value.get<std::string>();
        saw_status = true;
      } else if (key == "tool_version") {
        out.tool_version = value.get<std::string>();
      } else {
        out.method = value.get<std::string>();
      }
    } else if (key == "iterations") {
      if (!value.is_number_unsigned()) throw ParseError(where, "expected a count");
      out.iterations = value.get<std::uint64_t>();
    } else if (key == "solvable") {
      if (!value.is_boolean()) throw ParseError(where, "expected a boolean");
      out.solvable = value.get<bool>();
    } else if (key == "certificate") {
      if (!value.is_object()) throw ParseError(where, "expected an object");
      for (auto c = value.begin(); c != value.end(); ++c) {
        out.certificate[c.key()] = read_scalar(c.value(), pointer(where, c.key()), true);
      }
    } else if (key == "star") {
      out.star = read_matrix(value, where, true);
    } else if (kIndexKeys.contains(key)) {
      out.indices[key] = read_indices(value, where);
    } else if (value.is_array()) {
      out.vectors.emplace(key, read_vector(value, where, true));
    } else {
      out.scalars[key] = read_scalar(value, where, true);
    }
  }
  if (!saw_problem) throw ParseError("/problem", "missing field");
  if (!saw_status) throw ParseError("/status", "missing field");
  return out;
}

bool SolutionFile::identical(const SolutionFile& other) const {
  if (problem != other.problem || status != other.status ||
      tool_version != other.tool_version || method != other.method ||
      iterations != other.iterations || solvable != other.solvable ||
      indices != other.indices) {
    return false;
  }
  if (!same_bits(scalars, other.scalars) || !same_bits(certificate, other.certificate)) {
    return false;
  }
  if (vectors.size() != other.vectors.size()) return false;
  for (auto x = vectors.begin(), y = other.vectors.begin(); x != vectors.end(); ++x, ++y) {
    if (x->first != y->first || !same_bits(x->second, y->second)) return false;
  }
  if (star.has_value() != other.star.has_value()) return false;
  if (star) {
    if (star->rows() != other.star->rows() || star->cols() != other.star->cols()) {
      return false;
    }
    for (std::size_t i = 0; i < star->rows(); ++i) {
      for (std::size_t j = 0; j < star->cols(); ++j) {
        if (!same_bits((*star)(i, j), (*other.star)(i, j))) return false;
      }
    }
  }
  return true;
}

std::string render_text(const SolutionFile& solution) {
  std::ostringstream out;
  out << "problem: " << to_string(solution.problem) << "\n";
  out << "status: " << solution.status << "\n";
  if (solution.method) out << "method: " << *solution.method << "\n";
  if (solution.iterations) out << "iterations: " << *solution.iterations << "\n";
  if (solution.solvable) out << "solvable: " << (*solution.solvable ? "yes" : "no") << "\n";
  for (const auto& [key, value] : solution.scalars) {
    out << key << ": " << (is_epsilon(value) ? std::string("-inf") : format_real(value))
        << "\n";
  }
  for (const auto& [key, value] : solution.vectors) {
    out << key << ": " << to_string(value) << "\n";
  }
  for (const auto& [key, value] : solution.indices) {
    out << key << ":";
    for (std::size_t v : value) out << " " << v + 1;
    out << "  (1-based)\n";
  }
  if (solution.star) out << "star: " << to_string(*solution.star) << "\n";
  if (!solution.certificate.empty()) {
    out << "certificate:\n";
    for (const auto& [key, value] : solution.certificate) {
      out << "  " << key << ": "
          << (is_epsilon(value) ? std::string("-inf") : format_real(value)) << "\n";
    }
  }
  return out.str();
}

}  // namespace tropical::io

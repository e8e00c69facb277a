#pragma once

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "flowext/dfa.hpp"
#include "flowext/graph_spec.hpp"
#include "flowext/network.hpp"
#include "flowext/optimize.hpp"
#include "flowext/point_set.hpp"

namespace flowext::io {

using json = nlohmann::json;

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return parse_rational(j.dump());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected a rational (\"p/q\" string or integer), got " + j.dump());
}

// Integers are written as JSON numbers when they fit, everything else as "p/q".
inline json rational_to_json(const Rational& value) {
  if (value.get_den() == 1 && value.get_num().fits_slong_p()) return value.get_num().get_si();
  return to_string(value);
}

inline std::vector<Rational> rational_vector_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected a list of rationals");
  std::vector<Rational> values;
  values.reserve(j.size());
  for (const json& item : j) values.push_back(rational_from_json(item));
  return values;
}

inline json rational_vector_to_json(const std::vector<Rational>& values) {
  json j = json::array();
  for (const Rational& v : values) j.push_back(rational_to_json(v));
  return j;
}

namespace detail {

inline std::size_t index_from_json(const json& j, const char* field) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
    throw InputError(std::string("field '") + field + "' must be a nonnegative integer");
  }
  return static_cast<std::size_t>(j.get<std::uint64_t>());
}

inline const json& require(const json& j, const char* field) {
  if (!j.is_object() || !j.contains(field)) {
    throw InputError(std::string("missing field '") + field + "'");
  }
  return j.at(field);
}

inline std::size_t parse_index(const std::string& text) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text[0] == '-') {
    throw InputError("column key '" + text + "' is not a coordinate index");
  }
  return static_cast<std::size_t>(value);
}

}  // namespace detail

// Reads the network interchange format. Capacities and flow values other than
// 1 are rejected: networks here are uncapacitated unit flows.
inline Network network_from_json(const json& j) {
  using detail::index_from_json;
  using detail::require;
  if (!j.is_object()) throw InputError("network JSON must be an object");
  if (j.contains("flow_value") && rational_from_json(j.at("flow_value")) != 1) {
    throw InputError("only unit flow value is supported");
  }
  if (j.contains("capacities")) throw InputError("capacitated networks are not supported");
  std::size_t dimension = index_from_json(require(j, "dimension"), "dimension");
  std::size_t node_count = index_from_json(require(j, "node_count"), "node_count");
  NodeId source = index_from_json(require(j, "source"), "source");
  NodeId sink = index_from_json(require(j, "sink"), "sink");
  std::vector<std::string> names;
  if (j.contains("coordinate_names") && !j.at("coordinate_names").is_null()) {
    for (const json& name : j.at("coordinate_names")) {
      if (!name.is_string()) throw InputError("coordinate names must be strings");
      names.push_back(name.get<std::string>());
    }
  }
  const json& arcs_json = require(j, "arcs");
  if (!arcs_json.is_array()) throw InputError("'arcs' must be a list");
  std::vector<Arc> arcs;
  arcs.reserve(arcs_json.size());
  for (const json& a : arcs_json) {
    if (a.contains("capacity") && !a.at("capacity").is_null()) {
      throw InputError("arc capacities are not supported (networks are uncapacitated)");
    }
    Arc arc;
    arc.id = index_from_json(require(a, "id"), "id");
    arc.tail = index_from_json(require(a, "tail"), "tail");
    arc.head = index_from_json(require(a, "head"), "head");
    if (a.contains("column")) {
      const json& column = a.at("column");
      if (!column.is_object()) throw InputError("arc column must be an object");
      for (const auto& [key, value] : column.items()) {
        arc.column[detail::parse_index(key)] = rational_from_json(value);
      }
    }
    arcs.push_back(std::move(arc));
  }
  return Network(node_count, source, sink, dimension, std::move(arcs), std::move(names));
}

inline json network_to_json(const Network& net) {
  json j;
  j["dimension"] = net.dimension();
  j["coordinate_names"] = net.coordinate_names();
  j["node_count"] = net.node_count();
  j["source"] = net.source();
  j["sink"] = net.sink();
  json arcs = json::array();
  for (const Arc& a : net.arcs()) {
    json column = json::object();
    for (const auto& [coord, value] : a.column) column[std::to_string(coord)] = rational_to_json(value);
    arcs.push_back({{"id", a.id}, {"tail", a.tail}, {"head", a.head}, {"column", column}});
  }
  j["arcs"] = std::move(arcs);
  return j;
}

inline std::string state_key(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

inline Dfa dfa_from_json(const json& j) {
  using detail::require;
  const json& states_json = require(j, "states");
  if (!states_json.is_array() || states_json.empty()) throw InputError("'states' must be a nonempty list");
  std::vector<std::string> names;
  std::map<std::string, std::size_t> index;
  for (const json& s : states_json) {
    std::string key = state_key(s);
    if (!index.emplace(key, names.size()).second) throw InputError("duplicate state '" + key + "'");
    names.push_back(key);
  }
  auto lookup = [&](const json& s) {
    auto it = index.find(state_key(s));
    if (it == index.end()) throw InputError("unknown state " + s.dump());
    return it->second;
  };
  std::size_t initial = lookup(require(j, "initial"));
  std::vector<bool> accepting(names.size(), false);
  for (const json& s : require(j, "accepting")) accepting[lookup(s)] = true;
  const json& table = require(j, "transitions");
  std::vector<Dfa::Transition> transitions(names.size());
  for (std::size_t q = 0; q < names.size(); ++q) {
    if (!table.contains(names[q])) throw InputError("no transitions for state '" + names[q] + "'");
    const json& row = table.at(names[q]);
    transitions[q] = {lookup(require(row, "0")), lookup(require(row, "1"))};
  }
  return Dfa(std::move(names), initial, std::move(accepting), std::move(transitions));
}

inline json dfa_to_json(const Dfa& m) {
  json j;
  j["states"] = m.names();
  j["initial"] = m.names()[m.initial()];
  json accepting = json::array();
  json transitions = json::object();
  for (std::size_t q = 0; q < m.size(); ++q) {
    if (m.is_accepting(q)) accepting.push_back(m.names()[q]);
    transitions[m.names()[q]] = {{"0", m.names()[m.next(q, 0)]}, {"1", m.names()[m.next(q, 1)]}};
  }
  j["accepting"] = std::move(accepting);
  j["transitions"] = std::move(transitions);
  return j;
}

inline json point_set_to_json(const PointSet& points) {
  json j = json::array();
  for (const Point& p : points) j.push_back(rational_vector_to_json(p));
  return j;
}

inline PointSet point_set_from_json(const json& j, std::size_t dimension) {
  if (!j.is_array()) throw InputError("point set must be a list of vectors");
  std::vector<Point> points;
  for (const json& p : j) points.push_back(rational_vector_from_json(p));
  return PointSet(dimension, std::move(points));
}

inline std::vector<std::vector<Rational>> matrix_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected a matrix (list of rows)");
  std::vector<std::vector<Rational>> rows;
  for (const json& row : j) rows.push_back(rational_vector_from_json(row));
  return rows;
}

// Objective for a network of the given dimension: either a flat list of d
// rationals, or an n x n matrix. A matrix is read row-major when d = n^2 and
// as symmetric edge weights of K_n (upper triangle) when d = n(n-1)/2.
inline std::vector<Rational> objective_from_json(const json& j, std::size_t dimension) {
  if (!j.is_array()) throw InputError("objective must be a list or a matrix");
  if (j.empty() || !j.front().is_array()) {
    std::vector<Rational> c = rational_vector_from_json(j);
    if (c.size() != dimension) {
      throw InputError("objective has " + std::to_string(c.size()) + " entries, expected " +
                       std::to_string(dimension));
    }
    return c;
  }
  auto matrix = matrix_from_json(j);
  const std::size_t n = matrix.size();
  flatten_square(matrix, "objective");
  if (n * n == dimension) return flatten_square(matrix, "objective");
  if (n * (n - 1) / 2 == dimension) {
    GraphSpec graph{GraphKind::complete, n};
    std::vector<Rational> c(dimension);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = i + 1; k < n; ++k) {
        if (matrix[i][k] != matrix[k][i]) throw InputError("edge weight matrix is not symmetric");
        c[graph.edge_index(i, k)] = matrix[i][k];
      }
    }
    return c;
  }
  throw InputError("a " + std::to_string(n) + "x" + std::to_string(n) +
                   " matrix does not fit a network of dimension " + std::to_string(dimension));
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

inline void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << j.dump(1) << '\n';
}

}  // namespace flowext::io

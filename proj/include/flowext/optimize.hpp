#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "flowext/constructions.hpp"
#include "flowext/graph_spec.hpp"
#include "flowext/network.hpp"
#include "flowext/paths.hpp"

namespace flowext {

struct OptResult {
  Rational value;
  Path path;
  Point vertex;
  Sense sense = Sense::min;
};

namespace detail {

inline bool improves(const Rational& candidate, const Rational& incumbent, Sense sense) {
  return sense == Sense::min ? candidate < incumbent : candidate > incumbent;
}

}  // namespace detail

// Optimizes c.x over the projected path polytope: best source-sink path under
// arc weights c.column(a). Among optimal paths the one whose arc-id sequence is
// lexicographically smallest is returned.
inline OptResult optimize_linear(const Network& net, const std::vector<Rational>& c, Sense sense) {
  net.require_valid("optimize_linear");
  const std::vector<Rational> w = arc_weights(net, c);
  const auto& order = net.topological_order();

  // Best value from each node to the sink.
  std::vector<Rational> to_sink(net.node_count());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    NodeId v = *it;
    if (v == net.sink()) continue;
    bool first = true;
    for (std::size_t a : net.out_arcs(v)) {
      Rational candidate = w[a] + to_sink[net.arc(a).head];
      if (first || detail::improves(candidate, to_sink[v], sense)) {
        to_sink[v] = std::move(candidate);
        first = false;
      }
    }
  }

  OptResult result;
  result.sense = sense;
  result.value = to_sink[net.source()];
  std::vector<std::size_t> indices;
  for (NodeId v = net.source(); v != net.sink();) {
    for (std::size_t a : net.out_arcs(v)) {
      if (w[a] + to_sink[net.arc(a).head] == to_sink[v]) {
        indices.push_back(a);
        result.path.arcs.push_back(net.arc(a).id);
        v = net.arc(a).head;
        break;
      }
    }
  }
  result.vertex = detail::project_arc_indices(net, indices);
  return result;
}

// Row-major flattening of a square matrix, checking its shape.
inline std::vector<Rational> flatten_square(const std::vector<std::vector<Rational>>& matrix,
                                            const char* what) {
  const std::size_t n = matrix.size();
  std::vector<Rational> flat;
  flat.reserve(n * n);
  for (const auto& row : matrix) {
    if (row.size() != n) throw InputError(std::string(what) + ": matrix is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return flat;
}

// Minimum-cost perfect matching of K_{n,n}; cost[i][j] is the cost of u_i w_j.
inline OptResult solve_assignment(const std::vector<std::vector<Rational>>& cost) {
  if (cost.empty()) throw InputError("solve_assignment: empty cost matrix");
  std::vector<Rational> c = flatten_square(cost, "solve_assignment");
  return optimize_linear(bipartite_matching_network(cost.size()), c, Sense::min);
}

// perm[i] = j for the edges u_i w_j of a matching vertex.
inline std::vector<std::size_t> assignment_from_vertex(const Point& vertex, std::size_t n) {
  std::vector<std::size_t> perm(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(vertex[i * n + j]) != 0) perm[i] = j;
    }
  }
  return perm;
}

// Upper triangle of a symmetric matrix in K_n coordinate order.
inline std::vector<Rational> complete_graph_weights(const std::vector<std::vector<Rational>>& weights) {
  const std::size_t n = weights.size();
  flatten_square(weights, "complete_graph_weights");
  GraphSpec graph{GraphKind::complete, n};
  std::vector<Rational> c(graph.dimension());
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(weights[i][i]) != 0) throw InputError("weight matrix must have a zero diagonal");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (weights[i][j] != weights[j][i]) {
        throw InputError("weight matrix is not symmetric at (" + std::to_string(i) + ", " +
                         std::to_string(j) + ")");
      }
      c[graph.edge_index(i, j)] = weights[i][j];
    }
  }
  return c;
}

// Minimum-weight Hamiltonian cycle by the Held-Karp recursion. This is
// optimize_linear on held_karp_network(n), run over HeldKarpLayout so arcs are
// generated per node instead of stored; the witness path uses the same arc ids
// as the materialized network.
inline OptResult solve_tsp(const std::vector<std::vector<Rational>>& weights) {
  const std::size_t n = weights.size();
  if (n < 3) throw InputError("solve_tsp: n must be >= 3");
  std::vector<Rational> c = complete_graph_weights(weights);
  HeldKarpLayout layout(n);
  GraphSpec graph{GraphKind::complete, n};

  // Node ids increase along every arc, so descending ids is a reverse
  // topological order.
  std::vector<Rational> to_sink(layout.node_count());
  for (NodeId v = layout.sink(); v-- > 0;) {
    bool first = true;
    layout.for_each_out_arc(v, [&](ArcId, NodeId head, std::uint32_t from, std::uint32_t to) {
      Rational candidate = weights[from][to] + to_sink[head];
      if (first || candidate < to_sink[v]) {
        to_sink[v] = std::move(candidate);
        first = false;
      }
    });
  }

  OptResult result;
  result.sense = Sense::min;
  result.value = to_sink[layout.source()];
  result.vertex.assign(graph.dimension(), 0);
  for (NodeId v = layout.source(); v != layout.sink();) {
    bool moved = false;
    NodeId next = v;
    layout.for_each_out_arc(v, [&](ArcId id, NodeId head, std::uint32_t from, std::uint32_t to) {
      if (moved || weights[from][to] + to_sink[head] != to_sink[v]) return;
      result.path.arcs.push_back(id);
      result.vertex[graph.edge_index(from, to)] += 1;
      next = head;
      moved = true;
    });
    v = next;
  }
  return result;
}

// Visiting order u_1, ... recovered from a Held-Karp witness path.
inline std::vector<std::size_t> tour_from_path(const Path& path, std::size_t n) {
  HeldKarpLayout layout(n);
  std::vector<std::size_t> tour{0};
  NodeId v = layout.source();
  for (ArcId id : path.arcs) {
    bool found = false;
    layout.for_each_out_arc(v, [&](ArcId arc, NodeId head, std::uint32_t, std::uint32_t to) {
      if (arc != id) return;
      if (to != 0) tour.push_back(to);
      v = head;
      found = true;
    });
    if (!found) throw InputError("tour_from_path: arc " + std::to_string(id) + " does not continue the path");
  }
  return tour;
}

}  // namespace flowext

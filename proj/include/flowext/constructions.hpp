#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "flowext/dfa.hpp"
#include "flowext/graph_spec.hpp"
#include "flowext/network.hpp"
#include "flowext/paths.hpp"
#include "flowext/point_set.hpp"
#include "flowext/transforms.hpp"

namespace flowext {

inline constexpr std::size_t max_bipartite_n = 18;
inline constexpr std::size_t max_nonbipartite_n = 32;
inline constexpr std::size_t max_held_karp_n = 20;

// Layered unrolling of an automaton over words of length n. Node (q, i) means
// "state q after reading i letters"; the arc leaving layer i-1 with label s
// has column s * e_i. Only states that are reachable from the initial state
// and can still reach acceptance are materialized, so the result validates
// whenever some word of length n is accepted.
//
// Node ids: source = (q0, 0) is 0, then layers 1..n-1 in state order, then the
// sink. Arc ids follow creation order: layer by layer, tails in id order,
// label 0 before label 1.
inline Network dfa_network(const Dfa& m, std::size_t n) {
  if (n == 0) throw InputError("dfa_network: n must be positive");
  const std::size_t q = m.size();
  std::vector<std::vector<bool>> live(n, std::vector<bool>(q, false));
  live[0][m.initial()] = true;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t s = 0; s < q; ++s) {
      if (!live[i - 1][s]) continue;
      live[i][m.next(s, 0)] = true;
      live[i][m.next(s, 1)] = true;
    }
  }
  // Backward pass: keep (s, i) only if some completion is accepted.
  std::vector<bool> useful(q);
  for (std::size_t s = 0; s < q; ++s) {
    useful[s] = m.is_accepting(m.next(s, 0)) || m.is_accepting(m.next(s, 1));
  }
  for (std::size_t i = n; i-- > 0;) {
    std::vector<bool> prev(q, false);
    for (std::size_t s = 0; s < q; ++s) {
      if (!useful[s]) live[i][s] = false;
      prev[s] = useful[m.next(s, 0)] || useful[m.next(s, 1)];
    }
    useful = std::move(prev);
  }

  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::vector<NodeId>> id(n, std::vector<NodeId>(q, none));
  NodeId next_id = 1;
  id[0][m.initial()] = 0;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t s = 0; s < q; ++s) {
      if (live[i][s]) id[i][s] = next_id++;
    }
  }
  const NodeId sink = next_id;

  std::vector<Arc> arcs;
  auto add = [&](NodeId tail, NodeId head, int label, std::size_t position) {
    Column column;
    if (label == 1) column[position] = 1;
    arcs.push_back({arcs.size(), tail, head, std::move(column)});
  };
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t s = 0; s < q; ++s) {
      if (!live[i - 1][s]) continue;
      for (int label = 0; label < 2; ++label) {
        std::size_t target = m.next(s, label);
        if (live[i][target]) add(id[i - 1][s], id[i][target], label, i - 1);
      }
    }
  }
  for (std::size_t s = 0; s < q; ++s) {
    if (!live[n - 1][s]) continue;
    for (int label = 0; label < 2; ++label) {
      if (m.is_accepting(m.next(s, label))) add(id[n - 1][s], sink, label, n - 1);
    }
  }
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return Network(sink + 1, 0, sink, n, std::move(arcs), std::move(names));
}

// Subsets of W as nodes (node id = bitmask), arcs S -> S + {w_j}. The arc
// into a set of size i matches u_i with w_j. Source is the empty set, sink is
// W; n * 2^(n-1) arcs, one source-sink path per permutation.
inline Network bipartite_matching_network(std::size_t n) {
  if (n == 0) throw InputError("bipartite_matching_network: n must be positive");
  if (n > max_bipartite_n) {
    throw TooLargeError("bipartite_matching_network: n = " + std::to_string(n) +
                        " exceeds the supported maximum " + std::to_string(max_bipartite_n));
  }
  GraphSpec graph{GraphKind::complete_bipartite, n};
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<Arc> arcs;
  arcs.reserve(n << (n - 1));
  for (std::uint64_t set = 0; set < full; ++set) {
    const std::size_t row = static_cast<std::size_t>(std::popcount(set));
    for (std::size_t j = 0; j < n; ++j) {
      if (set >> j & 1) continue;
      Column column;
      column[graph.edge_index(row, j)] = 1;
      arcs.push_back({arcs.size(), set, set | (std::uint64_t{1} << j), std::move(column)});
    }
  }
  return Network(full + 1, 0, full, graph.dimension(), std::move(arcs), graph.coordinate_names());
}

// Closed form for the node count of nonbipartite_matching_network(n):
// sum over k of C(n-k, k).
inline BigCount nonbipartite_node_count(std::size_t n) {
  BigCount total = 0;
  for (std::size_t k = 0; 2 * k <= n; ++k) {
    BigCount term;
    mpz_bin_uiui(term.get_mpz_t(), n - k, k);
    total += term;
  }
  return total;
}

// Level k holds the sets {u_1..u_k} + T with |T| = k. An arc adds one edge
// {u_i, u_j} and must keep u_{k+1} covered, so every path lists a perfect
// matching with u_i covered among its first i edges.
inline Network nonbipartite_matching_network(std::size_t n) {
  if (n < 2 || n % 2 != 0) {
    throw InputError("nonbipartite_matching_network: n must be even and >= 2");
  }
  if (n > max_nonbipartite_n) {
    throw TooLargeError("nonbipartite_matching_network: n = " + std::to_string(n) +
                        " exceeds the supported maximum " + std::to_string(max_nonbipartite_n));
  }
  GraphSpec graph{GraphKind::complete, n};
  std::vector<std::uint64_t> sets;
  for (std::size_t k = 0; 2 * k <= n; ++k) {
    const std::uint64_t prefix = (std::uint64_t{1} << k) - 1;
    const std::size_t free_bits = n - k;
    if (k == 0) {
      sets.push_back(0);
      continue;
    }
    // Gosper's hack over k-subsets of the free bits, increasing.
    std::uint64_t t = (std::uint64_t{1} << k) - 1;
    while (t < (std::uint64_t{1} << free_bits)) {
      sets.push_back(prefix | (t << k));
      std::uint64_t c = t & (~t + 1);
      std::uint64_t r = t + c;
      t = (((r ^ t) >> 2) / c) | r;
    }
  }
  std::unordered_map<std::uint64_t, NodeId> id;
  id.reserve(sets.size());
  for (NodeId v = 0; v < sets.size(); ++v) id.emplace(sets[v], v);

  std::vector<Arc> arcs;
  for (NodeId v = 0; v < sets.size(); ++v) {
    const std::uint64_t set = sets[v];
    const std::size_t k = static_cast<std::size_t>(std::popcount(set)) / 2;
    if (2 * k == n) continue;
    const bool next_covered = set >> k & 1;
    for (std::size_t a = 0; a < n; ++a) {
      if (set >> a & 1) continue;
      for (std::size_t b = a + 1; b < n; ++b) {
        if (set >> b & 1) continue;
        if (!next_covered && a != k) continue;
        const std::uint64_t target = set | (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
        Column column;
        column[graph.edge_index(a, b)] = 1;
        arcs.push_back({arcs.size(), v, id.at(target), std::move(column)});
      }
    }
  }
  const NodeId sink = id.at((n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1));
  return Network(sets.size(), 0, sink, graph.dimension(), std::move(arcs),
                 graph.coordinate_names());
}

// Node and arc numbering of the Held-Karp network, computed without
// materializing arcs. Vertex u_1 is 0; a state (S, v) stores S minus u_1 as a
// bitmask over vertices 1..n-1 (bit v-1 for vertex v) and the last vertex v.
//
// Node ids: source ({u_1}, u_1) = 0, then states by |S|, mask, v; sink last.
// Arc ids: grouped by tail id; within a tail, by increasing next vertex.
class HeldKarpLayout {
 public:
  struct State {
    std::uint32_t mask;
    std::uint32_t last;  // vertex index, 0 only for the source
  };

  explicit HeldKarpLayout(std::size_t n) : n_(n), m_(n - 1) {
    if (n < 3) throw InputError("Held-Karp network needs n >= 3");
    if (n > max_held_karp_n) {
      throw TooLargeError("Held-Karp network: n = " + std::to_string(n) +
                          " exceeds the supported maximum " + std::to_string(max_held_karp_n));
    }
    const std::uint32_t full = (std::uint32_t{1} << m_) - 1;
    index_.assign(std::size_t{full + 1} * m_, 0);
    states_.push_back({0, 0});
    std::vector<std::vector<std::uint32_t>> by_size(m_ + 1);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      by_size[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
    }
    for (std::size_t k = 1; k <= m_; ++k) {
      for (std::uint32_t mask : by_size[k]) {
        for (std::uint32_t v = 1; v <= m_; ++v) {
          if (!(mask >> (v - 1) & 1)) continue;
          index_[std::size_t{mask} * m_ + (v - 1)] = static_cast<std::uint32_t>(states_.size());
          states_.push_back({mask, v});
        }
      }
    }
    sink_ = states_.size();
    first_arc_.resize(states_.size() + 1);
    std::size_t arcs = 0;
    for (NodeId v = 0; v < states_.size(); ++v) {
      first_arc_[v] = arcs;
      arcs += out_degree(states_[v]);
    }
    first_arc_[states_.size()] = arcs;
  }

  std::size_t n() const { return n_; }
  std::size_t node_count() const { return states_.size() + 1; }
  std::size_t arc_count() const { return first_arc_.back(); }
  NodeId source() const { return 0; }
  NodeId sink() const { return sink_; }
  const State& state(NodeId v) const { return states_[v]; }
  ArcId first_arc(NodeId v) const { return first_arc_[v]; }

  NodeId node(std::uint32_t mask, std::uint32_t last) const {
    return index_[std::size_t{mask} * m_ + (last - 1)];
  }

  // visit(arc_id, head, from_vertex, to_vertex) for every arc leaving v, in id
  // order. Closing arcs report to_vertex = 0 (back to u_1).
  template <class Visitor>
  void for_each_out_arc(NodeId v, Visitor&& visit) const {
    if (v == sink_) return;
    const State& s = states_[v];
    ArcId arc = first_arc_[v];
    if (s.mask == full_mask()) {
      visit(arc, sink_, s.last, std::uint32_t{0});
      return;
    }
    for (std::uint32_t next = 1; next <= m_; ++next) {
      if (s.mask >> (next - 1) & 1) continue;
      visit(arc++, node(s.mask | (std::uint32_t{1} << (next - 1)), next), s.last, next);
    }
  }

 private:
  std::uint32_t full_mask() const { return (std::uint32_t{1} << m_) - 1; }

  std::size_t out_degree(const State& s) const {
    if (s.mask == full_mask()) return 1;
    return m_ - static_cast<std::size_t>(std::popcount(s.mask));
  }

  std::size_t n_;
  std::size_t m_;
  std::vector<State> states_;
  std::vector<std::uint32_t> index_;
  std::vector<std::size_t> first_arc_;
  NodeId sink_ = 0;
};

// Held-Karp network on K_n: source ({u_1}, u_1), sink (U, none); a path is a
// tour starting at u_1. Each arc carries the edge it traverses.
//
// States (S, u_1) with |S| > 1 are never reached from the source and are left
// out.
inline Network held_karp_network(std::size_t n) {
  HeldKarpLayout layout(n);
  GraphSpec graph{GraphKind::complete, n};
  std::vector<Arc> arcs;
  arcs.reserve(layout.arc_count());
  for (NodeId v = 0; v < layout.sink(); ++v) {
    layout.for_each_out_arc(v, [&](ArcId id, NodeId head, std::uint32_t from, std::uint32_t to) {
      Column column;
      column[graph.edge_index(from, to)] = 1;
      arcs.push_back({id, v, head, std::move(column)});
    });
  }
  return Network(layout.node_count(), layout.source(), layout.sink(), graph.dimension(),
                 std::move(arcs), graph.coordinate_names());
}

// Objective exposing the face of the TSP polytope of K_n used to embed the
// perfect matching polytope of K_{2k}, n = 4k + r. Vertices: u_i = i - 1 for
// i = 1..2k, w_j = 2k + j - 1 for j = 1..2k + r. The face fixes
//   x(u_i w_j) = 0 for i != j,   x(u_i w_i) = 1,
// and for r > 0 also x(w_{2k} w_{2k+1}) = ... = x(w_{2k+r-1} w_{2k+r}) = 1.
// The objective is -sum(zero edges) + sum(one edges) with optimum = number of
// one edges, attained exactly on the face.
inline LinearEquation tsp_face_objective(std::size_t n) {
  if (n < 4) throw InputError("tsp_face_objective: n must be >= 4");
  const std::size_t k = n / 4, r = n % 4;
  GraphSpec graph{GraphKind::complete, n};
  LinearEquation objective{std::vector<Rational>(graph.dimension(), 0), 0};
  auto u = [](std::size_t i) { return i - 1; };
  auto w = [&](std::size_t j) { return 2 * k + j - 1; };
  for (std::size_t i = 1; i <= 2 * k; ++i) {
    for (std::size_t j = 1; j <= 2 * k + r; ++j) {
      objective.coefficients[graph.edge_index(u(i), w(j))] = i == j ? 1 : -1;
    }
  }
  objective.rhs = static_cast<unsigned long>(2 * k);
  for (std::size_t j = 2 * k; j < 2 * k + r; ++j) {
    objective.coefficients[graph.edge_index(w(j), w(j + 1))] = 1;
    objective.rhs += 1;
  }
  return objective;
}

struct TspMatchingFace {
  Network face;          // Held-Karp network restricted to the face
  PointSet tours;        // vertex image of `face`, full K_n coordinates
  PointSet matchings;    // tours projected onto the edges inside U
};

// Restricts held_karp_network(n), n = 4k, to the face above and projects the
// surviving tours onto the K_{2k} edges among u_1..u_{2k}. The projection is
// the vertex set of the K_{2k} perfect matching polytope.
inline TspMatchingFace tsp_matching_face(std::size_t n) {
  if (n < 4 || n % 4 != 0) throw InputError("tsp_matching_face: n must be a positive multiple of 4");
  LinearEquation objective = tsp_face_objective(n);
  Network net = held_karp_network(n);
  std::optional<Network> face;
  try {
    face.emplace(restrict_to_face(net, objective.coefficients, objective.rhs, Sense::max));
  } catch (const FaceMismatchError& e) {
    throw ConstructionError(std::string("tsp_matching_face: ") + e.what());
  }
  PointSet tours = vertex_image(*face);
  if (tours.empty()) throw ConstructionError("tsp_matching_face: the face is empty");

  const std::size_t half = n / 2;
  GraphSpec whole{GraphKind::complete, n};
  GraphSpec inner{GraphKind::complete, half};
  std::vector<Point> projected;
  for (const Point& tour : tours) {
    Point x(inner.dimension(), 0);
    for (std::size_t e = 0; e < inner.dimension(); ++e) {
      auto [i, j] = inner.edge(e);
      x[e] = tour[whole.edge_index(i, j)];
    }
    projected.push_back(std::move(x));
  }
  return {std::move(*face), std::move(tours), PointSet(inner.dimension(), std::move(projected))};
}

}  // namespace flowext

#pragma once

// Generators and brute-force helpers shared by the test binaries.

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "flowext/flowext.hpp"

namespace flowext::testing {

// Random DAG on nodes 0..nodes-1 with arcs only from lower to higher ids,
// source 0 and sink nodes-1, integer columns in [lo, hi], trimmed to the
// nodes on source-sink paths. With `direct` a source-sink arc is added so the
// result always validates.
inline Network random_dag(std::mt19937& rng, std::size_t nodes, std::size_t dimension,
                          double arc_probability, int lo, int hi, bool direct = true) {
  std::bernoulli_distribution take(arc_probability);
  std::uniform_int_distribution<int> value(lo, hi);
  std::uniform_int_distribution<int> parallel(0, 4);
  std::vector<Arc> arcs;
  auto column = [&] {
    Column c;
    for (std::size_t i = 0; i < dimension; ++i) {
      int v = value(rng);
      if (v != 0) c[i] = v;
    }
    return c;
  };
  for (NodeId u = 0; u < nodes; ++u) {
    for (NodeId v = u + 1; v < nodes; ++v) {
      if (take(rng)) {
        arcs.push_back({arcs.size(), u, v, column()});
        if (parallel(rng) == 0) arcs.push_back({arcs.size(), u, v, column()});
      }
    }
  }
  if (direct) arcs.push_back({arcs.size(), 0, nodes - 1, column()});
  return prune_to_st_paths(Network(nodes, 0, nodes - 1, dimension, std::move(arcs)));
}

inline Dfa random_dfa(std::mt19937& rng, std::size_t max_states) {
  std::uniform_int_distribution<std::size_t> size(1, max_states);
  std::size_t q = size(rng);
  std::uniform_int_distribution<std::size_t> state(0, q - 1);
  std::bernoulli_distribution accept(0.5);
  std::vector<bool> accepting(q);
  std::vector<Dfa::Transition> transitions(q);
  for (std::size_t s = 0; s < q; ++s) {
    accepting[s] = accept(rng);
    transitions[s] = {state(rng), state(rng)};
  }
  return Dfa(state(rng), std::move(accepting), std::move(transitions));
}

inline std::vector<Rational> random_objective(std::mt19937& rng, std::size_t d, int lo = -9,
                                              int hi = 9) {
  std::uniform_int_distribution<int> value(lo, hi);
  std::vector<Rational> c(d);
  for (auto& x : c) x = value(rng);
  return c;
}

// Optimum of c.x over an explicit point set.
inline Rational brute_optimum(const PointSet& points, const std::vector<Rational>& c, Sense sense) {
  std::optional<Rational> best;
  for (const Point& p : points) {
    Rational value = dot(c, p);
    if (!best || (sense == Sense::min ? value < *best : value > *best)) best = value;
  }
  return *best;
}

// Shifts every column with random node potentials: arc (u, v) gains
// pot(u) - pot(v) in each coordinate, source and sink potentials 0. Path
// images are unchanged.
inline Network shift_by_potentials(const Network& net, std::mt19937& rng, int range) {
  std::uniform_int_distribution<int> value(-range, range);
  std::vector<std::vector<Rational>> pot(net.node_count(), std::vector<Rational>(net.dimension(), 0));
  for (NodeId v = 0; v < net.node_count(); ++v) {
    if (v == net.source() || v == net.sink()) continue;
    for (auto& x : pot[v]) x = value(rng);
  }
  std::vector<Arc> arcs(net.arcs().begin(), net.arcs().end());
  for (Arc& a : arcs) {
    for (std::size_t i = 0; i < net.dimension(); ++i) {
      Rational entry = a.column.count(i) ? a.column.at(i) : Rational(0);
      entry += pot[a.tail][i] - pot[a.head][i];
      if (sgn(entry) == 0) {
        a.column.erase(i);
      } else {
        a.column[i] = entry;
      }
    }
  }
  return Network(net.node_count(), net.source(), net.sink(), net.dimension(), std::move(arcs),
                 net.coordinate_names());
}

inline Network single_arc(std::size_t dimension, Column column) {
  return Network(2, 0, 1, dimension, {Arc{0, 0, 1, std::move(column)}});
}

}  // namespace flowext::testing

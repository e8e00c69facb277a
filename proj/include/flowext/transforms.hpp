#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flowext/network.hpp"
#include "flowext/paths.hpp"

namespace flowext {

// Thrown by nonnegativize when some coordinate takes a negative value on a
// source-sink path: no node potentials can fix that row, and the path is the
// Farkas certificate.
class InfeasibleProjectionError : public Error {
 public:
  InfeasibleProjectionError(std::size_t coordinate, Path witness, Rational value)
      : Error("coordinate " + std::to_string(coordinate) + " reaches " + to_string(value) +
              " < 0 on a source-sink path; the projected polytope is not nonnegative"),
        coordinate_(coordinate),
        witness_(std::move(witness)),
        value_(std::move(value)) {}

  std::size_t coordinate() const { return coordinate_; }
  const Path& witness() const { return witness_; }
  const Rational& value() const { return value_; }

 private:
  std::size_t coordinate_;
  Path witness_;
  Rational value_;
};

// Thrown by contract_zero_cycles when an arc inside a strongly connected
// component carries a nonzero column.
class CycleColumnError : public Error {
 public:
  CycleColumnError(std::string what, std::optional<ArcId> arc)
      : Error(std::move(what)), arc_(arc) {}
  const std::optional<ArcId>& arc() const { return arc_; }

 private:
  std::optional<ArcId> arc_;
};

// Thrown by restrict_to_face when the claimed face value is not the optimum.
class FaceMismatchError : public Error {
 public:
  FaceMismatchError(Rational optimum, Rational claimed)
      : Error("face value " + to_string(claimed) + " is not the optimum; the optimum is " +
              to_string(optimum)),
        optimum_(std::move(optimum)) {}
  const Rational& optimum() const { return optimum_; }

 private:
  Rational optimum_;
};

namespace detail {

inline std::vector<Arc> copy_arcs(const Network& net) {
  return {net.arcs().begin(), net.arcs().end()};
}

inline Network rebuild(const Network& like, std::size_t node_count, NodeId source, NodeId sink,
                       std::vector<Arc> arcs) {
  return Network(node_count, source, sink, like.dimension(), std::move(arcs),
                 like.coordinate_names());
}

}  // namespace detail

// Drops every node that is not on some source-sink walk (source and sink are
// always kept) and every arc touching one. Surviving nodes are renumbered
// compactly in their original order; arc ids are preserved.
inline Network prune_to_st_paths(const Network& net) {
  std::vector<bool> forward = net.reach(net.source(), true);
  std::vector<bool> backward = net.reach(net.sink(), false);
  std::vector<NodeId> new_id(net.node_count(), net.node_count());
  std::size_t kept = 0;
  for (NodeId v = 0; v < net.node_count(); ++v) {
    if ((forward[v] && backward[v]) || v == net.source() || v == net.sink()) new_id[v] = kept++;
  }
  std::vector<Arc> arcs;
  for (const Arc& a : net.arcs()) {
    if (forward[a.tail] && backward[a.head]) {
      arcs.push_back({a.id, new_id[a.tail], new_id[a.head], a.column});
    }
  }
  if (kept == net.node_count() && arcs.size() == net.arc_count()) return net;
  return detail::rebuild(net, kept, new_id[net.source()], new_id[net.sink()], std::move(arcs));
}

// Rewrites the projection with node potentials so that every column entry is
// nonnegative while every source-sink path keeps its image. For coordinate i
// the potential of node v is its shortest distance from the source under arc
// lengths M_i; source and sink potentials stay 0. Arc (u,v) then gets
// M_i + pot(u) - pot(v) >= 0.
inline Network nonnegativize(const Network& net) {
  net.require_valid("nonnegativize");
  const std::size_t d = net.dimension();
  const auto& order = net.topological_order();

  // Coordinates that appear in some column; the others are all zero.
  std::vector<bool> used(d, false);
  for (const Arc& a : net.arcs()) {
    for (const auto& [coord, value] : a.column) used[coord] = true;
  }

  std::vector<Arc> arcs = detail::copy_arcs(net);
  std::vector<Rational> dist(net.node_count());
  std::vector<std::size_t> via(net.node_count());
  for (std::size_t i = 0; i < d; ++i) {
    if (!used[i]) continue;
    auto length = [&](std::size_t arc_index) -> Rational {
      auto it = net.arc(arc_index).column.find(i);
      return it == net.arc(arc_index).column.end() ? Rational(0) : it->second;
    };
    std::vector<bool> seen(net.node_count(), false);
    dist[net.source()] = 0;
    seen[net.source()] = true;
    for (NodeId v : order) {
      if (v == net.source()) continue;
      for (std::size_t a : net.in_arcs(v)) {
        Rational candidate = dist[net.arc(a).tail] + length(a);
        if (!seen[v] || candidate < dist[v]) {
          dist[v] = candidate;
          via[v] = a;
          seen[v] = true;
        }
      }
    }
    if (sgn(dist[net.sink()]) < 0) {
      Path witness;
      for (NodeId v = net.sink(); v != net.source(); v = net.arc(via[v]).tail) {
        witness.arcs.push_back(net.arc(via[v]).id);
      }
      std::reverse(witness.arcs.begin(), witness.arcs.end());
      throw InfeasibleProjectionError(i, std::move(witness), dist[net.sink()]);
    }
    auto potential = [&](NodeId v) -> Rational {
      return v == net.source() || v == net.sink() ? Rational(0) : dist[v];
    };
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      Rational entry = length(a) + potential(arcs[a].tail) - potential(arcs[a].head);
      if (sgn(entry) == 0) {
        arcs[a].column.erase(i);
      } else {
        arcs[a].column[i] = entry;
      }
    }
  }
  return detail::rebuild(net, net.node_count(), net.source(), net.sink(), std::move(arcs));
}

namespace detail {

// Tarjan's algorithm, iterative. Returns a component label per node.
inline std::vector<std::size_t> strong_components(const Network& net) {
  const std::size_t n = net.node_count();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unvisited), low(n, 0), comp(n, unvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<NodeId> stack;
  std::size_t counter = 0, components = 0;
  struct Frame {
    NodeId node;
    std::size_t next;
  };
  for (NodeId root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      NodeId v = call.back().node;
      auto out = net.out_arcs(v);
      if (call.back().next < out.size()) {
        NodeId w = net.arc(out[call.back().next++]).head;
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        NodeId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = components;
        } while (w != v);
        ++components;
      }
      call.pop_back();
      if (!call.empty()) {
        NodeId parent = call.back().node;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
  return comp;
}

}  // namespace detail

// Contracts every strongly connected component to a single node. Arcs inside
// a component must have zero columns and are dropped. The result is pruned to
// nodes on source-sink paths, so it validates.
inline Network contract_zero_cycles(const Network& net) {
  std::vector<std::size_t> comp = detail::strong_components(net);
  const std::size_t components = *std::max_element(comp.begin(), comp.end()) + 1;

  if (comp[net.source()] == comp[net.sink()]) {
    // Only P = {0} is possible: every arc on a source-sink walk must vanish.
    std::vector<bool> forward = net.reach(net.source(), true);
    std::vector<bool> backward = net.reach(net.sink(), false);
    for (const Arc& a : net.arcs()) {
      if (forward[a.tail] && backward[a.head] && !a.column.empty()) {
        throw CycleColumnError("source and sink are strongly connected but arc " +
                                   std::to_string(a.id) + " has a nonzero column",
                               a.id);
      }
    }
    return Network(2, 0, 1, net.dimension(), {Arc{0, 0, 1, {}}}, net.coordinate_names());
  }

  for (const Arc& a : net.arcs()) {
    if (comp[a.tail] == comp[a.head] && !a.column.empty()) {
      throw CycleColumnError("arc " + std::to_string(a.id) +
                                 " lies on a directed cycle but has a nonzero column",
                             a.id);
    }
  }

  // Label components by their smallest member so acyclic inputs keep ids.
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<NodeId> first_member(components, none);
  for (NodeId v = 0; v < net.node_count(); ++v) {
    if (first_member[comp[v]] == none) first_member[comp[v]] = v;
  }
  std::vector<std::size_t> rank(components);
  {
    std::vector<std::size_t> by_first(components);
    for (std::size_t c = 0; c < components; ++c) by_first[c] = c;
    std::sort(by_first.begin(), by_first.end(),
              [&](std::size_t a, std::size_t b) { return first_member[a] < first_member[b]; });
    for (std::size_t r = 0; r < components; ++r) rank[by_first[r]] = r;
  }
  std::vector<Arc> arcs;
  for (const Arc& a : net.arcs()) {
    if (comp[a.tail] != comp[a.head]) {
      arcs.push_back({a.id, rank[comp[a.tail]], rank[comp[a.head]], a.column});
    }
  }
  Network contracted = detail::rebuild(net, components, rank[comp[net.source()]],
                                       rank[comp[net.sink()]], std::move(arcs));
  Network pruned = prune_to_st_paths(contracted);
  if (!pruned.report().ok) {
    throw PreconditionError("contract_zero_cycles: the sink is not reachable from the source");
  }
  return pruned;
}

// Keeps exactly the arcs that lie on some source-sink path attaining
// `value` = optimum of c.x (in the given sense), then prunes. The survivors'
// paths are precisely the optimal ones, so the vertex image of the result is
// the exposed face { x in image : c.x = value }.
inline Network restrict_to_face(const Network& net, const std::vector<Rational>& c,
                                const Rational& value, Sense sense = Sense::max) {
  net.require_valid("restrict_to_face");
  std::vector<Rational> w = arc_weights(net, c);
  if (sense == Sense::min) {
    for (Rational& x : w) x = -x;
  }
  const auto& order = net.topological_order();
  const std::size_t n = net.node_count();
  // Every node is on a source-sink path, so both passes reach every node.
  std::vector<Rational> best_from_source(n), best_to_sink(n);
  std::vector<bool> set(n, false);
  set[net.source()] = true;
  for (NodeId v : order) {
    for (std::size_t a : net.in_arcs(v)) {
      Rational candidate = best_from_source[net.arc(a).tail] + w[a];
      if (!set[v] || candidate > best_from_source[v]) {
        best_from_source[v] = candidate;
        set[v] = true;
      }
    }
  }
  std::fill(set.begin(), set.end(), false);
  set[net.sink()] = true;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    NodeId v = *it;
    for (std::size_t a : net.out_arcs(v)) {
      Rational candidate = best_to_sink[net.arc(a).head] + w[a];
      if (!set[v] || candidate > best_to_sink[v]) {
        best_to_sink[v] = candidate;
        set[v] = true;
      }
    }
  }
  Rational optimum = best_from_source[net.sink()];
  Rational target = sense == Sense::min ? Rational(-value) : value;
  if (optimum != target) {
    throw FaceMismatchError(sense == Sense::min ? Rational(-optimum) : optimum, value);
  }
  std::vector<Arc> arcs;
  for (std::size_t a = 0; a < net.arc_count(); ++a) {
    const Arc& arc = net.arc(a);
    if (best_from_source[arc.tail] + w[a] + best_to_sink[arc.head] == optimum) arcs.push_back(arc);
  }
  return prune_to_st_paths(
      detail::rebuild(net, net.node_count(), net.source(), net.sink(), std::move(arcs)));
}

}  // namespace flowext

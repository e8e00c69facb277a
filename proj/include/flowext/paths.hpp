#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flowext/network.hpp"
#include "flowext/point_set.hpp"

namespace flowext {

// Calls visit(arc_indices) for every source-sink path, in lexicographic order
// of arc ids. The span is only valid during the call. Returning false from
// visit stops the walk.
template <class Visitor>
void for_each_st_path(const Network& net, Visitor&& visit) {
  net.require_valid("path enumeration");
  struct Frame {
    NodeId node;
    std::size_t next;
  };
  std::vector<Frame> stack{{net.source(), 0}};
  std::vector<std::size_t> arcs;
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.node == net.sink()) {
      if (!visit(std::span<const std::size_t>(arcs))) return;
      stack.pop_back();
      if (!arcs.empty()) arcs.pop_back();
      continue;
    }
    auto out = net.out_arcs(top.node);
    if (top.next == out.size()) {
      stack.pop_back();
      if (!arcs.empty()) arcs.pop_back();
      continue;
    }
    std::size_t index = out[top.next++];
    arcs.push_back(index);
    stack.push_back({net.arc(index).head, 0});
  }
}

inline std::vector<Path> enumerate_st_paths(const Network& net,
                                            std::optional<std::size_t> limit = std::nullopt) {
  std::vector<Path> paths;
  for_each_st_path(net, [&](std::span<const std::size_t> arcs) {
    if (limit && paths.size() >= *limit) return false;
    Path p;
    p.arcs.reserve(arcs.size());
    for (std::size_t i : arcs) p.arcs.push_back(net.arc(i).id);
    paths.push_back(std::move(p));
    return true;
  });
  return paths;
}

// Number of source-sink paths, by dynamic programming over the topological
// order. Only needs acyclicity.
inline BigCount count_st_paths(const Network& net) {
  net.require_acyclic("path counting");
  std::vector<BigCount> ways(net.node_count(), 0);
  ways[net.source()] = 1;
  for (NodeId v : net.topological_order()) {
    if (ways[v] == 0) continue;
    for (std::size_t i : net.out_arcs(v)) ways[net.arc(i).head] += ways[v];
  }
  return ways[net.sink()];
}

namespace detail {

inline Point project_arc_indices(const Network& net, std::span<const std::size_t> arcs) {
  Point x(net.dimension(), 0);
  for (std::size_t i : arcs) {
    for (const auto& [coord, value] : net.arc(i).column) x[coord] += value;
  }
  return x;
}

}  // namespace detail

// Sum of the columns along a path. Throws InputError when the arcs do not
// chain from source to sink.
inline Point project_path(const Network& net, const Path& path) {
  std::vector<std::size_t> indices;
  indices.reserve(path.arcs.size());
  NodeId at = net.source();
  for (ArcId id : path.arcs) {
    auto index = net.find_arc(id);
    if (!index) throw InputError("path uses unknown arc id " + std::to_string(id));
    const Arc& a = net.arc(*index);
    if (a.tail != at) {
      throw InputError("path is broken at arc " + std::to_string(id) + ": expected tail " +
                       std::to_string(at) + ", got " + std::to_string(a.tail));
    }
    at = a.head;
    indices.push_back(*index);
  }
  if (at != net.sink()) throw InputError("path does not end at the sink");
  return detail::project_arc_indices(net, indices);
}

// The distinct projections of all source-sink paths. The path count is
// checked against `limit` before anything is enumerated.
inline PointSet vertex_image(const Network& net, std::optional<std::size_t> limit = std::nullopt) {
  net.require_valid("vertex_image");
  if (limit) {
    BigCount total = count_st_paths(net);
    if (total > BigCount(static_cast<unsigned long>(*limit))) {
      throw TooLargeError("network has " + total.get_str() + " source-sink paths, limit is " +
                          std::to_string(*limit));
    }
  }
  std::set<Point> seen;
  for_each_st_path(net, [&](std::span<const std::size_t> arcs) {
    seen.insert(detail::project_arc_indices(net, arcs));
    return true;
  });
  return PointSet(net.dimension(), std::vector<Point>(seen.begin(), seen.end()));
}

}  // namespace flowext

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flowext/errors.hpp"
#include "flowext/rational.hpp"

namespace flowext {

using NodeId = std::size_t;
using ArcId = std::size_t;

// One column of the projection matrix: coordinate index -> nonzero value.
using Column = std::map<std::size_t, Rational>;

// A point of the ambient space R^d.
using Point = std::vector<Rational>;

enum class Sense { min, max };

inline const char* to_string(Sense sense) { return sense == Sense::min ? "min" : "max"; }

struct Arc {
  ArcId id = 0;
  NodeId tail = 0;
  NodeId head = 0;
  Column column;
};

// A source-to-sink path given by its arc ids, in travel order.
struct Path {
  std::vector<ArcId> arcs;

  bool operator==(const Path&) const = default;
  auto operator<=>(const Path&) const = default;
};

struct ValidationReport {
  bool acyclic = false;
  std::vector<NodeId> unreachable_nodes;  // not reachable from the source
  std::vector<NodeId> dead_end_nodes;     // cannot reach the sink
  std::vector<ArcId> negative_column_arcs;
  bool ok = false;
};

// An uncapacitated network carrying one unit of flow from source to sink,
// together with the linear projection x = M * flow given column by column.
//
// Instances are immutable. Structural checks happen in the constructor
// (throwing InputError); semantic checks (acyclicity, trimming) are computed
// once and exposed through report().
class Network {
 public:
  Network(std::size_t node_count, NodeId source, NodeId sink, std::size_t dimension,
          std::vector<Arc> arcs, std::vector<std::string> coordinate_names = {})
      : node_count_(node_count),
        source_(source),
        sink_(sink),
        dimension_(dimension),
        arcs_(std::move(arcs)),
        coordinate_names_(std::move(coordinate_names)) {
    check_structure();
    build_adjacency();
    analyze();
  }

  std::size_t node_count() const { return node_count_; }
  std::size_t arc_count() const { return arcs_.size(); }
  NodeId source() const { return source_; }
  NodeId sink() const { return sink_; }
  std::size_t dimension() const { return dimension_; }
  const std::vector<std::string>& coordinate_names() const { return coordinate_names_; }

  // Arcs sorted by id. Positions in this vector are "arc indices".
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(std::size_t index) const { return arcs_[index]; }

  std::optional<std::size_t> find_arc(ArcId id) const {
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), id,
                               [](const Arc& a, ArcId key) { return a.id < key; });
    if (it == arcs_.end() || it->id != id) return std::nullopt;
    return static_cast<std::size_t>(it - arcs_.begin());
  }

  const Arc& arc_by_id(ArcId id) const {
    auto index = find_arc(id);
    if (!index) throw InputError("unknown arc id " + std::to_string(id));
    return arcs_[*index];
  }

  // Arc indices leaving / entering a node, in increasing id order.
  std::span<const std::size_t> out_arcs(NodeId v) const {
    return {out_index_.data() + out_offset_[v], out_offset_[v + 1] - out_offset_[v]};
  }
  std::span<const std::size_t> in_arcs(NodeId v) const {
    return {in_index_.data() + in_offset_[v], in_offset_[v + 1] - in_offset_[v]};
  }

  const ValidationReport& report() const { return report_; }

  // Kahn order, smallest node id first among ready nodes. Covers every node
  // only when the network is acyclic.
  const std::vector<NodeId>& topological_order() const { return topo_order_; }

  void require_valid(const char* operation) const {
    if (report_.ok) return;
    std::string why = !report_.acyclic ? "network has a directed cycle"
                                       : "some node lies on no source-sink path";
    throw PreconditionError(std::string(operation) + ": " + why);
  }

  void require_acyclic(const char* operation) const {
    if (!report_.acyclic) {
      throw PreconditionError(std::string(operation) + ": network has a directed cycle");
    }
  }

 private:
  void check_structure() {
    if (node_count_ < 2) throw InputError("network needs at least two nodes");
    if (source_ >= node_count_ || sink_ >= node_count_) {
      throw InputError("source or sink id out of range");
    }
    if (source_ == sink_) throw InputError("source and sink must differ");
    if (!coordinate_names_.empty() && coordinate_names_.size() != dimension_) {
      throw InputError("coordinate_names must have exactly `dimension` entries");
    }
    std::sort(arcs_.begin(), arcs_.end(), [](const Arc& a, const Arc& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
      Arc& a = arcs_[i];
      if (i > 0 && arcs_[i - 1].id == a.id) {
        throw InputError("duplicate arc id " + std::to_string(a.id));
      }
      if (a.tail >= node_count_ || a.head >= node_count_) {
        throw InputError("arc " + std::to_string(a.id) + " has an endpoint out of range");
      }
      if (a.tail == a.head) throw InputError("arc " + std::to_string(a.id) + " is a self-loop");
      for (auto it = a.column.begin(); it != a.column.end();) {
        if (it->first >= dimension_) {
          throw InputError("arc " + std::to_string(a.id) + " has coordinate index " +
                           std::to_string(it->first) + " outside [0, dimension)");
        }
        it = sgn(it->second) == 0 ? a.column.erase(it) : std::next(it);
      }
    }
  }

  void build_adjacency() {
    out_offset_.assign(node_count_ + 1, 0);
    in_offset_.assign(node_count_ + 1, 0);
    for (const Arc& a : arcs_) {
      ++out_offset_[a.tail + 1];
      ++in_offset_[a.head + 1];
    }
    for (std::size_t v = 0; v < node_count_; ++v) {
      out_offset_[v + 1] += out_offset_[v];
      in_offset_[v + 1] += in_offset_[v];
    }
    out_index_.resize(arcs_.size());
    in_index_.resize(arcs_.size());
    std::vector<std::size_t> out_fill(out_offset_.begin(), out_offset_.end() - 1);
    std::vector<std::size_t> in_fill(in_offset_.begin(), in_offset_.end() - 1);
    // arcs_ is sorted by id, so each adjacency list comes out id-sorted.
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
      out_index_[out_fill[arcs_[i].tail]++] = i;
      in_index_[in_fill[arcs_[i].head]++] = i;
    }
  }

  void analyze() {
    std::vector<std::size_t> in_degree(node_count_);
    for (const Arc& a : arcs_) ++in_degree[a.head];
    std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
    for (NodeId v = 0; v < node_count_; ++v) {
      if (in_degree[v] == 0) ready.push(v);
    }
    topo_order_.reserve(node_count_);
    while (!ready.empty()) {
      NodeId v = ready.top();
      ready.pop();
      topo_order_.push_back(v);
      for (std::size_t i : out_arcs(v)) {
        if (--in_degree[arcs_[i].head] == 0) ready.push(arcs_[i].head);
      }
    }
    report_.acyclic = topo_order_.size() == node_count_;

    std::vector<bool> forward = reach(source_, true);
    std::vector<bool> backward = reach(sink_, false);
    for (NodeId v = 0; v < node_count_; ++v) {
      if (!forward[v]) report_.unreachable_nodes.push_back(v);
      if (!backward[v]) report_.dead_end_nodes.push_back(v);
    }
    for (const Arc& a : arcs_) {
      for (const auto& [coord, value] : a.column) {
        if (sgn(value) < 0) {
          report_.negative_column_arcs.push_back(a.id);
          break;
        }
      }
    }
    report_.ok = report_.acyclic && report_.unreachable_nodes.empty() &&
                 report_.dead_end_nodes.empty();
  }

 public:
  // Nodes reachable from `start` along arcs (forward) or against them.
  std::vector<bool> reach(NodeId start, bool forward) const {
    std::vector<bool> seen(node_count_, false);
    std::vector<NodeId> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      for (std::size_t i : forward ? out_arcs(v) : in_arcs(v)) {
        NodeId w = forward ? arcs_[i].head : arcs_[i].tail;
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    return seen;
  }

 private:
  std::size_t node_count_;
  NodeId source_;
  NodeId sink_;
  std::size_t dimension_;
  std::vector<Arc> arcs_;
  std::vector<std::string> coordinate_names_;

  std::vector<std::size_t> out_offset_, out_index_;
  std::vector<std::size_t> in_offset_, in_index_;

  std::vector<NodeId> topo_order_;
  ValidationReport report_;
};

inline const ValidationReport& validate(const Network& net) { return net.report(); }

inline Rational column_dot(const Column& column, const std::vector<Rational>& c) {
  Rational sum = 0;
  for (const auto& [coord, value] : column) {
    if (sgn(c[coord]) != 0) sum += c[coord] * value;
  }
  return sum;
}

// c . column(a) for every arc, by arc index.
inline std::vector<Rational> arc_weights(const Network& net, const std::vector<Rational>& c) {
  if (c.size() != net.dimension()) {
    throw InputError("objective has length " + std::to_string(c.size()) + ", network dimension is " +
                     std::to_string(net.dimension()));
  }
  std::vector<Rational> weights(net.arc_count());
  for (std::size_t i = 0; i < net.arc_count(); ++i) weights[i] = column_dot(net.arc(i).column, c);
  return weights;
}

}  // namespace flowext

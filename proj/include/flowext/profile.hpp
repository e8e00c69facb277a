#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "flowext/graph_spec.hpp"
#include "flowext/network.hpp"
#include "flowext/oracle.hpp"

namespace flowext {

// Per-node values of a family of linear equations along source-v paths.
//
// epsilon[v][j] is coefficients_j . pi(path) for the first-found source-v
// path; consistent[v] says every source-v path agrees, for every equation.
struct NodeProfile {
  std::vector<std::vector<Rational>> epsilon;
  std::vector<bool> consistent;
  std::vector<bool> sink_matches_rhs;  // epsilon[sink][j] == rhs_j

  std::vector<std::size_t> support(NodeId v) const {
    std::vector<std::size_t> result;
    for (std::size_t j = 0; j < epsilon[v].size(); ++j) {
      if (sgn(epsilon[v][j]) != 0) result.push_back(j);
    }
    return result;
  }

  bool all_consistent() const {
    for (bool ok : consistent) {
      if (!ok) return false;
    }
    return true;
  }
};

inline NodeProfile equation_profile(const Network& net, const std::vector<LinearEquation>& equations) {
  net.require_valid("equation_profile");
  const std::size_t n = net.node_count();
  const std::size_t m = equations.size();
  std::vector<std::vector<Rational>> weights;
  weights.reserve(m);
  for (const LinearEquation& eq : equations) weights.push_back(arc_weights(net, eq.coefficients));

  NodeProfile profile;
  profile.epsilon.assign(n, std::vector<Rational>(m, 0));
  profile.consistent.assign(n, true);
  for (NodeId v : net.topological_order()) {
    auto in = net.in_arcs(v);
    if (v == net.source() || in.empty()) continue;
    bool first = true;
    for (std::size_t a : in) {
      NodeId u = net.arc(a).tail;
      if (!profile.consistent[u]) profile.consistent[v] = false;
      for (std::size_t j = 0; j < m; ++j) {
        Rational value = profile.epsilon[u][j] + weights[j][a];
        if (first) {
          profile.epsilon[v][j] = value;
        } else if (value != profile.epsilon[v][j]) {
          profile.consistent[v] = false;
        }
      }
      first = false;
    }
  }
  profile.sink_matches_rhs.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    profile.sink_matches_rhs[j] = profile.epsilon[net.sink()][j] == equations[j].rhs;
  }
  return profile;
}

struct CertificateReport {
  std::vector<NodeId> middle_nodes;   // |supp(eps^v)| == n
  std::vector<ArcId> crossing_arcs;   // |supp(tail)| < n < |supp(head)|
  std::size_t count = 0;
  Rational bound;
};

// Counts the nodes and arcs through which every matching path of a K_{n,n}
// extension must pass, measured by the support of the degree-equation profile.
// The network must have nonnegative columns and a consistent profile.
inline CertificateReport support_certificate(const Network& net, std::size_t n,
                                             const std::vector<LinearEquation>& degree_equations) {
  if (n < 2 || n % 2 != 0) throw InputError("support_certificate: n must be even and >= 2");
  if (net.dimension() != n * n) {
    throw InputError("support_certificate: network dimension " + std::to_string(net.dimension()) +
                     " is not n^2 = " + std::to_string(n * n));
  }
  net.require_valid("support_certificate");
  if (!net.report().negative_column_arcs.empty()) {
    throw PreconditionError("support_certificate: columns must be nonnegative (run nonnegativize)");
  }
  NodeProfile profile = equation_profile(net, degree_equations);
  for (NodeId v = 0; v < net.node_count(); ++v) {
    if (!profile.consistent[v]) {
      throw PreconditionError("support_certificate: degree profile is inconsistent at node " +
                              std::to_string(v));
    }
  }
  std::vector<std::size_t> support_size(net.node_count());
  for (NodeId v = 0; v < net.node_count(); ++v) support_size[v] = profile.support(v).size();

  CertificateReport report;
  for (NodeId v = 0; v < net.node_count(); ++v) {
    if (support_size[v] == n) report.middle_nodes.push_back(v);
  }
  for (const Arc& a : net.arcs()) {
    if (support_size[a.tail] < n && n < support_size[a.head]) report.crossing_arcs.push_back(a.id);
  }
  report.count = report.middle_nodes.size() + report.crossing_arcs.size();
  report.bound = oracle::matching_lower_bound(n);
  return report;
}

inline CertificateReport support_certificate(const Network& net, std::size_t n) {
  GraphSpec graph{GraphKind::complete_bipartite, n};
  return support_certificate(net, n, graph.degree_constraints(1));
}

}  // namespace flowext

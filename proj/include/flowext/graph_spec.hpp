#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "flowext/errors.hpp"
#include "flowext/rational.hpp"

namespace flowext {

// A linear equation coefficients . x = rhs over R^d.
struct LinearEquation {
  std::vector<Rational> coefficients;
  Rational rhs;
};

enum class GraphKind { complete, complete_bipartite };

// Coordinate system of R^E for K_n or K_{n,n}.
//
//   complete_bipartite: edge (u_i, w_j) has index i*n + j (row-major).
//   complete:           edge (u_i, u_j), i < j, lexicographic.
//
// Vertices are 0-based here; coordinate names are 1-based ("u1w2", "u1u3").
struct GraphSpec {
  GraphKind kind;
  std::size_t n;

  std::size_t dimension() const {
    return kind == GraphKind::complete_bipartite ? n * n : n * (n - 1) / 2;
  }

  // Bipartite: i indexes U, j indexes W. Complete: any i != j.
  std::size_t edge_index(std::size_t i, std::size_t j) const {
    if (kind == GraphKind::complete_bipartite) return i * n + j;
    if (i == j) throw InputError("K_n has no loop edges");
    if (i > j) std::swap(i, j);
    return i * n - i * (i + 1) / 2 + (j - i - 1);
  }

  std::pair<std::size_t, std::size_t> edge(std::size_t index) const {
    if (kind == GraphKind::complete_bipartite) return {index / n, index % n};
    std::size_t i = 0;
    while (index >= n - 1 - i) {
      index -= n - 1 - i;
      ++i;
    }
    return {i, i + 1 + index};
  }

  std::vector<std::string> coordinate_names() const {
    std::vector<std::string> names;
    names.reserve(dimension());
    for (std::size_t k = 0; k < dimension(); ++k) {
      auto [i, j] = edge(k);
      const char* other = kind == GraphKind::complete_bipartite ? "w" : "u";
      names.push_back("u" + std::to_string(i + 1) + other + std::to_string(j + 1));
    }
    return names;
  }

  std::size_t vertex_count() const { return kind == GraphKind::complete_bipartite ? 2 * n : n; }

  // x(delta(v)) = rhs for every vertex. Bipartite vertex order is
  // u_1..u_n, w_1..w_n.
  std::vector<LinearEquation> degree_constraints(const Rational& rhs) const {
    std::vector<LinearEquation> result;
    for (std::size_t v = 0; v < vertex_count(); ++v) {
      LinearEquation eq{std::vector<Rational>(dimension(), 0), rhs};
      for (std::size_t k = 0; k < dimension(); ++k) {
        auto [i, j] = edge(k);
        bool incident = kind == GraphKind::complete_bipartite ? (v < n ? i == v : j == v - n)
                                                              : (i == v || j == v);
        if (incident) eq.coefficients[k] = 1;
      }
      result.push_back(std::move(eq));
    }
    return result;
  }
};

}  // namespace flowext

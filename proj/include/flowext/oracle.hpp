#pragma once

// Brute-force vertex sets straight from the combinatorial definitions. Nothing
// here touches networks: coordinates are laid out with local tables so the
// oracle stays an independent check of the constructions.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <string>
#include <vector>

#include "flowext/dfa.hpp"
#include "flowext/errors.hpp"
#include "flowext/point_set.hpp"
#include "flowext/rational.hpp"

namespace flowext::oracle {

inline constexpr std::size_t default_budget = 10'000'000;

namespace detail {

inline BigCount factorial(std::size_t n) {
  BigCount result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

inline void check_budget(const BigCount& count, std::size_t budget, const char* what) {
  if (count > BigCount(static_cast<unsigned long>(budget))) {
    throw TooLargeError(std::string(what) + ": " + count.get_str() +
                        " points exceed the enumeration budget of " + std::to_string(budget));
  }
}

// index[i][j] of edge u_i u_j in the lexicographic order of pairs i < j.
inline std::vector<std::vector<std::size_t>> complete_edge_table(std::size_t n) {
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n, 0));
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) table[i][j] = table[j][i] = next++;
  }
  return table;
}

}  // namespace detail

// All n! permutation matrices of K_{n,n}, row-major over (u_i, w_j).
inline PointSet perfect_matchings_bipartite(std::size_t n, std::size_t budget = default_budget) {
  if (n == 0) throw InputError("perfect_matchings_bipartite: n must be positive");
  detail::check_budget(detail::factorial(n), budget, "perfect_matchings_bipartite");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Point> points;
  do {
    Point x(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) x[i * n + perm[i]] = 1;
    points.push_back(std::move(x));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return PointSet(n * n, std::move(points));
}

// All (n-1)!! perfect matchings of K_n by recursive pairing of the lowest
// unmatched vertex.
inline PointSet perfect_matchings_complete(std::size_t n, std::size_t budget = default_budget) {
  if (n < 2 || n % 2 != 0) throw InputError("perfect_matchings_complete: n must be even and >= 2");
  BigCount count = 1;
  for (std::size_t k = n - 1; k >= 1; k -= 2) {
    count *= static_cast<unsigned long>(k);
    if (k == 1) break;
  }
  detail::check_budget(count, budget, "perfect_matchings_complete");
  auto table = detail::complete_edge_table(n);
  const std::size_t d = n * (n - 1) / 2;
  std::vector<Point> points;
  std::vector<bool> matched(n, false);
  Point x(d, 0);
  auto recurse = [&](auto& self) -> void {
    std::size_t first = 0;
    while (first < n && matched[first]) ++first;
    if (first == n) {
      points.push_back(x);
      return;
    }
    matched[first] = true;
    for (std::size_t partner = first + 1; partner < n; ++partner) {
      if (matched[partner]) continue;
      matched[partner] = true;
      x[table[first][partner]] = 1;
      self(self);
      x[table[first][partner]] = 0;
      matched[partner] = false;
    }
    matched[first] = false;
  };
  recurse(recurse);
  return PointSet(d, std::move(points));
}

// Edge sets of all (n-1)!/2 Hamiltonian cycles of K_n: orders of u_2..u_n
// after u_1, keeping one of each reversal pair.
inline PointSet hamiltonian_cycles(std::size_t n, std::size_t budget = default_budget) {
  if (n < 3) throw InputError("hamiltonian_cycles: n must be >= 3");
  detail::check_budget(detail::factorial(n - 1) / 2, budget, "hamiltonian_cycles");
  auto table = detail::complete_edge_table(n);
  const std::size_t d = n * (n - 1) / 2;
  std::vector<std::size_t> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  std::vector<Point> points;
  do {
    if (rest.front() > rest.back()) continue;
    Point x(d, 0);
    std::size_t prev = 0;
    for (std::size_t v : rest) {
      x[table[prev][v]] = 1;
      prev = v;
    }
    x[table[prev][0]] = 1;
    points.push_back(std::move(x));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return PointSet(d, std::move(points));
}

// 0/1 vectors of all accepted words of length n.
inline PointSet language_vectors(const Dfa& m, std::size_t n, std::size_t budget = default_budget) {
  if (n == 0) throw InputError("language_vectors: n must be positive");
  if (n >= 63) throw TooLargeError("language_vectors: 2^n words exceed the enumeration budget");
  detail::check_budget(BigCount(1) << static_cast<unsigned long>(n), budget, "language_vectors");
  std::vector<Point> points;
  std::vector<int> word(n);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    for (std::size_t i = 0; i < n; ++i) word[i] = static_cast<int>((bits >> (n - 1 - i)) & 1);
    if (m.accepts(word)) points.push_back(Point(word.begin(), word.end()));
  }
  return PointSet(n, std::move(points));
}

struct DiffReport {
  bool equal = false;
  std::size_t only_in_first_count = 0;
  std::size_t only_in_second_count = 0;
  std::vector<Point> only_in_first;  // capped samples
  std::vector<Point> only_in_second;
};

inline DiffReport compare_point_sets(const PointSet& a, const PointSet& b, std::size_t cap = 10) {
  if (a.dimension() != b.dimension()) {
    throw InputError("compare_point_sets: dimensions " + std::to_string(a.dimension()) + " and " +
                     std::to_string(b.dimension()) + " differ");
  }
  DiffReport report;
  std::vector<Point> left, right;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(left));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(right));
  report.only_in_first_count = left.size();
  report.only_in_second_count = right.size();
  left.resize(std::min(left.size(), cap));
  right.resize(std::min(right.size(), cap));
  report.only_in_first = std::move(left);
  report.only_in_second = std::move(right);
  report.equal = report.only_in_first_count == 0 && report.only_in_second_count == 0;
  return report;
}

// n! / (2 * (n/2)! * (n/2)!): minimum number of middle nodes plus crossing
// arcs in any source-sink path extension of the K_{n,n} matching polytope.
inline Rational matching_lower_bound(std::size_t n) {
  if (n < 2 || n % 2 != 0) throw InputError("matching_lower_bound: n must be even and >= 2");
  BigCount half = detail::factorial(n / 2);
  Rational bound(detail::factorial(n), BigCount(2 * half * half));
  bound.canonicalize();
  return bound;
}

}  // namespace flowext::oracle

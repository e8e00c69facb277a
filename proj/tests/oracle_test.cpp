#include <gtest/gtest.h>

#include "flowext/flowext.hpp"

namespace flowext {
namespace {

std::size_t ones(const Point& p) {
  std::size_t count = 0;
  for (const Rational& x : p) {
    EXPECT_TRUE(x == 0 || x == 1);
    count += x == 1;
  }
  return count;
}

TEST(Oracle, BipartiteMatchings) {
  EXPECT_EQ(oracle::perfect_matchings_bipartite(1).size(), 1u);
  EXPECT_EQ(oracle::perfect_matchings_bipartite(3).size(), 6u);
  PointSet four = oracle::perfect_matchings_bipartite(4);
  EXPECT_EQ(four.size(), 24u);
  for (const Point& p : four) EXPECT_EQ(ones(p), 4u);
  EXPECT_THROW(oracle::perfect_matchings_bipartite(5, 100), TooLargeError);
  EXPECT_THROW(oracle::perfect_matchings_bipartite(0), InputError);
}

TEST(Oracle, CompleteMatchings) {
  EXPECT_EQ(oracle::perfect_matchings_complete(2).size(), 1u);
  EXPECT_EQ(oracle::perfect_matchings_complete(4).size(), 3u);
  PointSet six = oracle::perfect_matchings_complete(6);
  EXPECT_EQ(six.size(), 15u);
  for (const Point& p : six) EXPECT_EQ(ones(p), 3u);
  EXPECT_EQ(oracle::perfect_matchings_complete(8).size(), 105u);
  EXPECT_THROW(oracle::perfect_matchings_complete(5), InputError);
}

TEST(Oracle, HamiltonianCycles) {
  EXPECT_EQ(oracle::hamiltonian_cycles(3).size(), 1u);
  EXPECT_EQ(oracle::hamiltonian_cycles(4).size(), 3u);
  PointSet five = oracle::hamiltonian_cycles(5);
  EXPECT_EQ(five.size(), 12u);
  GraphSpec graph{GraphKind::complete, 5};
  for (const Point& p : five) {
    EXPECT_EQ(ones(p), 5u);
    std::vector<int> degree(5, 0);
    for (std::size_t e = 0; e < p.size(); ++e) {
      if (p[e] == 1) {
        auto [i, j] = graph.edge(e);
        ++degree[i];
        ++degree[j];
      }
    }
    for (int d : degree) EXPECT_EQ(d, 2);
  }
  EXPECT_THROW(oracle::hamiltonian_cycles(2), InputError);
}

TEST(Oracle, LanguageVectors) {
  EXPECT_EQ(oracle::language_vectors(Dfa::all_accepting(), 3).size(), 8u);
  EXPECT_EQ(oracle::language_vectors(Dfa::even_parity(), 3),
            PointSet(3, {Point{0, 0, 0}, Point{0, 1, 1}, Point{1, 0, 1}, Point{1, 1, 0}}));
  Dfa none(0, {false}, {{{0, 0}}});
  EXPECT_TRUE(oracle::language_vectors(none, 4).empty());
  EXPECT_THROW(oracle::language_vectors(none, 30, 1000), TooLargeError);
}

TEST(Oracle, ComparePointSets) {
  PointSet x(2, {Point{1, 0}, Point{0, 1}});
  EXPECT_TRUE(oracle::compare_point_sets(x, x).equal);
  auto diff = oracle::compare_point_sets(PointSet(2, {Point{1, 0}}), PointSet(2, {Point{0, 1}}));
  EXPECT_FALSE(diff.equal);
  EXPECT_EQ(diff.only_in_first, std::vector<Point>{(Point{1, 0})});
  EXPECT_EQ(diff.only_in_second, std::vector<Point>{(Point{0, 1})});
  EXPECT_THROW(oracle::compare_point_sets(x, PointSet(3)), InputError);
  EXPECT_TRUE(oracle::compare_point_sets(vertex_image(bipartite_matching_network(4)),
                                         oracle::perfect_matchings_bipartite(4))
                  .equal);
}

TEST(Oracle, DiffSamplesAreCapped) {
  auto diff = oracle::compare_point_sets(oracle::perfect_matchings_bipartite(4), PointSet(16), 5);
  EXPECT_EQ(diff.only_in_first_count, 24u);
  EXPECT_EQ(diff.only_in_first.size(), 5u);
}

TEST(Oracle, MatchingLowerBound) {
  EXPECT_EQ(oracle::matching_lower_bound(2), 1);
  EXPECT_EQ(oracle::matching_lower_bound(4), 3);
  EXPECT_EQ(oracle::matching_lower_bound(6), 10);
  EXPECT_EQ(oracle::matching_lower_bound(8), 35);
  EXPECT_THROW(oracle::matching_lower_bound(3), InputError);
}

}  // namespace
}  // namespace flowext

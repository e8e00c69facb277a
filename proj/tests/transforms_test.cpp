#include <gtest/gtest.h>

#include <random>

#include "flowext/flowext.hpp"
#include "test_support.hpp"

namespace flowext {
namespace {

using testing::single_arc;

bool all_entries_nonnegative(const Network& net) {
  for (const Arc& a : net.arcs()) {
    for (const auto& [coord, value] : a.column) {
      if (sgn(value) < 0) return false;
    }
  }
  return true;
}

void expect_same_projections(const Network& a, const Network& b) {
  auto paths = enumerate_st_paths(a);
  ASSERT_EQ(paths, enumerate_st_paths(b));
  for (const Path& p : paths) EXPECT_EQ(project_path(a, p), project_path(b, p));
}

void expect_same_network(const Network& a, const Network& b) {
  ASSERT_EQ(a.node_count(), b.node_count());
  EXPECT_EQ(a.source(), b.source());
  EXPECT_EQ(a.sink(), b.sink());
  ASSERT_EQ(a.arc_count(), b.arc_count());
  for (std::size_t i = 0; i < a.arc_count(); ++i) {
    EXPECT_EQ(a.arc(i).id, b.arc(i).id);
    EXPECT_EQ(a.arc(i).tail, b.arc(i).tail);
    EXPECT_EQ(a.arc(i).head, b.arc(i).head);
    EXPECT_EQ(a.arc(i).column, b.arc(i).column);
  }
}

TEST(Nonnegativize, NonnegativeInputStaysNonnegative) {
  Network net = bipartite_matching_network(3);
  Network out = nonnegativize(net);
  EXPECT_TRUE(all_entries_nonnegative(out));
  expect_same_projections(net, out);
}

TEST(Nonnegativize, TwoArcChainUsesShortestDistancePotential) {
  // s -> v -> t with columns 2 and -1: pot(v) = 2 gives entries 0 and 1.
  Network net(3, 0, 2, 1, {Arc{0, 0, 1, {{0, 2}}}, Arc{1, 1, 2, {{0, -1}}}});
  Network out = nonnegativize(net);
  EXPECT_TRUE(out.arc(0).column.empty());
  EXPECT_EQ(out.arc(1).column.at(0), 1);
  EXPECT_EQ(project_path(out, Path{{0, 1}}), (Point{1}));
}

TEST(Nonnegativize, NegativeSingleArcYieldsFarkasWitness) {
  try {
    nonnegativize(single_arc(1, {{0, -1}}));
    FAIL() << "expected InfeasibleProjectionError";
  } catch (const InfeasibleProjectionError& e) {
    EXPECT_EQ(e.coordinate(), 0u);
    EXPECT_EQ(e.witness().arcs, std::vector<ArcId>{0});
    EXPECT_EQ(e.value(), -1);
  }
}

TEST(Nonnegativize, WitnessIsTheMostNegativePath) {
  // s -> v (1), v -> t (-3), s -> t (5); coordinate 1 is harmless.
  Network net(3, 0, 2, 2,
              {Arc{0, 0, 1, {{0, 1}}}, Arc{1, 1, 2, {{0, -3}}}, Arc{2, 0, 2, {{0, 5}, {1, 1}}}});
  try {
    nonnegativize(net);
    FAIL() << "expected InfeasibleProjectionError";
  } catch (const InfeasibleProjectionError& e) {
    EXPECT_EQ(e.witness().arcs, (std::vector<ArcId>{0, 1}));
    EXPECT_EQ(e.value(), -2);
    EXPECT_EQ(project_path(net, e.witness())[e.coordinate()], e.value());
  }
}

TEST(Nonnegativize, RequiresValidNetwork) {
  Network cyclic(3, 0, 2, 1, {Arc{0, 0, 1, {}}, Arc{1, 1, 0, {}}, Arc{2, 1, 2, {}}});
  EXPECT_THROW(nonnegativize(cyclic), PreconditionError);
}

TEST(Nonnegativize, RandomPotentialShiftsAreUndone) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    Network base = testing::random_dag(rng, 7, 2, 0.5, 0, 3);
    Network shifted = testing::shift_by_potentials(base, rng, 5);
    Network out = nonnegativize(shifted);
    EXPECT_TRUE(all_entries_nonnegative(out));
    EXPECT_TRUE(out.report().negative_column_arcs.empty());
    expect_same_projections(shifted, out);
  }
}

TEST(Nonnegativize, ArbitraryColumnsEitherFixOrCertify) {
  std::mt19937 rng(1234);
  int certified = 0, fixed = 0;
  for (int trial = 0; trial < 150; ++trial) {
    Network net = testing::random_dag(rng, 6, 2, 0.5, -2, 3);
    PointSet image = vertex_image(net);
    bool image_nonnegative = true;
    for (const Point& p : image) {
      for (const Rational& x : p) image_nonnegative = image_nonnegative && sgn(x) >= 0;
    }
    try {
      Network out = nonnegativize(net);
      ++fixed;
      EXPECT_TRUE(image_nonnegative);
      EXPECT_TRUE(all_entries_nonnegative(out));
      expect_same_projections(net, out);
    } catch (const InfeasibleProjectionError& e) {
      ++certified;
      EXPECT_FALSE(image_nonnegative);
      EXPECT_LT(sgn(project_path(net, e.witness())[e.coordinate()]), 0);
    }
  }
  EXPECT_GT(certified, 0);
  EXPECT_GT(fixed, 0);
}

TEST(ContractZeroCycles, AcyclicInputUnchanged) {
  Network net = bipartite_matching_network(3);
  expect_same_network(contract_zero_cycles(net), net);
}

TEST(ContractZeroCycles, ZeroCycleIsContracted) {
  // s=0 -> a=1 -> t=3, plus a <-> b=2 with zero columns.
  Network net(4, 0, 3, 2,
              {Arc{0, 0, 1, {{0, 1}}}, Arc{1, 1, 3, {{1, 1}}}, Arc{2, 1, 2, {}}, Arc{3, 2, 1, {}}});
  EXPECT_FALSE(net.report().acyclic);
  Network out = contract_zero_cycles(net);
  EXPECT_TRUE(out.report().ok);
  EXPECT_EQ(out.node_count(), 3u);
  EXPECT_EQ(out.arc_count(), 2u);
  EXPECT_EQ(out.arc(0).id, 0u);
  EXPECT_EQ(out.arc(1).id, 1u);
  EXPECT_EQ(vertex_image(out), PointSet(2, {Point{1, 1}}));
}

TEST(ContractZeroCycles, ContractionCanCreateParallelArcs) {
  // s -> a, a <-> b (zero), a -> t (x0), b -> t (x1).
  Network net(4, 0, 3, 2,
              {Arc{0, 0, 1, {}}, Arc{1, 1, 2, {}}, Arc{2, 2, 1, {}}, Arc{3, 1, 3, {{0, 1}}},
               Arc{4, 2, 3, {{1, 1}}}});
  Network out = contract_zero_cycles(net);
  EXPECT_EQ(out.node_count(), 3u);
  EXPECT_EQ(out.out_arcs(1).size(), 2u);
  EXPECT_EQ(vertex_image(out), PointSet(2, {Point{1, 0}, Point{0, 1}}));
}

TEST(ContractZeroCycles, NonzeroCycleColumnIsRejected) {
  Network net(4, 0, 3, 1,
              {Arc{0, 0, 1, {}}, Arc{1, 1, 3, {}}, Arc{2, 1, 2, {{0, 1}}}, Arc{3, 2, 1, {}}});
  try {
    contract_zero_cycles(net);
    FAIL() << "expected CycleColumnError";
  } catch (const CycleColumnError& e) {
    EXPECT_EQ(e.arc(), std::optional<ArcId>(2));
  }
}

TEST(ContractZeroCycles, SourceAndSinkInOneComponent) {
  Network zero(2, 0, 1, 1, {Arc{0, 0, 1, {}}, Arc{1, 1, 0, {}}});
  Network out = contract_zero_cycles(zero);
  EXPECT_EQ(out.node_count(), 2u);
  EXPECT_EQ(out.arc_count(), 1u);
  EXPECT_EQ(vertex_image(out), PointSet(1, {Point{0}}));

  Network nonzero(2, 0, 1, 1, {Arc{0, 0, 1, {{0, 1}}}, Arc{1, 1, 0, {}}});
  EXPECT_THROW(contract_zero_cycles(nonzero), CycleColumnError);
}

TEST(ContractZeroCycles, RandomZeroCyclesPreserveImage) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    Network base = testing::random_dag(rng, 6, 2, 0.5, 0, 2);
    // Hang a zero 2-cycle off a random internal node, or off the source.
    std::vector<Arc> arcs(base.arcs().begin(), base.arcs().end());
    const NodeId extra = base.node_count();
    const NodeId anchor = trial % 2 == 0 ? base.source() : base.arc(0).head;
    ArcId next = arcs.back().id + 1;
    arcs.push_back({next++, anchor, extra, {}});
    arcs.push_back({next++, extra, anchor, {}});
    Network cyclic(base.node_count() + 1, base.source(), base.sink(), 2, std::move(arcs));
    Network out = contract_zero_cycles(cyclic);
    EXPECT_TRUE(out.report().ok);
    EXPECT_EQ(vertex_image(out), vertex_image(base));
  }
}

TEST(RestrictToFace, ZeroObjectiveKeepsEverything) {
  Network net = held_karp_network(5);
  expect_same_network(restrict_to_face(net, std::vector<Rational>(net.dimension(), 0), 0), net);
}

TEST(RestrictToFace, FixingOneBipartiteEdge) {
  Network net = bipartite_matching_network(3);
  std::vector<Rational> c(9, 0);
  c[0] = 1;  // u1 w1
  Network face = restrict_to_face(net, c, 1);
  EXPECT_TRUE(face.report().ok);
  PointSet image = vertex_image(face);
  std::vector<Point> expected;
  for (const Point& p : oracle::perfect_matchings_bipartite(3)) {
    if (p[0] == 1) expected.push_back(p);
  }
  EXPECT_EQ(image.size(), 2u);
  EXPECT_EQ(image, PointSet(9, expected));
}

TEST(RestrictToFace, WrongValueReportsOptimum) {
  Network net = bipartite_matching_network(3);
  std::vector<Rational> c(9, 0);
  c[0] = 1;
  try {
    restrict_to_face(net, c, 2);
    FAIL() << "expected FaceMismatchError";
  } catch (const FaceMismatchError& e) {
    EXPECT_EQ(e.optimum(), 1);
  }
  try {
    restrict_to_face(net, c, 1, Sense::min);
    FAIL() << "expected FaceMismatchError";
  } catch (const FaceMismatchError& e) {
    EXPECT_EQ(e.optimum(), 0);
  }
}

TEST(RestrictToFace, MinimizingFaceOfSquares) {
  Network net = dfa_network(Dfa::all_accepting(), 3);
  std::vector<Rational> c{1, 1, 0};
  PointSet image = vertex_image(restrict_to_face(net, c, 0, Sense::min));
  EXPECT_EQ(image, PointSet(3, {Point{0, 0, 0}, Point{0, 0, 1}}));
}

TEST(RestrictToFace, RandomFacesMatchFilteredImage) {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    Network net = testing::random_dag(rng, 7, 3, 0.5, 0, 2);
    auto c = testing::random_objective(rng, 3, -2, 2);
    Sense sense = trial % 2 == 0 ? Sense::max : Sense::min;
    PointSet image = vertex_image(net);
    Rational value = testing::brute_optimum(image, c, sense);
    Network face = restrict_to_face(net, c, value, sense);
    EXPECT_TRUE(face.report().ok);
    std::vector<Point> expected;
    for (const Point& p : image) {
      if (dot(c, p) == value) expected.push_back(p);
    }
    EXPECT_EQ(vertex_image(face), PointSet(3, expected));
  }
}

}  // namespace
}  // namespace flowext

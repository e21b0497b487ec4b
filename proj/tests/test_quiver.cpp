#include <gtest/gtest.h>

#include "torsion/quiver.hpp"

using namespace torsion;

TEST(Quiver, LinearShapes) {
  const Quiver a1 = linear_An(1);
  EXPECT_EQ(a1.vertices(), VertexSet({1}));
  EXPECT_TRUE(a1.arrows().empty());
  EXPECT_EQ(linear_An(2).arrows(), (std::vector<Arrow>{{1, 2}}));
  EXPECT_EQ(linear_An(4).arrows(), (std::vector<Arrow>{{1, 2}, {2, 3}, {3, 4}}));
  EXPECT_THROW(linear_An(0), std::invalid_argument);
}

TEST(Quiver, CyclicShapes) {
  EXPECT_EQ(cyclic_An(1).arrows(), (std::vector<Arrow>{{1, 1}}));
  EXPECT_EQ(cyclic_An(2).arrows(), (std::vector<Arrow>{{1, 2}, {2, 1}}));
  const Quiver c3 = cyclic_An(3);
  for (Vertex v : c3.vertices()) {
    EXPECT_EQ(c3.successors(v).size(), 1u);
    EXPECT_EQ(c3.predecessors(v).size(), 1u);
  }
  EXPECT_FALSE(c3.acyclic());
  EXPECT_TRUE(c3.sinks().empty());
  EXPECT_TRUE(cyclic_An(1).sources().empty());
}

TEST(Quiver, Subquivers) {
  const Quiver two = subquiver(linear_An(3), {1, 3});
  EXPECT_EQ(two.shape(), QuiverShape::DisjointLinearA);
  EXPECT_TRUE(two.arrows().empty());
  EXPECT_EQ(two.linear_components().size(), 2u);

  const Quiver mid = subquiver(linear_An(4), {2, 3});
  EXPECT_EQ(mid.shape(), QuiverShape::LinearA);
  EXPECT_EQ(mid.arrows(), (std::vector<Arrow>{{2, 3}}));

  const Quiver one = subquiver(cyclic_An(2), {2});
  EXPECT_EQ(one.vertices(), VertexSet({2}));
  EXPECT_TRUE(one.arrows().empty());

  EXPECT_THROW(subquiver(linear_An(2), {5}), std::invalid_argument);
}

TEST(Quiver, ResidualOfCycleFollowsArrows) {
  const auto runs = subquiver(cyclic_An(4), {3, 4, 1}).linear_components();
  ASSERT_EQ(runs.size(), 1u);
  EXPECT_EQ(runs[0], (std::vector<Vertex>{3, 4, 1}));
}

TEST(Quiver, PathExists) {
  const Quiver a3 = linear_An(3);
  EXPECT_TRUE(path_exists(a3, {1}, {3}));
  EXPECT_FALSE(path_exists(a3, {3}, {1}));
  EXPECT_TRUE(path_exists(a3, {2}, {2}));
  EXPECT_TRUE(path_exists(cyclic_An(3), {3}, {1}));
}

TEST(Partition, ValidateExamples) {
  const Quiver a2 = linear_An(2);
  EXPECT_TRUE(validate_partition(a2, {{{1}, {2}}, kStrong1, true}));
  EXPECT_TRUE(validate_partition(a2, {{{}, {1, 2}}, kStrong1, true}));
  EXPECT_THROW(validate_partition(a2, {{{2}, {2}}, kStrong1, true}), std::invalid_argument);
  EXPECT_THROW(validate_partition(a2, {{{1}, {}}, kPlain1, false}), std::invalid_argument);
  // Vertex 1 is not a sink of A_2.
  EXPECT_FALSE(validate_partition(a2, {{{}, {1}, {2}}, kStrong1, true}));
  // The complete flag must match the union.
  EXPECT_FALSE(validate_partition(a2, {{{1}}, kStrong1, true}));
  EXPECT_TRUE(validate_partition(a2, {{{1}}, kStrong1, false}));
}

TEST(Partition, EnumerateSmall) {
  const auto a1 = enumerate_partitions(linear_An(1), kStrong1, true);
  ASSERT_EQ(a1.size(), 2u);
  EXPECT_EQ(a1[0].parts, (std::vector<VertexSet>{{}, {1}}));
  EXPECT_EQ(a1[1].parts, (std::vector<VertexSet>{{1}}));
  EXPECT_EQ(enumerate_partitions(linear_An(2), kStrong1, true).size(), 5u);
  EXPECT_EQ(enumerate_partitions(linear_An(3), kStrong1, true).size(), 14u);
}

TEST(Partition, CatalanCountsUpToSix) {
  const std::size_t catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(enumerate_partitions(linear_An(n), kStrong1, true).size(), catalan[n + 1]) << n;
  }
}

TEST(Partition, EnumeratedPartitionsValidateWithoutDuplicates) {
  const std::vector<Quiver> quivers = {linear_An(4), subquiver(linear_An(5), {1, 2, 4, 5}),
                                       cyclic_An(3)};
  for (const Quiver& q : quivers) {
    for (PartitionKind kind : {kStrong1, kStrong2, kPlain1, kPlain2}) {
      for (bool complete : {true, false}) {
        const auto all = enumerate_partitions(q, kind, complete);
        for (std::size_t i = 0; i < all.size(); ++i) {
          EXPECT_TRUE(validate_partition(q, all[i]));
          if (complete) EXPECT_TRUE(all[i].complete);
          if (i > 0) EXPECT_TRUE(partition_less(all[i - 1], all[i]));
        }
      }
    }
  }
}

TEST(Partition, StrongImpliesPlainOnAcyclicQuivers) {
  for (int n = 1; n <= 5; ++n) {
    const Quiver q = linear_An(n);
    for (PartitionKind kind : {kStrong1, kStrong2}) {
      for (auto s : enumerate_partitions(q, kind, false)) {
        s.kind.strong = false;
        EXPECT_TRUE(validate_partition(q, s)) << to_string(s);
      }
    }
  }
}

TEST(Partition, CompletePlainAndStrongAgreeOnLinearA) {
  for (int n = 1; n <= 5; ++n) {
    auto strong = enumerate_partitions(linear_An(n), kStrong1, true);
    auto plain = enumerate_partitions(linear_An(n), kPlain1, true);
    ASSERT_EQ(strong.size(), plain.size());
    for (std::size_t i = 0; i < strong.size(); ++i) EXPECT_EQ(strong[i].parts, plain[i].parts);
  }
}

TEST(Partition, KindStringsRoundTrip) {
  for (PartitionKind k : {kStrong1, kStrong2, kPlain1, kPlain2}) {
    EXPECT_EQ(partition_kind_from_string(to_string(k)), k);
  }
  EXPECT_THROW(partition_kind_from_string("weak3"), std::invalid_argument);
}

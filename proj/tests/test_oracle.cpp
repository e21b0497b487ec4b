#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "torsion/classify_tube.hpp"
#include "torsion/modcat_an.hpp"
#include "torsion/modcat_tube.hpp"
#include "torsion/oracle.hpp"
#include "torsion/torsion_core.hpp"

using namespace torsion;
using an::Interval;

namespace {

std::set<std::pair<an::IntervalSet, an::IntervalSet>> as_intervals(
    const Category& cat, const std::vector<TorsionPair>& tps) {
  std::set<std::pair<an::IntervalSet, an::IntervalSet>> out;
  for (const auto& tp : tps) {
    const auto t = an::to_intervals(cat, tp.torsion);
    const auto f = an::to_intervals(cat, tp.free);
    out.insert({{t.begin(), t.end()}, {f.begin(), f.end()}});
  }
  return out;
}

}  // namespace

TEST(HomMatrix, Examples) {
  EXPECT_EQ(oracle::hom_dim_matrix(linear_An(2), Interval{1, 2}, Interval{1, 1}), 1);
  EXPECT_EQ(oracle::hom_dim_matrix(linear_An(2), Interval{1, 1}, Interval{1, 2}), 0);
  EXPECT_EQ(oracle::hom_dim_matrix({1, 2, 2}, {2, 2, 2}), 1);
  for (const auto& x : tube::all_modules(2, 4)) EXPECT_GE(oracle::hom_dim_matrix(x, x), 1);
  EXPECT_EQ(oracle::hom_dim_matrix({1, 4, 1}, {1, 4, 1}), 4);
}

TEST(HomMatrix, AgreesWithIntervalRule) {
  for (int n = 1; n <= 5; ++n) {
    const Quiver q = linear_An(n);
    for (const auto& x : an::indecomposables(q)) {
      for (const auto& y : an::indecomposables(q)) {
        EXPECT_EQ(oracle::hom_dim_matrix(q, x, y), an::hom_dim(x, y))
            << an::to_string(x) << " " << an::to_string(y);
      }
    }
  }
}

TEST(HomMatrix, AgreesWithTubeRule) {
  for (int rank = 1; rank <= 3; ++rank) {
    for (const auto& x : tube::all_modules(rank, 6)) {
      for (const auto& y : tube::all_modules(rank, 6)) {
        EXPECT_EQ(oracle::hom_dim_matrix(x, y), tube::hom_dim_tube(x, y))
            << tube::to_string(x) << " " << tube::to_string(y);
      }
    }
  }
}

TEST(EulerForm, Examples) {
  const Quiver a2 = linear_An(2);
  EXPECT_EQ(oracle::euler_form({1, 0}, {0, 1}, a2), -1);
  EXPECT_EQ(oracle::euler_form({1, 1}, {0, 0}, a2), 0);
  EXPECT_EQ(oracle::euler_form({1, 1}, {1, 1}, a2), 1);
  EXPECT_THROW(oracle::euler_form({1}, {1}, cyclic_An(1)), std::invalid_argument);
  EXPECT_EQ(oracle::ringel_form({1}, {1}, cyclic_An(1)), 0);
}

TEST(BruteForce, SmallCases) {
  const Category a1 = an::category(1);
  EXPECT_EQ(as_intervals(a1, oracle::enumerate_torsion_pairs_bruteforce(1)),
            (std::set<std::pair<an::IntervalSet, an::IntervalSet>>{{{}, {{1, 1}}}, {{{1, 1}}, {}}}));

  const Category a2 = an::category(2);
  const an::IntervalSet all{{1, 1}, {1, 2}, {2, 2}};
  const std::set<std::pair<an::IntervalSet, an::IntervalSet>> expected{
      {{}, all},
      {all, {}},
      {{{1, 1}}, {{1, 2}, {2, 2}}},
      {{{1, 1}, {1, 2}}, {{2, 2}}},
      {{{2, 2}}, {{1, 1}}},
  };
  EXPECT_EQ(as_intervals(a2, oracle::enumerate_torsion_pairs_bruteforce(2)), expected);
  EXPECT_EQ(oracle::enumerate_torsion_pairs_bruteforce(3).size(), 14u);
  EXPECT_THROW(oracle::enumerate_torsion_pairs_bruteforce(7), std::length_error);
}

TEST(BruteForce, CatalanCounts) {
  const std::size_t expected[] = {2, 5, 14, 42, 132};
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(oracle::enumerate_torsion_pairs_bruteforce(n).size(), expected[n - 1]);
  }
}

TEST(BruteForce, PerpendicularClasses) {
  for (int n = 1; n <= 4; ++n) {
    const Category cat = an::category(n);
    for (const auto& tp : oracle::enumerate_torsion_pairs_bruteforce(n)) {
      EXPECT_EQ(tp.free, perp_right(cat, tp.torsion, cat.all()));
      EXPECT_EQ(tp.torsion, perp_left(cat, tp.free, cat.all()));
      EXPECT_TRUE(is_torsion_pair(cat, cat.all(), tp));
    }
  }
}

TEST(BruteForce, SerialMatchesParallel) {
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(oracle::enumerate_torsion_pairs_bruteforce(n, 6, oracle::Execution::Serial),
              oracle::enumerate_torsion_pairs_bruteforce(n, 6, oracle::Execution::Parallel));
  }
  EXPECT_EQ(oracle::bruteforce_tube_truncated(2, 4, oracle::Execution::Serial),
            oracle::bruteforce_tube_truncated(2, 4, oracle::Execution::Parallel));
}

TEST(BruteForce, TorsionPairsOnASubcategory) {
  const Category cat = an::category(3);
  auto on = oracle::torsion_pairs_on(cat, cat.all());
  auto bf = oracle::enumerate_torsion_pairs_bruteforce(3);
  std::sort(on.begin(), on.end());
  std::sort(bf.begin(), bf.end());
  EXPECT_EQ(on, bf);
  const ObjectSet s1 = an::to_set(cat, std::vector<Interval>{{1, 1}});
  EXPECT_EQ(oracle::torsion_pairs_on(cat, s1).size(), 2u);
  EXPECT_EQ(oracle::torsion_pairs_on(cat, ObjectSet{}).size(), 1u);
}

TEST(QuotientCandidates, CountIsProductOfPrefixes) {
  const Category cat = an::category(3);
  const auto c = oracle::quotient_closed_candidates(cat);
  EXPECT_EQ(c.count(), 4u * 3u * 2u);
  std::set<ObjectSet> seen;
  for (std::uint64_t i = 0; i < c.count(); ++i) {
    EXPECT_TRUE(is_quotient_closed(cat, c.at(i)));
    seen.insert(c.at(i));
  }
  EXPECT_EQ(seen.size(), c.count());
}

TEST(TubeTruncated, Examples) {
  EXPECT_TRUE(oracle::check_tube_tp_truncated([](const tube::TubeModule&) { return true; },
                                              [](const tube::TubeModule&) { return false; }, 1, 4));
  const auto kind1 = tube::partition_to_tube_tp(2, PartPartition{{{1}, {2}}, kStrong1, true});
  EXPECT_TRUE(oracle::check_tube_tp_truncated(kind1.torsion, kind1.free, 4));

  const tube::TubeModule s{1, 1, 1};
  const Check c = oracle::check_tube_tp_truncated(
      [&](const tube::TubeModule& x) { return x == s; },
      [&](const tube::TubeModule& x) { return x != s; }, 1, 4);
  EXPECT_FALSE(c);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_EQ(tube::module(tube::category(1, 4), *c.witness), (tube::TubeModule{1, 2, 1}));
  EXPECT_THROW(oracle::check_tube_tp_truncated(kind1.torsion, kind1.free, 1), std::invalid_argument);
}

TEST(TubeTruncated, StableClassesMatchClassification) {
  for (int rank = 1; rank <= 3; ++rank) {
    const int cap = 2 * rank + 2;
    const auto stable = oracle::stable_tube_torsion_classes(rank, {cap - 2, cap - 1, cap});
    const Category cat = tube::category(rank, cap);
    std::set<ObjectSet> classified{ObjectSet{}, cat.all()};
    for (const auto& p : tube::enumerate_tube_tps(rank)) {
      classified.insert(tube::to_set(cat, p.torsion));
    }
    EXPECT_EQ(std::set<ObjectSet>(stable.begin(), stable.end()), classified) << "rank " << rank;
  }
}

#include <gtest/gtest.h>

#include <algorithm>

#include "torsion/modcat_an.hpp"
#include "torsion/oracle.hpp"
#include "torsion/torsion_core.hpp"

using namespace torsion;
using an::Interval;

TEST(Intervals, Indecomposables) {
  EXPECT_EQ(an::indecomposables(linear_An(1)), (std::vector<Interval>{{1, 1}}));
  EXPECT_EQ(an::indecomposables(linear_An(2)), (std::vector<Interval>{{1, 1}, {1, 2}, {2, 2}}));
  EXPECT_EQ(an::indecomposables(linear_An(3)).size(), 6u);
  EXPECT_EQ(an::indecomposables(subquiver(linear_An(3), {1, 3})),
            (std::vector<Interval>{{1, 1}, {3, 3}}));
}

TEST(Intervals, HomExamples) {
  EXPECT_EQ(an::hom_dim({1, 2}, {1, 1}), 1);
  EXPECT_EQ(an::hom_dim({1, 1}, {1, 2}), 0);
  for (const auto& x : an::indecomposables(linear_An(4))) EXPECT_EQ(an::hom_dim(x, x), 1);
  EXPECT_THROW(an::hom_dim({2, 1}, {1, 1}), std::invalid_argument);
}

TEST(Intervals, ExtExamples) {
  EXPECT_EQ(an::ext_dim({1, 1}, {2, 2}), 1);
  EXPECT_EQ(an::ext_dim({1, 2}, {1, 1}), 0);
  EXPECT_EQ(an::ext_dim({1, 2}, {2, 3}), 1);
  const int n = 4;
  for (int a = 1; a <= n; ++a) {
    for (const auto& y : an::indecomposables(linear_An(n))) EXPECT_EQ(an::ext_dim({a, n}, y), 0);
  }
}

TEST(Intervals, HomMinusExtIsEulerForm) {
  for (int n = 1; n <= 5; ++n) {
    const Quiver q = linear_An(n);
    for (const auto& x : an::indecomposables(q)) {
      for (const auto& y : an::indecomposables(q)) {
        EXPECT_EQ(an::hom_dim(x, y) - an::ext_dim(x, y),
                  oracle::euler_form(an::dimension_vector(x, q), an::dimension_vector(y, q), q));
      }
    }
  }
}

TEST(Intervals, QuotientsAndSubmodules) {
  EXPECT_EQ(an::quotients({1, 2}), (std::vector<Interval>{{1, 1}, {1, 2}}));
  EXPECT_EQ(an::submodules({1, 2}), (std::vector<Interval>{{1, 2}, {2, 2}}));
  EXPECT_EQ(an::quotients({1, 1}), (std::vector<Interval>{{1, 1}}));
}

TEST(Intervals, ProjectivesAndInjectives) {
  EXPECT_EQ(an::projectives(linear_An(2)), (std::vector<Interval>{{1, 2}, {2, 2}}));
  EXPECT_EQ(an::injectives(linear_An(2)), (std::vector<Interval>{{1, 1}, {1, 2}}));
  EXPECT_EQ(an::projectives(linear_An(1)), an::injectives(linear_An(1)));
  EXPECT_EQ(an::projectives(subquiver(linear_An(3), {1, 2})),
            (std::vector<Interval>{{1, 2}, {2, 2}}));
  EXPECT_EQ(an::injectives(subquiver(linear_An(5), {1, 2, 4, 5})),
            (std::vector<Interval>{{1, 1}, {1, 2}, {4, 4}, {4, 5}}));
}

TEST(Intervals, Translation) {
  const Quiver a2 = linear_An(2);
  EXPECT_EQ(an::tau({1, 1}, a2), (Interval{2, 2}));
  EXPECT_FALSE(an::tau({1, 2}, a2).has_value());
  EXPECT_EQ(an::tau_inv(*an::tau({1, 1}, a2), a2), (Interval{1, 1}));
  EXPECT_FALSE(an::tau_inv({1, 1}, a2).has_value());
  const Quiver a4 = linear_An(4);
  for (const auto& x : an::indecomposables(a4)) {
    if (auto t = an::tau(x, a4)) EXPECT_EQ(an::tau_inv(*t, a4), x);
  }
}

TEST(Intervals, Closures) {
  EXPECT_EQ(an::gen_closure({{1, 2}}), (an::IntervalSet{{1, 1}, {1, 2}}));
  EXPECT_EQ(an::extension_closure({{1, 1}, {2, 2}}), (an::IntervalSet{{1, 1}, {1, 2}, {2, 2}}));
  EXPECT_TRUE(an::cogen_closure({}).empty());
  EXPECT_EQ(an::extension_closure({{1, 1}, {2, 2}, {3, 3}}).size(), 6u);
}

TEST(Intervals, RestrictSupport) {
  EXPECT_EQ(an::restrict_support({{1, 1}, {1, 2}, {2, 2}}, {2}), (an::IntervalSet{{2, 2}}));
  const auto all3 = an::indecomposables(linear_An(3));
  EXPECT_EQ(an::restrict_support(an::IntervalSet(all3.begin(), all3.end()), {1, 3}),
            (an::IntervalSet{{1, 1}, {3, 3}}));
  EXPECT_TRUE(an::restrict_support({}, {1}).empty());
}

TEST(Model, ClosuresAgreeWithIntervalRules) {
  const Category cat = an::category(4);
  for (std::uint64_t bits = 0; bits < (1u << 10); bits += 7) {
    const ObjectSet s = ObjectSet::from_bits(bits);
    const auto xs = an::to_intervals(cat, s);
    const an::IntervalSet is(xs.begin(), xs.end());
    EXPECT_EQ(an::to_set(cat, an::extension_closure(is)), torsion::extension_closure(cat, s));
  }
}

TEST(Model, SupportHelpers) {
  const Category cat = an::category(4);
  EXPECT_EQ(an::interval(cat, an::projective_at(cat, {1, 2, 4}, 1)), (Interval{1, 2}));
  EXPECT_EQ(an::interval(cat, an::injective_at(cat, {1, 2, 4}, 4)), (Interval{4, 4}));
  EXPECT_EQ(an::support_set(cat, {2, 3}).size(), 3u);
  EXPECT_THROW(an::projective_at(cat, {1, 2}, 3), std::invalid_argument);
}

TEST(Model, UniserialStructure) {
  const Category cat = an::category(3);
  const ObjectId x = an::id_of(cat, {1, 3});
  EXPECT_EQ(cat.top(x), 1);
  EXPECT_EQ(an::interval(cat, *cat.submodule(x, 1)), (Interval{3, 3}));
  EXPECT_EQ(an::interval(cat, *cat.quotient(x, 1)), (Interval{1, 1}));
  EXPECT_EQ(an::interval(cat, *cat.subquotient(x, 1, 2)), (Interval{2, 2}));
  EXPECT_FALSE(cat.subquotient(x, 2, 2).has_value());
  EXPECT_EQ(cat.glue(an::id_of(cat, {1, 1}), an::id_of(cat, {2, 3})), x);
  EXPECT_FALSE(cat.glue(an::id_of(cat, {2, 3}), an::id_of(cat, {1, 1})).has_value());
}

TEST(Intervals, ProjectivesAreExtProjective) {
  for (int n = 1; n <= 5; ++n) {
    const Quiver q = linear_An(n);
    const auto all = an::indecomposables(q);
    const auto proj = an::projectives(q);
    const auto inj = an::injectives(q);
    for (const auto& x : all) {
      bool no_ext_out = true, no_ext_in = true;
      for (const auto& y : all) {
        no_ext_out = no_ext_out && an::ext_dim(x, y) == 0;
        no_ext_in = no_ext_in && an::ext_dim(y, x) == 0;
      }
      EXPECT_EQ(no_ext_out, std::find(proj.begin(), proj.end(), x) != proj.end()) << an::to_string(x);
      EXPECT_EQ(no_ext_in, std::find(inj.begin(), inj.end(), x) != inj.end()) << an::to_string(x);
    }
  }
}

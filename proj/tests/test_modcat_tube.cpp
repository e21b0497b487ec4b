#include <gtest/gtest.h>

#include <set>

#include "torsion/modcat_tube.hpp"
#include "torsion/oracle.hpp"
#include "torsion/torsion_core.hpp"

using namespace torsion;
using tube::TubeModule;

TEST(Tube, HomExamples) {
  EXPECT_EQ(tube::hom_dim_tube({1, 1, 1}, {1, 1, 1}), 1);
  EXPECT_EQ(tube::hom_dim_tube({1, 2, 2}, {2, 2, 2}), 1);
  EXPECT_EQ(tube::hom_dim_tube({1, 1, 2}, {2, 1, 2}), 0);
  EXPECT_THROW(tube::hom_dim_tube({1, 1, 2}, {1, 1, 3}), std::invalid_argument);
}

TEST(Tube, ExtAndTranslation) {
  EXPECT_EQ(tube::ext_dim_tube({1, 1, 1}, {1, 1, 1}), 1);
  EXPECT_EQ(tube::tau_tube({1, 3, 2}), (TubeModule{2, 3, 2}));
  EXPECT_EQ(tube::ext_dim_tube({1, 1, 2}, {1, 1, 2}), 0);
  EXPECT_EQ(tube::ext_dim_tube({1, 1, 2}, {2, 1, 2}), 1);
  for (int rank = 1; rank <= 3; ++rank) {
    for (const auto& x : tube::all_modules(rank, 4)) {
      EXPECT_EQ(tube::tau_inv_tube(tube::tau_tube(x)), x);
    }
  }
}

TEST(Tube, TopWrapsAgainstTheArrows) {
  EXPECT_EQ(tube::top({1, 1, 3}), 1);
  EXPECT_EQ(tube::top({1, 2, 3}), 3);
  EXPECT_EQ(tube::top({2, 2, 2}), 1);
  EXPECT_EQ(tube::top({3, 5, 3}), 2);
}

TEST(Tube, HomMinusExtIsTheCyclicForm) {
  for (int rank = 1; rank <= 3; ++rank) {
    const Quiver q = cyclic_An(rank);
    for (const auto& x : tube::all_modules(rank, 6)) {
      for (const auto& y : tube::all_modules(rank, 6)) {
        EXPECT_EQ(tube::hom_dim_tube(x, y) - tube::ext_dim_tube(x, y),
                  oracle::ringel_form(tube::dimension_vector(x), tube::dimension_vector(y), q));
      }
    }
  }
}

TEST(Tube, RaysAndCorays) {
  const auto none = tube::ray({}, 2);
  for (const auto& x : tube::all_modules(2, 5)) EXPECT_FALSE(none(x));
  const auto c = tube::coray({1}, 2);
  for (const auto& x : tube::all_modules(2, 5)) {
    EXPECT_EQ(c(x), tube::top(x) == 1);
  }
  const auto everything = tube::ray({1}, 1);
  for (const auto& x : tube::all_modules(1, 5)) EXPECT_TRUE(everything(x));
}

TEST(Tube, LRSets) {
  using K = tube::TubeSubcatDescriptor::Kind;
  const tube::TubeSubcatDescriptor coray{K::CorayPlusFinite, 2, {1}, {}};
  auto [l, r] = tube::L_R_sets(coray);
  EXPECT_EQ(l, VertexSet({1}));
  // Each socle carries infinitely many modules with top 1.
  EXPECT_EQ(r, VertexSet({1, 2}));

  const tube::TubeSubcatDescriptor finite{K::Finite, 2, {}, {{1, 1, 2}, {2, 2, 2}}};
  EXPECT_EQ(tube::L_R_sets(finite), (std::pair<VertexSet, VertexSet>{{}, {}}));

  const tube::TubeSubcatDescriptor rays{K::RayPlusFinite, 2, {1, 2}, {}};
  EXPECT_EQ(tube::L_R_sets(rays).second, VertexSet({1, 2}));

  const tube::TubeSubcatDescriptor ray3{K::RayPlusFinite, 3, {2}, {{3, 1, 3}}};
  EXPECT_EQ(tube::L_R_sets(ray3), (std::pair<VertexSet, VertexSet>{{1, 2, 3}, {2}}));
}

TEST(Tube, Truncate) {
  EXPECT_EQ(tube::truncate(tube::ray({1}, 1), 1, 3),
            (std::vector<TubeModule>{{1, 1, 1}, {1, 2, 1}, {1, 3, 1}}));
  EXPECT_EQ(tube::truncate(tube::coray({1}, 2), 2, 2),
            (std::vector<TubeModule>{{1, 1, 2}, {2, 2, 2}}));
  EXPECT_THROW(tube::truncate(tube::coray({1}, 2), 2, 0), std::invalid_argument);
}

TEST(Tube, ModelMatchesClosedForms) {
  const Category cat = tube::category(3, 5);
  EXPECT_EQ(cat.size(), 15u);
  for (ObjectId x = 0; x < cat.size(); ++x) {
    EXPECT_EQ(cat.top(x), tube::top(tube::module(cat, x)));
    for (ObjectId y = 0; y < cat.size(); ++y) {
      EXPECT_EQ(cat.hom(x, y), tube::hom_dim_tube(tube::module(cat, x), tube::module(cat, y)));
    }
  }
  // Gluing S_1 under S_3 on rank 3: arrows 3 -> 1, so the extension has top 3, socle 1.
  const auto e = cat.glue(tube::id_of(cat, {3, 1, 3}), tube::id_of(cat, {1, 1, 3}));
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(tube::module(cat, *e), (TubeModule{1, 2, 3}));
  EXPECT_THROW(tube::category(9, 8), std::length_error);
}

TEST(Tube, TranslationPermutesEachLength) {
  for (int rank = 1; rank <= 4; ++rank) {
    const auto mods = tube::all_modules(rank, 6);
    std::set<TubeModule> image;
    for (const auto& x : mods) {
      const TubeModule t = tube::tau_tube(x);
      EXPECT_EQ(t.length, x.length);
      image.insert(t);
    }
    EXPECT_EQ(image, std::set<TubeModule>(mods.begin(), mods.end()));
  }
}

TEST(Tube, RaysAndCoraysAreExtensionClosed) {
  for (int rank = 1; rank <= 3; ++rank) {
    const Category cat = tube::category(rank, 6);
    for (std::uint32_t mask = 1; mask < (1u << rank); ++mask) {
      VertexSet delta;
      for (int v = 1; v <= rank; ++v) {
        if (mask >> (v - 1) & 1u) delta.insert(v);
      }
      EXPECT_TRUE(is_extension_closed(cat, tube::to_set(cat, tube::ray(delta, rank))));
      EXPECT_TRUE(is_extension_closed(cat, tube::to_set(cat, tube::coray(delta, rank))));
      EXPECT_TRUE(is_submodule_closed(cat, tube::to_set(cat, tube::ray(delta, rank))));
      EXPECT_TRUE(is_quotient_closed(cat, tube::to_set(cat, tube::coray(delta, rank))));
    }
  }
}

TEST(Tube, SubmodulesFormAChain) {
  const Category cat = tube::category(3, 6);
  for (ObjectId x = 0; x < cat.size(); ++x) {
    std::size_t subs = 0;
    for (ObjectId y = 0; y < cat.size(); ++y) {
      if (cat.length(y) <= cat.length(x) && cat.submodule(x, cat.length(y)) == y) ++subs;
    }
    EXPECT_EQ(subs, static_cast<std::size_t>(cat.length(x)));
  }
}

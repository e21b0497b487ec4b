#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "torsion/category.hpp"

namespace torsion {

struct TorsionPair {
  ObjectSet torsion;
  ObjectSet free;
  friend bool operator==(const TorsionPair&, const TorsionPair&) = default;
  friend bool operator<(const TorsionPair& a, const TorsionPair& b) {
    return std::pair(a.torsion, a.free) < std::pair(b.torsion, b.free);
  }
};

// An n-torsion pair (C_1, ..., C_{n+1}); parts may be empty.
struct NTorsionPair {
  std::vector<ObjectSet> parts;
  std::size_t n() const { return parts.empty() ? 0 : parts.size() - 1; }
  friend bool operator==(const NTorsionPair&, const NTorsionPair&) = default;
};

// Torsion pairs (T_1,F_1), ..., (T_n,F_n) with T_1 <= ... <= T_n.
struct TorsionPairSeries {
  std::vector<TorsionPair> pairs;
  friend bool operator==(const TorsionPairSeries&, const TorsionPairSeries&) = default;
};

// Chain 0 = X_0 <= X_1 <= ... <= X_k = X with X_i / X_{i-1} in the i-th part.
struct Filtration {
  std::vector<int> lengths;                    // lengths of X_0 .. X_k
  std::vector<std::optional<ObjectId>> chain;  // X_0 .. X_k, nullopt for zero
  std::vector<std::optional<ObjectId>> factors;  // factor i lies in part i
};

ObjectSet perp_right(const Category& cat, ObjectSet d, ObjectSet ambient);
ObjectSet perp_left(const Category& cat, ObjectSet d, ObjectSet ambient);
ObjectSet gen_closure(const Category& cat, ObjectSet s);
ObjectSet cogen_closure(const Category& cat, ObjectSet s);
ObjectSet extension_closure(const Category& cat, ObjectSet s);
ObjectSet extension_closure(const Category& cat, const std::vector<ObjectSet>& parts);
bool is_extension_closed(const Category& cat, ObjectSet s);
bool is_quotient_closed(const Category& cat, ObjectSet s);
bool is_submodule_closed(const Category& cat, ObjectSet s);

Check is_torsion_pair(const Category& cat, ObjectSet ambient, const TorsionPair& tp);
std::optional<ObjectId> torsion_submodule(const Category& cat, ObjectSet torsion, ObjectId x);

Check is_series(const Category& cat, ObjectSet ambient, const TorsionPairSeries& s);
NTorsionPair series_to_ntp(const Category& cat, ObjectSet ambient, const TorsionPairSeries& s);
TorsionPairSeries ntp_to_series(const Category& cat, ObjectSet ambient, const NTorsionPair& t);

std::optional<Filtration> find_filtration(const Category& cat, const std::vector<ObjectSet>& parts,
                                          ObjectId x);
// Throws std::invalid_argument when x has no such filtration.
Filtration filtration(const Category& cat, const NTorsionPair& t, ObjectId x);

// Hom-orthogonality in one direction plus filtrations.
Check is_ntp(const Category& cat, ObjectSet ambient, const NTorsionPair& t);
// The defining conditions taken literally: every part is the intersection
// of perpendicular categories and every cut is a torsion pair.
Check is_ntp_by_definition(const Category& cat, ObjectSet ambient, const NTorsionPair& t);

// (D^1, D^2): torsion submodules and torsion-free quotients of members of d.
std::pair<ObjectSet, ObjectSet> decompose_along(const Category& cat, const TorsionPair& tp,
                                                ObjectSet d);

// Indices are 0-based. refine replaces part i by the parts of sub, which
// must be an n-torsion pair on that part.
NTorsionPair refine(const Category& cat, ObjectSet ambient, const NTorsionPair& t, std::size_t i,
                    const NTorsionPair& sub);
// Replaces parts i..i+k by their extension closure.
NTorsionPair merge_parts(const Category& cat, ObjectSet ambient, const NTorsionPair& t,
                         std::size_t i, std::size_t k);
Check is_defect_ntp(const Category& cat, ObjectSet ambient, const std::vector<ObjectSet>& parts);
NTorsionPair complete_defect(const Category& cat, ObjectSet ambient,
                             const std::vector<ObjectSet>& parts);

// Torsion pairs on F_1 cap T_2 versus torsion pairs between two nested ones.
TorsionPair interval_bijection_F(const Category& cat, ObjectSet ambient,
                                 const TorsionPairSeries& outer, const TorsionPair& inner);
TorsionPair interval_bijection_G(const Category& cat, ObjectSet ambient,
                                 const TorsionPairSeries& outer, const TorsionPair& middle);

ObjectSet ext_projectives_in(const Category& cat, ObjectSet c, ObjectSet ambient);
ObjectSet ext_injectives_in(const Category& cat, ObjectSet c, ObjectSet ambient);

// Sends each given projective (resp. injective) to the last (resp. first)
// nonzero factor of its filtration and compares with the Ext-projectives of
// C_i inside <C_i, ..., C_{n+1}> (resp. Ext-injectives of C_i inside
// <C_1, ..., C_i>).
struct Correspondence {
  struct Entry {
    ObjectId source;
    std::size_t part;
    ObjectId target;
  };
  std::vector<Entry> entries;
  std::vector<std::pair<std::size_t, ObjectId>> expected;
  bool bijective = false;
};
Correspondence projective_correspondence(const Category& cat, ObjectSet ambient,
                                         const NTorsionPair& t, ObjectSet projectives);
Correspondence injective_correspondence(const Category& cat, ObjectSet ambient,
                                        const NTorsionPair& t, ObjectSet injectives);

}  // namespace torsion

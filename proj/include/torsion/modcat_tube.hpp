#pragma once

#include <compare>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "torsion/category.hpp"
#include "torsion/quiver.hpp"

namespace torsion::tube {

// Uniserial module of the cyclic quiver 1 -> 2 -> ... -> n -> 1 with socle
// S_socle; its top is S_{socle - length + 1}, indices taken mod n in 1..n.
struct TubeModule {
  Vertex socle = 1;
  int length = 1;
  int rank = 1;
  friend auto operator<=>(const TubeModule&, const TubeModule&) = default;
};

Vertex wrap(int v, int rank);
Vertex top(const TubeModule& x);
std::string to_string(const TubeModule& x);
void validate(const TubeModule& x);

int hom_dim_tube(const TubeModule& x, const TubeModule& y);
TubeModule tau_tube(const TubeModule& x);
TubeModule tau_inv_tube(const TubeModule& x);
int ext_dim_tube(const TubeModule& x, const TubeModule& y);
std::vector<int> dimension_vector(const TubeModule& x);

using Predicate = std::function<bool(const TubeModule&)>;
// Ray(D): modules with socle in D. Coray(D): modules with top in D.
Predicate ray(const VertexSet& delta, int rank);
Predicate coray(const VertexSet& delta, int rank);

struct TubeSubcatDescriptor {
  enum class Kind { Finite, CorayPlusFinite, RayPlusFinite };
  Kind kind = Kind::Finite;
  int rank = 1;
  VertexSet delta;
  std::vector<TubeModule> finite;  // sorted, no duplicates

  bool contains(const TubeModule& x) const;
  int max_finite_length() const;
  friend bool operator==(const TubeSubcatDescriptor&, const TubeSubcatDescriptor&) = default;
};

std::string to_string(TubeSubcatDescriptor::Kind kind);
TubeSubcatDescriptor::Kind descriptor_kind_from_string(const std::string& s);

// L: tops carrying infinitely many members; R: socles carrying infinitely
// many members.
std::pair<VertexSet, VertexSet> L_R_sets(const TubeSubcatDescriptor& d);

std::vector<TubeModule> all_modules(int rank, int cap);
std::vector<TubeModule> truncate(const Predicate& p, int rank, int cap);
std::vector<TubeModule> truncate(const TubeSubcatDescriptor& d, int cap);

// Modules of length <= cap as a finite model.
Category category(int rank, int cap);
TubeModule module(const Category& cat, ObjectId id);
ObjectId id_of(const Category& cat, const TubeModule& x);
ObjectSet to_set(const Category& cat, const Predicate& p);
ObjectSet to_set(const Category& cat, const TubeSubcatDescriptor& d);

}  // namespace torsion::tube

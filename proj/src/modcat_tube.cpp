#include "torsion/modcat_tube.hpp"

#include <algorithm>
#include <stdexcept>

namespace torsion::tube {

Vertex wrap(int v, int rank) {
  if (rank < 1) throw std::invalid_argument("tube rank must be >= 1");
  return ((v - 1) % rank + rank) % rank + 1;
}

void validate(const TubeModule& x) {
  if (x.rank < 1) throw std::invalid_argument("tube rank must be >= 1");
  if (x.socle < 1 || x.socle > x.rank) throw std::invalid_argument("socle outside 1..rank");
  if (x.length < 1) throw std::invalid_argument("tube module length must be >= 1");
}

Vertex top(const TubeModule& x) { return wrap(x.socle - x.length + 1, x.rank); }

std::string to_string(const TubeModule& x) {
  return "U(" + std::to_string(x.socle) + "," + std::to_string(x.length) + ")";
}

int hom_dim_tube(const TubeModule& x, const TubeModule& y) {
  validate(x);
  validate(y);
  if (x.rank != y.rank) throw std::invalid_argument("tube rank mismatch");
  // Images are quotients of x of length l which are also submodules of y.
  int count = 0;
  for (int l = 1; l <= std::min(x.length, y.length); ++l) {
    if (wrap(x.socle - x.length + l, x.rank) == y.socle) ++count;
  }
  return count;
}

TubeModule tau_tube(const TubeModule& x) {
  validate(x);
  return {wrap(x.socle + 1, x.rank), x.length, x.rank};
}

TubeModule tau_inv_tube(const TubeModule& x) {
  validate(x);
  return {wrap(x.socle - 1, x.rank), x.length, x.rank};
}

int ext_dim_tube(const TubeModule& x, const TubeModule& y) { return hom_dim_tube(y, tau_tube(x)); }

std::vector<int> dimension_vector(const TubeModule& x) {
  validate(x);
  std::vector<int> d(x.rank, 0);
  for (int k = 0; k < x.length; ++k) ++d[wrap(x.socle - k, x.rank) - 1];
  return d;
}

Predicate ray(const VertexSet& delta, int rank) {
  return [delta, rank](const TubeModule& x) { return x.rank == rank && delta.count(x.socle) != 0; };
}

Predicate coray(const VertexSet& delta, int rank) {
  return [delta, rank](const TubeModule& x) { return x.rank == rank && delta.count(top(x)) != 0; };
}

bool TubeSubcatDescriptor::contains(const TubeModule& x) const {
  if (x.rank != rank) throw std::invalid_argument("tube rank mismatch");
  switch (kind) {
    case Kind::Finite: break;
    case Kind::CorayPlusFinite:
      if (delta.count(top(x))) return true;
      break;
    case Kind::RayPlusFinite:
      if (delta.count(x.socle)) return true;
      break;
  }
  return std::binary_search(finite.begin(), finite.end(), x);
}

int TubeSubcatDescriptor::max_finite_length() const {
  int m = 0;
  for (const auto& x : finite) m = std::max(m, x.length);
  return m;
}

std::string to_string(TubeSubcatDescriptor::Kind kind) {
  switch (kind) {
    case TubeSubcatDescriptor::Kind::Finite: return "finite";
    case TubeSubcatDescriptor::Kind::CorayPlusFinite: return "coray+finite";
    case TubeSubcatDescriptor::Kind::RayPlusFinite: return "ray+finite";
  }
  return "?";
}

TubeSubcatDescriptor::Kind descriptor_kind_from_string(const std::string& s) {
  if (s == "finite") return TubeSubcatDescriptor::Kind::Finite;
  if (s == "coray+finite") return TubeSubcatDescriptor::Kind::CorayPlusFinite;
  if (s == "ray+finite") return TubeSubcatDescriptor::Kind::RayPlusFinite;
  throw std::invalid_argument("unknown descriptor kind: " + s);
}

std::pair<VertexSet, VertexSet> L_R_sets(const TubeSubcatDescriptor& d) {
  // Past the longest finite member membership is periodic, so one window of
  // rank consecutive lengths decides infinitude.
  const int from = d.max_finite_length() + 1;
  VertexSet left, right;
  for (Vertex v = 1; v <= d.rank; ++v) {
    for (int len = from; len < from + d.rank; ++len) {
      if (d.contains({wrap(v + len - 1, d.rank), len, d.rank})) left.insert(v);
      if (d.contains({v, len, d.rank})) right.insert(v);
    }
  }
  return {left, right};
}

std::vector<TubeModule> all_modules(int rank, int cap) {
  if (rank < 1) throw std::invalid_argument("tube rank must be >= 1");
  if (cap < 1) throw std::invalid_argument("length cap must be >= 1");
  std::vector<TubeModule> out;
  for (int len = 1; len <= cap; ++len) {
    for (Vertex s = 1; s <= rank; ++s) out.push_back({s, len, rank});
  }
  return out;
}

std::vector<TubeModule> truncate(const Predicate& p, int rank, int cap) {
  std::vector<TubeModule> out;
  for (const auto& x : all_modules(rank, cap)) {
    if (p(x)) out.push_back(x);
  }
  return out;
}

std::vector<TubeModule> truncate(const TubeSubcatDescriptor& d, int cap) {
  return truncate([&d](const TubeModule& x) { return d.contains(x); }, d.rank, cap);
}

Category category(int rank, int cap) {
  std::vector<Uniserial> objects;
  for (const auto& x : all_modules(rank, cap)) objects.push_back({x.socle, x.length});
  if (objects.size() > ObjectSet::kCapacity) {
    throw std::length_error("tube model limited to 64 modules (rank * cap <= 64)");
  }
  auto lift = [rank](const Uniserial& u) { return TubeModule{u.socle, u.length, rank}; };
  return Category(
      Family::Tube, rank, cap, objects,
      [lift](const Uniserial& x, const Uniserial& y) { return hom_dim_tube(lift(x), lift(y)); },
      [lift](const Uniserial& x, const Uniserial& y) { return ext_dim_tube(lift(x), lift(y)); });
}

TubeModule module(const Category& cat, ObjectId id) {
  const auto& u = cat.object(id);
  return {u.socle, u.length, cat.vertex_count()};
}

ObjectId id_of(const Category& cat, const TubeModule& x) {
  if (x.rank != cat.vertex_count()) throw std::invalid_argument("tube rank mismatch");
  return cat.id_of({x.socle, x.length});
}

ObjectSet to_set(const Category& cat, const Predicate& p) {
  ObjectSet s;
  for (ObjectId id = 0; id < cat.size(); ++id) {
    if (p(module(cat, id))) s.insert(id);
  }
  return s;
}

ObjectSet to_set(const Category& cat, const TubeSubcatDescriptor& d) {
  return to_set(cat, [&d](const TubeModule& x) { return d.contains(x); });
}

}  // namespace torsion::tube

#include "torsion/category.hpp"

#include <sstream>
#include <stdexcept>

namespace torsion {

Category::Category(Family family, int vertex_count, int cap, std::vector<Uniserial> objects,
                   const Form& hom, const Form& ext)
    : family_(family), vertex_count_(vertex_count), cap_(cap), objects_(std::move(objects)) {
  if (objects_.size() > ObjectSet::kCapacity) {
    throw std::length_error("model has more than 64 indecomposables");
  }
  for (ObjectId i = 0; i < objects_.size(); ++i) {
    if (!index_.emplace(objects_[i], i).second) {
      throw std::invalid_argument("duplicate indecomposable in model");
    }
  }
  const std::size_t n = objects_.size();
  hom_.resize(n * n);
  ext_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      hom_[i * n + j] = hom(objects_[i], objects_[j]);
      ext_[i * n + j] = ext(objects_[i], objects_[j]);
    }
  }
}

std::optional<ObjectId> Category::find(const Uniserial& u) const {
  auto it = index_.find(u);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ObjectId Category::id_of(const Uniserial& u) const {
  auto id = find(u);
  if (!id) {
    throw std::invalid_argument("no indecomposable with socle " + std::to_string(u.socle) +
                                " and length " + std::to_string(u.length) + " in model");
  }
  return *id;
}

Vertex Category::shift(Vertex v, int k) const {
  if (family_ == Family::LinearA) return v + k;
  const int n = vertex_count_;
  return ((v - 1 + k) % n + n) % n + 1;
}

Vertex Category::top(ObjectId id) const {
  const auto& u = object(id);
  return shift(u.socle, -(u.length - 1));
}

std::optional<ObjectId> Category::submodule(ObjectId x, int len) const {
  const auto& u = object(x);
  if (len < 0 || len > u.length) throw std::out_of_range("submodule length out of range");
  if (len == 0) return std::nullopt;
  return id_of({u.socle, len});
}

std::optional<ObjectId> Category::quotient(ObjectId x, int len) const {
  const auto& u = object(x);
  if (len < 0 || len > u.length) throw std::out_of_range("quotient length out of range");
  if (len == 0) return std::nullopt;
  return id_of({shift(u.socle, -(u.length - len)), len});
}

std::optional<ObjectId> Category::subquotient(ObjectId x, int lo, int hi) const {
  const auto& u = object(x);
  if (lo < 0 || hi < lo || hi > u.length) throw std::out_of_range("subquotient out of range");
  if (lo == hi) return std::nullopt;
  return id_of({shift(u.socle, -lo), hi - lo});
}

std::optional<ObjectId> Category::glue(ObjectId quot, ObjectId sub) const {
  const auto& q = object(quot);
  const auto& s = object(sub);
  if (shift(q.socle, 1) != top(sub)) return std::nullopt;
  return find({s.socle, q.length + s.length});
}

std::string Category::label(ObjectId id) const {
  const auto& u = object(id);
  std::ostringstream os;
  if (family_ == Family::LinearA) {
    os << '[' << u.socle - u.length + 1 << ',' << u.socle << ']';
  } else {
    os << "U(" << u.socle << ',' << u.length << ')';
  }
  return os.str();
}

std::string Category::label(ObjectSet s) const {
  std::string out = "{";
  bool first = true;
  for (ObjectId id : s) {
    if (!first) out += ", ";
    out += label(id);
    first = false;
  }
  return out + "}";
}

}  // namespace torsion

#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torsion/object_set.hpp"
#include "torsion/quiver.hpp"

namespace torsion {

// A uniserial indecomposable given by socle vertex and length. Composition
// factors run from the top to the socle along arrows v -> v+1.
struct Uniserial {
  Vertex socle = 0;
  int length = 0;
  friend auto operator<=>(const Uniserial&, const Uniserial&) = default;
};

enum class Family { LinearA, Tube };

// Finite model of a module category whose indecomposables are uniserial:
// the indecomposables of K(linear A_n), or the modules of a tube up to a
// length cap. Hom and Ext dimensions are tabulated once.
class Category {
 public:
  using Form = std::function<int(const Uniserial&, const Uniserial&)>;

  Category(Family family, int vertex_count, int cap, std::vector<Uniserial> objects,
           const Form& hom, const Form& ext);

  Family family() const { return family_; }
  int vertex_count() const { return vertex_count_; }
  // Largest length present; for linear A_n this is n.
  int cap() const { return cap_; }
  std::size_t size() const { return objects_.size(); }
  ObjectSet all() const { return ObjectSet::first(objects_.size()); }

  const Uniserial& object(ObjectId id) const { return objects_.at(id); }
  std::optional<ObjectId> find(const Uniserial& u) const;
  ObjectId id_of(const Uniserial& u) const;

  int length(ObjectId id) const { return object(id).length; }
  Vertex socle(ObjectId id) const { return object(id).socle; }
  Vertex top(ObjectId id) const;
  // k steps along the arrows; negative k walks against them.
  Vertex shift(Vertex v, int k) const;

  // Unique submodule / quotient of the given length; nullopt for length 0.
  std::optional<ObjectId> submodule(ObjectId x, int len) const;
  std::optional<ObjectId> quotient(ObjectId x, int len) const;
  // X_hi / X_lo where X_p is the submodule of length p.
  std::optional<ObjectId> subquotient(ObjectId x, int lo, int hi) const;
  // The indecomposable E in 0 -> sub -> E -> quot -> 0, when one exists.
  std::optional<ObjectId> glue(ObjectId quot, ObjectId sub) const;

  int hom(ObjectId x, ObjectId y) const { return hom_[x * objects_.size() + y]; }
  int ext(ObjectId x, ObjectId y) const { return ext_[x * objects_.size() + y]; }

  std::string label(ObjectId id) const;
  std::string label(ObjectSet s) const;

 private:
  Family family_;
  int vertex_count_;
  int cap_;
  std::vector<Uniserial> objects_;
  std::map<Uniserial, ObjectId> index_;
  std::vector<int> hom_;
  std::vector<int> ext_;
};

// Outcome of a structural check; witness names an offending object.
struct Check {
  bool ok = true;
  std::string reason;
  std::optional<ObjectId> witness;
  std::optional<ObjectId> partner;

  explicit operator bool() const { return ok; }
  static Check pass() { return {}; }
  static Check fail(std::string why, std::optional<ObjectId> w = std::nullopt,
                    std::optional<ObjectId> p = std::nullopt) {
    return Check{false, std::move(why), w, p};
  }
};

}  // namespace torsion

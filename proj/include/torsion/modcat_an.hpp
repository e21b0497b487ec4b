#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "torsion/category.hpp"
#include "torsion/quiver.hpp"

namespace torsion::an {

// Interval module [a,b]: top S_a, socle S_b, for linearly oriented A_n.
struct Interval {
  int a = 1;
  int b = 1;
  int length() const { return b - a + 1; }
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

using IntervalSet = std::set<Interval>;

Uniserial to_uniserial(Interval x);
Interval to_interval(const Uniserial& u);
std::string to_string(Interval x);

// All intervals supported on one component of q, ordered by (a, b).
// q must be a subquiver of a linearly oriented A_n.
std::vector<Interval> indecomposables(const Quiver& q);

int hom_dim(Interval x, Interval y);
int ext_dim(Interval x, Interval y);
std::vector<int> dimension_vector(Interval x, const Quiver& q);

std::vector<Interval> quotients(Interval x);
std::vector<Interval> submodules(Interval x);
std::vector<Interval> projectives(const Quiver& q);
std::vector<Interval> injectives(const Quiver& q);
std::optional<Interval> tau(Interval x, const Quiver& q);
std::optional<Interval> tau_inv(Interval x, const Quiver& q);

IntervalSet gen_closure(const IntervalSet& s);
IntervalSet cogen_closure(const IntervalSet& s);
IntervalSet extension_closure(const IntervalSet& s);
// Members whose support lies entirely in keep.
IntervalSet restrict_support(const IntervalSet& s, const VertexSet& keep);

// The model of K(linear A_n); Ext is cross-checked against the Euler form.
Category category(int n);

ObjectId id_of(const Category& cat, Interval x);
Interval interval(const Category& cat, ObjectId id);
ObjectSet to_set(const Category& cat, const std::vector<Interval>& xs);
ObjectSet to_set(const Category& cat, const IntervalSet& xs);
std::vector<Interval> to_intervals(const Category& cat, ObjectSet s);

// Indecomposables whose support lies in keep.
ObjectSet support_set(const Category& cat, const VertexSet& keep);
VertexSet all_vertices(const Category& cat);
// Indecomposable projective / injective at v of the algebra K Q(keep).
ObjectId projective_at(const Category& cat, const VertexSet& keep, Vertex v);
ObjectId injective_at(const Category& cat, const VertexSet& keep, Vertex v);
ObjectSet projectives_of(const Category& cat, const VertexSet& keep);
ObjectSet injectives_of(const Category& cat, const VertexSet& keep);

}  // namespace torsion::an

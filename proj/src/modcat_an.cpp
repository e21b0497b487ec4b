#include "torsion/modcat_an.hpp"

#include <algorithm>
#include <stdexcept>

#include "torsion/oracle.hpp"

namespace torsion::an {

namespace {

void require_linear_orientation(const Quiver& q) {
  for (const auto& [s, t] : q.arrows()) {
    if (t != s + 1) throw std::invalid_argument("quiver is not linearly oriented A-type");
  }
}

// Maximal run of consecutive vertices of keep containing v.
std::pair<Vertex, Vertex> run_of(const VertexSet& keep, Vertex v) {
  if (!keep.count(v)) throw std::invalid_argument("vertex outside support");
  Vertex s = v, e = v;
  while (keep.count(s - 1)) --s;
  while (keep.count(e + 1)) ++e;
  return {s, e};
}

void check_interval(Interval x) {
  if (x.a < 1 || x.b < x.a) throw std::invalid_argument("invalid interval " + to_string(x));
}

}  // namespace

Uniserial to_uniserial(Interval x) { return {x.b, x.b - x.a + 1}; }

Interval to_interval(const Uniserial& u) { return {u.socle - u.length + 1, u.socle}; }

std::string to_string(Interval x) {
  return "[" + std::to_string(x.a) + "," + std::to_string(x.b) + "]";
}

std::vector<Interval> indecomposables(const Quiver& q) {
  require_linear_orientation(q);
  std::vector<Interval> out;
  for (const auto& run : q.linear_components()) {
    for (std::size_t i = 0; i < run.size(); ++i) {
      for (std::size_t j = i; j < run.size(); ++j) out.push_back({run[i], run[j]});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int hom_dim(Interval x, Interval y) {
  check_interval(x);
  check_interval(y);
  return (y.a <= x.a && x.a <= y.b && y.b <= x.b) ? 1 : 0;
}

int ext_dim(Interval x, Interval y) {
  check_interval(x);
  check_interval(y);
  return (x.a < y.a && y.a <= x.b + 1 && x.b + 1 <= y.b) ? 1 : 0;
}

std::vector<int> dimension_vector(Interval x, const Quiver& q) {
  std::vector<int> d;
  d.reserve(q.size());
  for (Vertex v : q.vertices()) d.push_back(x.a <= v && v <= x.b ? 1 : 0);
  return d;
}

std::vector<Interval> quotients(Interval x) {
  check_interval(x);
  std::vector<Interval> out;
  for (int c = x.a; c <= x.b; ++c) out.push_back({x.a, c});
  return out;
}

std::vector<Interval> submodules(Interval x) {
  check_interval(x);
  std::vector<Interval> out;
  for (int c = x.a; c <= x.b; ++c) out.push_back({c, x.b});
  return out;
}

std::vector<Interval> projectives(const Quiver& q) {
  require_linear_orientation(q);
  std::vector<Interval> out;
  for (const auto& run : q.linear_components()) {
    for (Vertex v : run) out.push_back({v, run.back()});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Interval> injectives(const Quiver& q) {
  require_linear_orientation(q);
  std::vector<Interval> out;
  for (const auto& run : q.linear_components()) {
    for (Vertex v : run) out.push_back({run.front(), v});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Interval> tau(Interval x, const Quiver& q) {
  if (!q.contains(x.a) || !q.contains(x.b)) throw std::invalid_argument("interval outside quiver");
  auto [s, e] = run_of(q.vertices(), x.b);
  if (x.b >= e) return std::nullopt;
  return Interval{x.a + 1, x.b + 1};
}

std::optional<Interval> tau_inv(Interval x, const Quiver& q) {
  if (!q.contains(x.a) || !q.contains(x.b)) throw std::invalid_argument("interval outside quiver");
  auto [s, e] = run_of(q.vertices(), x.a);
  if (x.a <= s) return std::nullopt;
  return Interval{x.a - 1, x.b - 1};
}

IntervalSet gen_closure(const IntervalSet& s) {
  IntervalSet out;
  for (const auto& x : s) {
    for (const auto& y : quotients(x)) out.insert(y);
  }
  return out;
}

IntervalSet cogen_closure(const IntervalSet& s) {
  IntervalSet out;
  for (const auto& x : s) {
    for (const auto& y : submodules(x)) out.insert(y);
  }
  return out;
}

IntervalSet extension_closure(const IntervalSet& s) {
  IntervalSet out = s;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& x : IntervalSet(out)) {
      for (const auto& y : IntervalSet(out)) {
        if (x.b + 1 == y.a && out.insert({x.a, y.b}).second) grew = true;
      }
    }
  }
  return out;
}

IntervalSet restrict_support(const IntervalSet& s, const VertexSet& keep) {
  IntervalSet out;
  for (const auto& x : s) {
    bool inside = true;
    for (int v = x.a; v <= x.b && inside; ++v) inside = keep.count(v) != 0;
    if (inside) out.insert(x);
  }
  return out;
}

Category category(int n) {
  if (n < 1) throw std::invalid_argument("A_n needs n >= 1");
  if (static_cast<std::size_t>(n) * (n + 1) / 2 > ObjectSet::kCapacity) {
    throw std::length_error("A_n model limited to 64 indecomposables (n <= 10)");
  }
  Quiver q = linear_An(n);
  std::vector<Uniserial> objects;
  for (const auto& x : indecomposables(q)) objects.push_back(to_uniserial(x));
  Category cat(
      Family::LinearA, n, n, objects,
      [](const Uniserial& x, const Uniserial& y) { return hom_dim(to_interval(x), to_interval(y)); },
      [](const Uniserial& x, const Uniserial& y) { return ext_dim(to_interval(x), to_interval(y)); });
  for (ObjectId i = 0; i < cat.size(); ++i) {
    for (ObjectId j = 0; j < cat.size(); ++j) {
      const auto dx = dimension_vector(interval(cat, i), q);
      const auto dy = dimension_vector(interval(cat, j), q);
      if (cat.hom(i, j) - cat.ext(i, j) != oracle::euler_form(dx, dy, q)) {
        throw std::logic_error("Ext table disagrees with the Euler form at " + cat.label(i) +
                               ", " + cat.label(j));
      }
    }
  }
  return cat;
}

ObjectId id_of(const Category& cat, Interval x) {
  check_interval(x);
  return cat.id_of(to_uniserial(x));
}

Interval interval(const Category& cat, ObjectId id) { return to_interval(cat.object(id)); }

ObjectSet to_set(const Category& cat, const std::vector<Interval>& xs) {
  ObjectSet s;
  for (const auto& x : xs) s.insert(id_of(cat, x));
  return s;
}

ObjectSet to_set(const Category& cat, const IntervalSet& xs) {
  return to_set(cat, std::vector<Interval>(xs.begin(), xs.end()));
}

std::vector<Interval> to_intervals(const Category& cat, ObjectSet s) {
  std::vector<Interval> out;
  for (ObjectId id : s) out.push_back(interval(cat, id));
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet all_vertices(const Category& cat) {
  VertexSet v;
  for (int i = 1; i <= cat.vertex_count(); ++i) v.insert(i);
  return v;
}

ObjectSet support_set(const Category& cat, const VertexSet& keep) {
  ObjectSet s;
  for (ObjectId id = 0; id < cat.size(); ++id) {
    const Interval x = interval(cat, id);
    bool inside = true;
    for (int v = x.a; v <= x.b && inside; ++v) inside = keep.count(v) != 0;
    if (inside) s.insert(id);
  }
  return s;
}

ObjectId projective_at(const Category& cat, const VertexSet& keep, Vertex v) {
  auto [s, e] = run_of(keep, v);
  return id_of(cat, {v, e});
}

ObjectId injective_at(const Category& cat, const VertexSet& keep, Vertex v) {
  auto [s, e] = run_of(keep, v);
  return id_of(cat, {s, v});
}

ObjectSet projectives_of(const Category& cat, const VertexSet& keep) {
  ObjectSet s;
  for (Vertex v : keep) s.insert(projective_at(cat, keep, v));
  return s;
}

ObjectSet injectives_of(const Category& cat, const VertexSet& keep) {
  ObjectSet s;
  for (Vertex v : keep) s.insert(injective_at(cat, keep, v));
  return s;
}

}  // namespace torsion::an

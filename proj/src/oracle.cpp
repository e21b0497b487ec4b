#include "torsion/oracle.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <stdexcept>

#include "torsion/parallel.hpp"

namespace torsion::oracle {

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix zero_matrix(int rows, int cols) { return Matrix(rows, std::vector<int>(cols, 0)); }

std::size_t rank_exact(std::vector<std::vector<mpq_class>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const mpq_class factor = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= factor * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

int dim_at(const Representation& r, Vertex v) {
  auto it = r.dims.find(v);
  return it == r.dims.end() ? 0 : it->second;
}

std::map<Vertex, std::size_t> vertex_positions(const Quiver& q) {
  std::map<Vertex, std::size_t> pos;
  for (Vertex v : q.vertices()) pos.emplace(v, pos.size());
  return pos;
}

}  // namespace

Representation interval_representation(const Quiver& q, an::Interval x) {
  Representation r;
  for (Vertex v : q.vertices()) r.dims[v] = (x.a <= v && v <= x.b) ? 1 : 0;
  for (const auto& [s, t] : q.arrows()) {
    Matrix m = zero_matrix(r.dims[t], r.dims[s]);
    if (r.dims[s] == 1 && r.dims[t] == 1) m[0][0] = 1;
    r.maps.push_back(std::move(m));
  }
  return r;
}

Representation tube_representation(const Quiver& cyclic, const tube::TubeModule& x) {
  tube::validate(x);
  if (static_cast<int>(cyclic.size()) != x.rank) throw std::invalid_argument("tube rank mismatch");
  Representation r;
  for (Vertex v : cyclic.vertices()) r.dims[v] = 0;
  // Basis e_0 (top) ... e_{len-1} (socle); local index inside its vertex.
  const Vertex first = tube::top(x);
  std::vector<Vertex> at(x.length);
  std::vector<int> local(x.length);
  for (int k = 0; k < x.length; ++k) {
    at[k] = tube::wrap(first + k, x.rank);
    local[k] = r.dims[at[k]]++;
  }
  for (const auto& [s, t] : cyclic.arrows()) {
    Matrix m = zero_matrix(r.dims[t], r.dims[s]);
    for (int k = 0; k + 1 < x.length; ++k) {
      if (at[k] == s && at[k + 1] == t) m[local[k + 1]][local[k]] = 1;
    }
    r.maps.push_back(std::move(m));
  }
  return r;
}

int hom_dim_matrix(const Quiver& q, const Representation& x, const Representation& y) {
  if (x.maps.size() != q.arrows().size() || y.maps.size() != q.arrows().size()) {
    throw std::invalid_argument("representation does not match the quiver");
  }
  std::map<Vertex, std::size_t> offset;
  std::size_t vars = 0;
  for (Vertex v : q.vertices()) {
    offset[v] = vars;
    vars += static_cast<std::size_t>(dim_at(y, v) * dim_at(x, v));
  }
  std::vector<std::vector<mpq_class>> rows;
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const auto [v, w] = q.arrows()[k];
    const int xv = dim_at(x, v), xw = dim_at(x, w), yv = dim_at(y, v), yw = dim_at(y, w);
    const Matrix& xa = x.maps[k];
    const Matrix& ya = y.maps[k];
    // (Y_a f_v - f_w X_a)[r][c] = 0
    for (int r = 0; r < yw; ++r) {
      for (int c = 0; c < xv; ++c) {
        std::vector<mpq_class> row(vars, 0);
        for (int j = 0; j < yv; ++j) row[offset[v] + j * xv + c] += ya[r][j];
        for (int j = 0; j < xw; ++j) row[offset[w] + r * xw + j] -= xa[j][c];
        rows.push_back(std::move(row));
      }
    }
  }
  return static_cast<int>(vars - rank_exact(std::move(rows)));
}

int hom_dim_matrix(const Quiver& q, an::Interval x, an::Interval y) {
  return hom_dim_matrix(q, interval_representation(q, x), interval_representation(q, y));
}

int hom_dim_matrix(const tube::TubeModule& x, const tube::TubeModule& y) {
  if (x.rank != y.rank) throw std::invalid_argument("tube rank mismatch");
  const Quiver q = cyclic_An(x.rank);
  return hom_dim_matrix(q, tube_representation(q, x), tube_representation(q, y));
}

int ringel_form(const std::vector<int>& d, const std::vector<int>& e, const Quiver& q) {
  if (d.size() != q.size() || e.size() != q.size()) {
    throw std::invalid_argument("dimension vector length differs from vertex count");
  }
  const auto pos = vertex_positions(q);
  int sum = 0;
  for (std::size_t i = 0; i < d.size(); ++i) sum += d[i] * e[i];
  for (const auto& [s, t] : q.arrows()) sum -= d[pos.at(s)] * e[pos.at(t)];
  return sum;
}

int euler_form(const std::vector<int>& d, const std::vector<int>& e, const Quiver& q) {
  if (!q.acyclic()) throw std::invalid_argument("euler_form needs an acyclic quiver");
  return ringel_form(d, e, q);
}

std::uint64_t QuotientClosedCandidates::count() const {
  std::uint64_t total = 1;
  for (const auto& group : by_top) total *= group.size() + 1;
  return total;
}

ObjectSet QuotientClosedCandidates::at(std::uint64_t index) const {
  ObjectSet s;
  for (const auto& group : by_top) {
    const std::uint64_t radix = group.size() + 1;
    const std::uint64_t take = index % radix;
    index /= radix;
    for (std::uint64_t i = 0; i < take; ++i) s.insert(group[i]);
  }
  return s;
}

QuotientClosedCandidates quotient_closed_candidates(const Category& cat) {
  std::map<Vertex, std::vector<ObjectId>> groups;
  for (ObjectId id = 0; id < cat.size(); ++id) groups[cat.top(id)].push_back(id);
  QuotientClosedCandidates c;
  for (auto& [v, ids] : groups) {
    std::sort(ids.begin(), ids.end(),
              [&cat](ObjectId a, ObjectId b) { return cat.length(a) < cat.length(b); });
    c.by_top.push_back(ids);
  }
  return c;
}

namespace {

template <class Accept>
std::vector<TorsionPair> search(const Category& cat, Execution exec, Accept accept) {
  const auto candidates = quotient_closed_candidates(cat);
  const std::uint64_t total = candidates.count();
  auto evaluate = [&](std::uint64_t i, TorsionPair& out) {
    const ObjectSet t = candidates.at(i);
    if (!is_extension_closed(cat, t)) return false;
    out = {t, perp_right(cat, t, cat.all())};
    return accept(out);
  };
  std::vector<TorsionPair> found;
  if (exec == Execution::Serial) {
    for (std::uint64_t i = 0; i < total; ++i) {
      TorsionPair tp;
      if (evaluate(i, tp)) found.push_back(tp);
    }
    return found;
  }
  std::vector<TorsionPair> slots(total);
  std::vector<char> hit(total, 0);
  parallel::for_each_index(total, [&](std::uint64_t i) { hit[i] = evaluate(i, slots[i]) ? 1 : 0; });
  for (std::uint64_t i = 0; i < total; ++i) {
    if (hit[i]) found.push_back(slots[i]);
  }
  return found;
}

bool canonical_below_cap(const Category& cat, const TorsionPair& tp) {
  for (ObjectId x = 0; x < cat.size(); ++x) {
    const int len = cat.length(x);
    if (len >= cat.cap()) continue;
    bool found = false;
    for (int p = 0; p <= len && !found; ++p) {
      auto sub = cat.submodule(x, p);
      auto quo = cat.subquotient(x, p, len);
      found = (!sub || tp.torsion.contains(*sub)) && (!quo || tp.free.contains(*quo));
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

std::vector<TorsionPair> enumerate_torsion_pairs_bruteforce(int n, int bound, Execution exec) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > bound) {
    throw std::length_error("n = " + std::to_string(n) + " exceeds the enumeration bound " +
                            std::to_string(bound));
  }
  const Category cat = an::category(n);
  return search(cat, exec, [&cat](const TorsionPair& tp) {
    return static_cast<bool>(is_torsion_pair(cat, cat.all(), tp));
  });
}

std::vector<TorsionPair> torsion_pairs_on(const Category& cat, ObjectSet ambient) {
  std::vector<TorsionPair> out;
  auto consider = [&](ObjectSet t) {
    TorsionPair tp{t, perp_right(cat, t, ambient)};
    if (is_torsion_pair(cat, ambient, tp)) out.push_back(tp);
  };
  if (gen_closure(cat, ambient) == ambient) {
    // Torsion classes of a quotient-closed ambient are quotient-closed.
    std::map<Vertex, std::vector<ObjectId>> groups;
    for (ObjectId id : ambient) groups[cat.top(id)].push_back(id);
    QuotientClosedCandidates c;
    for (auto& [v, ids] : groups) {
      std::sort(ids.begin(), ids.end(),
                [&cat](ObjectId a, ObjectId b) { return cat.length(a) < cat.length(b); });
      c.by_top.push_back(ids);
    }
    for (std::uint64_t i = 0; i < c.count(); ++i) consider(c.at(i));
  } else {
    const auto ids = ambient.to_vector();
    if (ids.size() > 20) throw std::length_error("subset search limited to 20 objects");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ids.size()); ++mask) {
      ObjectSet t;
      for (std::size_t i = 0; i < ids.size(); ++i) {
        if (mask >> i & 1u) t.insert(ids[i]);
      }
      consider(t);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TorsionPair> bruteforce_tube_truncated(int rank, int cap, Execution exec) {
  const Category cat = tube::category(rank, cap);
  return search(cat, exec, [&cat](const TorsionPair& tp) { return canonical_below_cap(cat, tp); });
}

std::vector<ObjectSet> stable_tube_torsion_classes(int rank, const std::vector<int>& caps,
                                                   Execution exec) {
  if (caps.empty()) throw std::invalid_argument("no caps given");
  std::vector<int> sorted = caps;
  std::sort(sorted.begin(), sorted.end());
  const Category top_cat = tube::category(rank, sorted.back());
  std::vector<ObjectSet> out;
  std::vector<std::vector<TorsionPair>> lower;
  std::vector<Category> lower_cats;
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    lower.push_back(bruteforce_tube_truncated(rank, sorted[i], exec));
    lower_cats.push_back(tube::category(rank, sorted[i]));
  }
  for (const auto& tp : bruteforce_tube_truncated(rank, sorted.back(), exec)) {
    bool stable = true;
    for (std::size_t i = 0; i < lower.size() && stable; ++i) {
      ObjectSet restricted;
      for (ObjectId id : tp.torsion) {
        if (top_cat.length(id) <= sorted[i]) {
          restricted.insert(tube::id_of(lower_cats[i], tube::module(top_cat, id)));
        }
      }
      stable = std::any_of(lower[i].begin(), lower[i].end(),
                           [&](const TorsionPair& p) { return p.torsion == restricted; });
    }
    if (stable) out.push_back(tp.torsion);
  }
  return out;
}

Check check_tube_tp_truncated(const tube::Predicate& torsion, const tube::Predicate& free, int rank,
                              int cap) {
  if (cap < 2) throw std::invalid_argument("truncation cap must be >= 2");
  const Category cat = tube::category(rank, cap);
  const TorsionPair tp{tube::to_set(cat, torsion), tube::to_set(cat, free)};
  for (ObjectId x : tp.torsion) {
    for (ObjectId y : tp.free) {
      if (cat.hom(x, y) != 0) return Check::fail("Hom(T, F) is nonzero", y, x);
    }
  }
  for (ObjectId x = 0; x < cat.size(); ++x) {
    if (cat.length(x) >= cap) continue;
    const int len = cat.length(x);
    bool found = false;
    for (int p = 0; p <= len && !found; ++p) {
      auto sub = cat.submodule(x, p);
      auto quo = cat.subquotient(x, p, len);
      found = (!sub || tp.torsion.contains(*sub)) && (!quo || tp.free.contains(*quo));
    }
    if (!found) return Check::fail("no short exact sequence 0 -> T -> X -> F -> 0", x);
  }
  return Check::pass();
}

Check check_tube_tp_truncated(const tube::TubeSubcatDescriptor& torsion,
                              const tube::TubeSubcatDescriptor& free, int cap) {
  if (torsion.rank != free.rank) throw std::invalid_argument("tube rank mismatch");
  return check_tube_tp_truncated([&](const tube::TubeModule& x) { return torsion.contains(x); },
                                 [&](const tube::TubeModule& x) { return free.contains(x); },
                                 torsion.rank, cap);
}

}  // namespace torsion::oracle

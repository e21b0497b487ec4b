#include "torsion/quiver.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace torsion {

Quiver::Quiver(QuiverShape shape, VertexSet vertices, std::vector<Arrow> arrows)
    : shape_(shape), vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  for (const auto& [s, t] : arrows_) {
    if (!contains(s) || !contains(t)) {
      throw std::invalid_argument("arrow endpoint outside the vertex set");
    }
  }
}

VertexSet Quiver::successors(Vertex v) const {
  VertexSet out;
  for (const auto& [s, t] : arrows_) {
    if (s == v) out.insert(t);
  }
  return out;
}

VertexSet Quiver::predecessors(Vertex v) const {
  VertexSet out;
  for (const auto& [s, t] : arrows_) {
    if (t == v) out.insert(s);
  }
  return out;
}

VertexSet Quiver::sinks() const {
  VertexSet out = vertices_;
  for (const auto& a : arrows_) out.erase(a.first);
  return out;
}

VertexSet Quiver::sources() const {
  VertexSet out = vertices_;
  for (const auto& a : arrows_) out.erase(a.second);
  return out;
}

bool Quiver::acyclic() const {
  std::map<Vertex, int> indeg;
  for (Vertex v : vertices_) indeg[v] = 0;
  for (const auto& a : arrows_) ++indeg[a.second];
  std::queue<Vertex> ready;
  for (const auto& [v, d] : indeg) {
    if (d == 0) ready.push(v);
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    Vertex v = ready.front();
    ready.pop();
    ++seen;
    for (const auto& a : arrows_) {
      if (a.first == v && --indeg[a.second] == 0) ready.push(a.second);
    }
  }
  return seen == vertices_.size();
}

std::vector<std::vector<Vertex>> Quiver::linear_components() const {
  std::map<Vertex, int> in, out;
  std::map<Vertex, Vertex> next;
  for (const auto& [s, t] : arrows_) {
    ++out[s];
    ++in[t];
    next[s] = t;
  }
  for (Vertex v : vertices_) {
    if (in[v] > 1 || out[v] > 1) {
      throw std::invalid_argument("quiver is not of linear type");
    }
  }
  if (!acyclic()) throw std::invalid_argument("quiver has an oriented cycle");
  std::vector<std::vector<Vertex>> runs;
  for (Vertex v : vertices_) {
    if (in[v] != 0) continue;
    std::vector<Vertex> run{v};
    for (auto it = next.find(v); it != next.end(); it = next.find(it->second)) {
      run.push_back(it->second);
    }
    runs.push_back(std::move(run));
  }
  return runs;
}

Quiver linear_An(int n) {
  if (n < 1) throw std::invalid_argument("linear_An needs n >= 1");
  VertexSet v;
  std::vector<Arrow> a;
  for (int i = 1; i <= n; ++i) {
    v.insert(i);
    if (i < n) a.emplace_back(i, i + 1);
  }
  return Quiver(QuiverShape::LinearA, std::move(v), std::move(a));
}

Quiver cyclic_An(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_An needs n >= 1");
  VertexSet v;
  std::vector<Arrow> a;
  for (int i = 1; i <= n; ++i) {
    v.insert(i);
    a.emplace_back(i, i % n + 1);
  }
  return Quiver(QuiverShape::CyclicA, std::move(v), std::move(a));
}

Quiver subquiver(const Quiver& q, const VertexSet& keep) {
  for (Vertex v : keep) {
    if (!q.contains(v)) throw std::invalid_argument("subquiver: vertex not in quiver");
  }
  std::vector<Arrow> a;
  for (const auto& arrow : q.arrows()) {
    if (keep.count(arrow.first) && keep.count(arrow.second)) a.push_back(arrow);
  }
  if (q.shape() == QuiverShape::CyclicA && keep == q.vertices()) {
    return Quiver(QuiverShape::CyclicA, keep, std::move(a));
  }
  Quiver sub(QuiverShape::DisjointLinearA, keep, a);
  if (!keep.empty() && sub.acyclic()) {
    try {
      if (sub.linear_components().size() == 1) {
        return Quiver(QuiverShape::LinearA, keep, std::move(a));
      }
    } catch (const std::invalid_argument&) {
    }
  }
  return sub;
}

bool path_exists(const Quiver& q, const VertexSet& from, const VertexSet& to) {
  for (Vertex v : from) {
    if (!q.contains(v)) throw std::invalid_argument("path_exists: vertex not in quiver");
  }
  for (Vertex v : to) {
    if (!q.contains(v)) throw std::invalid_argument("path_exists: vertex not in quiver");
  }
  VertexSet seen = from;
  std::queue<Vertex> work;
  for (Vertex v : from) work.push(v);
  while (!work.empty()) {
    Vertex v = work.front();
    work.pop();
    if (to.count(v)) return true;
    for (Vertex w : q.successors(v)) {
      if (seen.insert(w).second) work.push(w);
    }
  }
  return false;
}

std::string to_string(QuiverShape shape) {
  switch (shape) {
    case QuiverShape::LinearA: return "linearA";
    case QuiverShape::CyclicA: return "cyclicA";
    case QuiverShape::DisjointLinearA: return "disjointLinearA";
  }
  return "?";
}

std::string to_string(PartitionKind kind) {
  std::string s = kind.strong ? "strong" : "plain";
  return s + (kind.side == PartitionSide::One ? "1" : "2");
}

PartitionKind partition_kind_from_string(const std::string& s) {
  if (s == "strong1") return kStrong1;
  if (s == "strong2") return kStrong2;
  if (s == "plain1") return kPlain1;
  if (s == "plain2") return kPlain2;
  throw std::invalid_argument("unknown partition kind: " + s);
}

namespace {

std::vector<std::vector<Vertex>> as_lists(const PartPartition& p) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& part : p.parts) out.emplace_back(part.begin(), part.end());
  return out;
}

// Residual vertex set once parts[0..k-1] are removed.
VertexSet residual_before(const Quiver& q, const std::vector<VertexSet>& parts, std::size_t k) {
  VertexSet r = q.vertices();
  for (std::size_t i = 0; i < k; ++i) {
    for (Vertex v : parts[i]) r.erase(v);
  }
  return r;
}

bool part_condition(const Quiver& q, const std::vector<VertexSet>& parts, std::size_t k,
                    PartitionKind kind) {
  if (k == 0) return true;
  const bool odd = k % 2 == 1;
  const bool first_side = kind.side == PartitionSide::One;
  if (kind.strong) {
    Quiver sub = subquiver(q, residual_before(q, parts, k));
    const bool wants_sinks = (first_side == odd);
    const VertexSet need = wants_sinks ? sub.sinks() : sub.sources();
    return std::includes(parts[k].begin(), parts[k].end(), need.begin(), need.end());
  }
  if (k == 1) return true;
  Quiver sub = subquiver(q, residual_before(q, parts, k - 1));
  const VertexSet& prev = parts[k - 1];
  const bool towards_prev = (first_side != odd);
  for (Vertex v : parts[k]) {
    const bool ok = towards_prev ? path_exists(sub, {v}, prev) : path_exists(sub, prev, {v});
    if (!ok) return false;
  }
  return true;
}

void check_well_formed(const Quiver& q, const PartPartition& s) {
  if (s.parts.empty()) throw std::invalid_argument("partition has no parts");
  VertexSet seen;
  for (std::size_t k = 0; k < s.parts.size(); ++k) {
    if (k > 0 && s.parts[k].empty()) {
      throw std::invalid_argument("partition part " + std::to_string(k) + " is empty");
    }
    for (Vertex v : s.parts[k]) {
      if (!q.contains(v)) {
        throw std::invalid_argument("partition uses vertex " + std::to_string(v) +
                                    " outside the quiver");
      }
      if (!seen.insert(v).second) {
        throw std::invalid_argument("partition parts overlap at vertex " + std::to_string(v));
      }
    }
  }
}

void enumerate_rec(const Quiver& q, PartitionKind kind, bool complete_only,
                   std::vector<VertexSet>& parts, const VertexSet& remaining,
                   std::vector<PartPartition>& out) {
  const std::size_t k = parts.size();
  std::vector<Vertex> rem(remaining.begin(), remaining.end());
  const std::uint64_t subsets = std::uint64_t{1} << rem.size();
  for (std::uint64_t mask = (k == 0 ? 0 : 1); mask < subsets; ++mask) {
    VertexSet part;
    for (std::size_t i = 0; i < rem.size(); ++i) {
      if (mask >> i & 1u) part.insert(rem[i]);
    }
    parts.push_back(part);
    if (part_condition(q, parts, k, kind)) {
      VertexSet next = remaining;
      for (Vertex v : part) next.erase(v);
      if (next.empty() || !complete_only) {
        out.push_back(PartPartition{parts, kind, next.empty()});
      }
      if (!next.empty()) enumerate_rec(q, kind, complete_only, parts, next, out);
    }
    parts.pop_back();
  }
}

}  // namespace

bool partition_less(const PartPartition& a, const PartPartition& b) {
  return as_lists(a) < as_lists(b);
}

std::string to_string(const PartPartition& p) {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < p.parts.size(); ++k) {
    if (k) os << ',';
    os << '{';
    bool first = true;
    for (Vertex v : p.parts[k]) {
      if (!first) os << ',';
      os << v;
      first = false;
    }
    os << '}';
  }
  os << '}';
  return os.str();
}

bool validate_partition(const Quiver& q, const PartPartition& s) {
  check_well_formed(q, s);
  for (std::size_t k = 1; k < s.parts.size(); ++k) {
    if (!part_condition(q, s.parts, k, s.kind)) return false;
  }
  const bool covers = residual_before(q, s.parts, s.parts.size()).empty();
  return covers == s.complete;
}

std::vector<PartPartition> enumerate_partitions(const Quiver& q, PartitionKind kind,
                                                bool complete) {
  std::vector<PartPartition> out;
  std::vector<VertexSet> parts;
  if (q.vertices().empty()) {
    out.push_back(PartPartition{{VertexSet{}}, kind, true});
    return out;
  }
  enumerate_rec(q, kind, complete, parts, q.vertices(), out);
  std::sort(out.begin(), out.end(), partition_less);
  return out;
}

}  // namespace torsion

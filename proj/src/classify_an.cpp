#include "torsion/classify_an.hpp"

#include <stdexcept>

#include "torsion/oracle.hpp"

namespace torsion::an {

namespace {

void require_linear(const Category& cat) {
  if (cat.family() != Family::LinearA) throw std::invalid_argument("expected a linear A_n model");
}

VertexSet minus(VertexSet a, const VertexSet& b) {
  for (Vertex v : b) a.erase(v);
  return a;
}

DecompositionResult decompose(const Category& cat, const TorsionPair& tp, const VertexSet& support,
                              Side side) {
  require_linear(cat);
  const Quiver q = support_quiver(cat, support);
  if (Check c = is_torsion_pair(cat, support_set(cat, support), tp); !c) {
    throw std::invalid_argument("not a torsion pair: " + c.reason +
                                (c.witness ? " at " + cat.label(*c.witness) : ""));
  }
  DecompositionResult out;
  out.side = side;
  VertexSet k = support;
  ObjectSet t = tp.torsion, f = tp.free;
  bool projective_stage = side == Side::Left;
  std::vector<VertexSet> parts;
  for (int stage = 0;; ++stage) {
    VertexSet d;
    for (Vertex v : k) {
      const bool take = projective_stage ? t.contains(projective_at(cat, k, v))
                                         : f.contains(injective_at(cat, k, v));
      if (take) d.insert(v);
    }
    if (stage > 0 && d.empty()) break;
    parts.push_back(d);
    out.trace.push_back(
        {stage, d, projective_stage ? StageSource::Projective : StageSource::Injective});
    k = minus(k, d);
    const ObjectSet inside = support_set(cat, k);
    t &= inside;
    f &= inside;
    projective_stage = !projective_stage;
  }
  const PartitionSide ps = side == Side::Left ? PartitionSide::One : PartitionSide::Two;
  out.partition = PartPartition{parts, PartitionKind{ps, true}, k.empty()};
  if (!validate_partition(q, out.partition)) out.partition.kind.strong = false;
  out.residual_support = k;
  out.residual = {t, f};
  return out;
}

VertexSet covered(const PartPartition& s) {
  VertexSet u;
  for (const auto& p : s.parts) u.insert(p.begin(), p.end());
  return u;
}

VertexSet first_vertices(const Quiver& q) {
  VertexSet out;
  for (const auto& run : q.linear_components()) out.insert(run.front());
  return out;
}

VertexSet last_vertices(const Quiver& q) {
  VertexSet out;
  for (const auto& run : q.linear_components()) out.insert(run.back());
  return out;
}

}  // namespace

std::string to_string(Side side) { return side == Side::Left ? "left" : "right"; }

Quiver support_quiver(const Category& cat, const VertexSet& support) {
  require_linear(cat);
  return subquiver(linear_An(cat.vertex_count()), support);
}

DecompositionResult decompose_left(const Category& cat, const TorsionPair& tp) {
  return decompose(cat, tp, all_vertices(cat), Side::Left);
}

DecompositionResult decompose_left(const Category& cat, const TorsionPair& tp,
                                   const VertexSet& support) {
  return decompose(cat, tp, support, Side::Left);
}

DecompositionResult decompose_right(const Category& cat, const TorsionPair& tp) {
  return decompose(cat, tp, all_vertices(cat), Side::Right);
}

DecompositionResult decompose_right(const Category& cat, const TorsionPair& tp,
                                    const VertexSet& support) {
  return decompose(cat, tp, support, Side::Right);
}

TorsionPair assemble(const Category& cat, const PartPartition& partition,
                     const TorsionPair& residual) {
  return assemble(cat, partition, residual, all_vertices(cat));
}

TorsionPair assemble(const Category& cat, const PartPartition& partition, const TorsionPair& residual,
                     const VertexSet& support) {
  const Quiver q = support_quiver(cat, support);
  const bool left = partition.kind.side == PartitionSide::One;
  PartPartition plain = partition;
  plain.kind.strong = false;
  plain.complete = covered(partition) == support;
  if (!validate_partition(q, plain)) {
    throw std::invalid_argument("partition violates the " + to_string(plain.kind) + " conditions");
  }
  const VertexSet rest = minus(support, covered(partition));
  if (Check c = is_torsion_pair(cat, support_set(cat, rest), residual); !c) {
    throw std::invalid_argument("residual is not a torsion pair on the uncovered vertices: " +
                                c.reason);
  }
  if (residual.torsion.intersects(projectives_of(cat, rest)) ||
      residual.free.intersects(injectives_of(cat, rest))) {
    throw std::invalid_argument("residual torsion pair meets the residual projectives/injectives");
  }
  ObjectSet torsion = residual.torsion, free = residual.free;
  VertexSet k = support;
  for (std::size_t i = 0; i < partition.parts.size(); ++i) {
    const bool projective_stage = (i % 2 == 0) == left;
    ObjectSet gens;
    for (Vertex v : partition.parts[i]) {
      gens.insert(projective_stage ? projective_at(cat, k, v) : injective_at(cat, k, v));
    }
    if (projective_stage) {
      torsion |= gen_closure(cat, gens);
    } else {
      free |= cogen_closure(cat, gens);
    }
    k = minus(k, partition.parts[i]);
  }
  return {extension_closure(cat, torsion), extension_closure(cat, free)};
}

NTorsionPair trace_ntp(const Category& cat, const DecompositionResult& d) {
  const bool left = d.side == Side::Left;
  VertexSet k = d.residual_support;
  for (const auto& p : d.partition.parts) k.insert(p.begin(), p.end());
  std::vector<ObjectSet> head, tail;
  for (std::size_t i = 0; i < d.partition.parts.size(); ++i) {
    const bool projective_stage = (i % 2 == 0) == left;
    ObjectSet gens;
    for (Vertex v : d.partition.parts[i]) {
      gens.insert(projective_stage ? projective_at(cat, k, v) : injective_at(cat, k, v));
    }
    if (projective_stage) {
      head.push_back(gen_closure(cat, gens));
    } else {
      tail.push_back(cogen_closure(cat, gens));
    }
    k = minus(k, d.partition.parts[i]);
  }
  NTorsionPair t{head};
  t.parts.push_back(d.residual.torsion);
  t.parts.push_back(d.residual.free);
  t.parts.insert(t.parts.end(), tail.rbegin(), tail.rend());
  return t;
}

bool residuals_agree(const Category& cat, const TorsionPair& tp) {
  return residuals_agree(cat, tp, all_vertices(cat));
}

bool residuals_agree(const Category& cat, const TorsionPair& tp, const VertexSet& support) {
  const auto l = decompose_left(cat, tp, support);
  const auto r = decompose_right(cat, tp, support);
  return l.residual_support == r.residual_support && l.residual == r.residual;
}

TorsionPair partition_to_tp(const Category& cat, const PartPartition& s) {
  return partition_to_tp(cat, s, all_vertices(cat));
}

TorsionPair partition_to_tp(const Category& cat, const PartPartition& s, const VertexSet& support) {
  if (s.kind != kStrong1) throw std::invalid_argument("expected a strong 1-type partition");
  if (!s.complete) throw std::invalid_argument("expected a complete partition");
  if (!validate_partition(support_quiver(cat, support), s)) {
    throw std::invalid_argument("not a complete strong 1-type partition: " + to_string(s));
  }
  return assemble(cat, s, TorsionPair{}, support);
}

PartPartition tp_to_partition(const Category& cat, const TorsionPair& tp) {
  return tp_to_partition(cat, tp, all_vertices(cat));
}

PartPartition tp_to_partition(const Category& cat, const TorsionPair& tp, const VertexSet& support) {
  const auto d = decompose_left(cat, tp, support);
  if (!d.partition.complete || !d.partition.kind.strong) {
    throw std::logic_error("decomposition of a torsion pair on A_n is not complete and strong");
  }
  return d.partition;
}

std::vector<TorsionPair> enumerate_torsion_pairs(const Category& cat) {
  return enumerate_torsion_pairs(cat, all_vertices(cat));
}

std::vector<TorsionPair> enumerate_torsion_pairs(const Category& cat, const VertexSet& support) {
  std::vector<TorsionPair> out;
  for (const auto& s : enumerate_partitions(support_quiver(cat, support), kStrong1, true)) {
    out.push_back(partition_to_tp(cat, s, support));
  }
  return out;
}

std::uint64_t catalan(int k) {
  if (k < 0) throw std::invalid_argument("catalan index must be >= 0");
  if (k > 33) throw std::overflow_error("catalan number exceeds 64 bits");
  std::uint64_t c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

std::uint64_t count_torsion_pairs(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return catalan(n + 1);
}

CountReport verify_count(int n, int bound) {
  CountReport r;
  r.n = n;
  r.formula = count_torsion_pairs(n);
  r.partitions = enumerate_partitions(linear_An(n), kStrong1, true).size();
  if (n <= bound) r.bruteforce = oracle::enumerate_torsion_pairs_bruteforce(n, bound).size();
  return r;
}

std::pair<ObjectSet, ObjectSet> generators(const Category& cat, const TorsionPair& tp) {
  ObjectSet gens, cogens;
  for (ObjectId x : tp.torsion) {
    bool proper_quotient = false;
    for (ObjectId y : tp.torsion) {
      if (cat.length(y) > cat.length(x) && cat.quotient(y, cat.length(x)) == x) {
        proper_quotient = true;
      }
    }
    if (!proper_quotient) gens.insert(x);
  }
  for (ObjectId x : tp.free) {
    bool proper_sub = false;
    for (ObjectId y : tp.free) {
      if (cat.length(y) > cat.length(x) && cat.submodule(y, cat.length(x)) == x) proper_sub = true;
    }
    if (!proper_sub) cogens.insert(x);
  }
  return {gens, cogens};
}

bool is_tilting_induced(const Category& cat, const TorsionPair& tp) {
  return is_tilting_induced(cat, tp, all_vertices(cat));
}

bool is_tilting_induced(const Category& cat, const TorsionPair& tp, const VertexSet& support) {
  const bool by_modules = injectives_of(cat, support).subset_of(tp.torsion);
  const auto d = decompose_left(cat, tp, support);
  const VertexSet firsts = first_vertices(support_quiver(cat, support));
  bool by_partition = true;
  for (Vertex v : firsts) by_partition = by_partition && d.partition.parts[0].count(v);
  if (by_modules != by_partition) {
    throw std::logic_error("tilting criterion disagrees with the left partition");
  }
  return by_modules;
}

bool is_cotilting_induced(const Category& cat, const TorsionPair& tp) {
  return is_cotilting_induced(cat, tp, all_vertices(cat));
}

bool is_cotilting_induced(const Category& cat, const TorsionPair& tp, const VertexSet& support) {
  const bool by_modules = projectives_of(cat, support).subset_of(tp.free);
  const auto d = decompose_right(cat, tp, support);
  const VertexSet lasts = last_vertices(support_quiver(cat, support));
  bool by_partition = true;
  for (Vertex v : lasts) by_partition = by_partition && d.partition.parts[0].count(v);
  if (by_modules != by_partition) {
    throw std::logic_error("cotilting criterion disagrees with the right partition");
  }
  return by_modules;
}

}  // namespace torsion::an

#include "torsion/classify_tube.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace torsion::tube {

namespace {

using Run = std::vector<Vertex>;

struct LocalChoice {
  TorsionPair pair;
  PartPartition partition;
};

TubeModule lift(const Run& run, an::Interval x, int rank) {
  return {run[x.b - 1], x.length(), rank};
}

std::vector<TubeModule> lift_all(const Category& cat, const Run& run, ObjectSet s, int rank) {
  std::vector<TubeModule> out;
  for (const auto& x : an::to_intervals(cat, s)) out.push_back(lift(run, x, rank));
  return out;
}

std::vector<std::vector<Vertex>> as_lists(const std::vector<VertexSet>& parts) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& p : parts) out.emplace_back(p.begin(), p.end());
  return out;
}

TubeTorsionPair build(int rank, int kind, const VertexSet& delta, const std::vector<Run>& runs,
                      const std::vector<Category>& cats, const std::vector<LocalChoice>& choice) {
  TubeTorsionPair p;
  p.rank = rank;
  p.kind = kind;
  p.delta = delta;
  std::vector<TubeModule> t_fin, f_fin;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    const auto t = lift_all(cats[r], runs[r], choice[r].pair.torsion, rank);
    const auto f = lift_all(cats[r], runs[r], choice[r].pair.free, rank);
    t_fin.insert(t_fin.end(), t.begin(), t.end());
    f_fin.insert(f_fin.end(), f.begin(), f.end());
    const auto& parts = choice[r].partition.parts;
    if (!parts.empty() && !parts[0].empty()) {
      throw std::logic_error("residual partition has a nonempty first part");
    }
    for (std::size_t i = 1; i < parts.size(); ++i) {
      if (p.residual_partition.size() < i) p.residual_partition.resize(i);
      for (Vertex local : parts[i]) p.residual_partition[i - 1].insert(runs[r][local - 1]);
    }
  }
  std::sort(t_fin.begin(), t_fin.end());
  std::sort(f_fin.begin(), f_fin.end());
  using K = TubeSubcatDescriptor::Kind;
  if (kind == 1) {
    p.torsion = {K::CorayPlusFinite, rank, delta, t_fin};
    p.free = {K::Finite, rank, {}, f_fin};
  } else {
    p.torsion = {K::Finite, rank, {}, t_fin};
    p.free = {K::RayPlusFinite, rank, delta, f_fin};
  }
  return p;
}

void product(const std::vector<std::vector<LocalChoice>>& options, std::vector<LocalChoice>& pick,
             const std::function<void(const std::vector<LocalChoice>&)>& emit) {
  if (pick.size() == options.size()) {
    emit(pick);
    return;
  }
  for (const auto& c : options[pick.size()]) {
    pick.push_back(c);
    product(options, pick, emit);
    pick.pop_back();
  }
}

// Torsion-class membership up to length 2 * rank + 2; past the longest
// finite member it repeats with period dividing rank.
std::vector<bool> signature(const TubeTorsionPair& p) {
  std::vector<bool> sig;
  for (const auto& x : all_modules(p.rank, 2 * p.rank + 2)) sig.push_back(p.torsion.contains(x));
  return sig;
}

std::vector<TubeTorsionPair> deduplicate(std::vector<TubeTorsionPair> pairs) {
  std::vector<TubeTorsionPair> out;
  std::set<std::vector<bool>> seen;
  for (auto& p : pairs) {
    if (seen.insert(signature(p)).second) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

bool tube_pair_less(const TubeTorsionPair& a, const TubeTorsionPair& b) {
  auto key = [](const TubeTorsionPair& p) {
    return std::make_tuple(p.rank, p.kind, std::vector<Vertex>(p.delta.begin(), p.delta.end()),
                           as_lists(p.residual_partition), p.torsion.finite, p.free.finite);
  };
  return key(a) < key(b);
}

std::string to_string(const TubeTorsionPair& p) {
  std::ostringstream os;
  os << "kind=" << p.kind << " delta={";
  bool first = true;
  for (Vertex v : p.delta) {
    os << (first ? "" : ",") << v;
    first = false;
  }
  os << "} residual=" << torsion::to_string(PartPartition{p.residual_partition, kStrong1, true});
  return os.str();
}

std::vector<std::vector<Vertex>> residual_runs(int rank, const VertexSet& delta) {
  const Quiver q = cyclic_An(rank);
  if (delta.empty()) throw std::invalid_argument("delta must be nonempty");
  VertexSet rest = q.vertices();
  for (Vertex v : delta) {
    if (!q.contains(v)) throw std::invalid_argument("delta vertex outside 1..rank");
    rest.erase(v);
  }
  return subquiver(q, rest).linear_components();
}

std::vector<TubeTorsionPair> enumerate_tube_tps(int rank) {
  if (rank < 1) throw std::invalid_argument("tube rank must be >= 1");
  if (rank > 16) throw std::length_error("tube rank too large to enumerate");
  std::vector<TubeTorsionPair> out;
  for (std::uint32_t mask = 1; mask < (1u << rank); ++mask) {
    VertexSet delta;
    for (int v = 1; v <= rank; ++v) {
      if (mask >> (v - 1) & 1u) delta.insert(v);
    }
    const auto runs = residual_runs(rank, delta);
    std::vector<Category> cats;
    for (const auto& run : runs) cats.push_back(an::category(static_cast<int>(run.size())));
    for (int kind = 1; kind <= 2; ++kind) {
      std::vector<std::vector<LocalChoice>> options;
      for (const auto& cat : cats) {
        std::vector<LocalChoice> local;
        for (const auto& tp : an::enumerate_torsion_pairs(cat)) {
          if (kind == 1 && an::is_cotilting_induced(cat, tp)) {
            local.push_back({tp, an::decompose_left(cat, tp).partition});
          } else if (kind == 2 && an::is_tilting_induced(cat, tp)) {
            local.push_back({tp, an::decompose_right(cat, tp).partition});
          }
        }
        options.push_back(std::move(local));
      }
      std::vector<LocalChoice> pick;
      product(options, pick, [&](const std::vector<LocalChoice>& c) {
        out.push_back(build(rank, kind, delta, runs, cats, c));
      });
    }
  }
  std::sort(out.begin(), out.end(), tube_pair_less);
  return deduplicate(std::move(out));
}

TubeTorsionPair partition_to_tube_tp(int rank, const PartPartition& s) {
  const Quiver q = cyclic_An(rank);
  if (!s.kind.strong || !s.complete) {
    throw std::invalid_argument("expected a complete strong partition");
  }
  if (s.parts.empty() || s.parts[0].empty()) {
    throw std::invalid_argument("first part of a tube partition must be nonempty");
  }
  if (!validate_partition(q, s)) {
    throw std::invalid_argument("not a complete " + torsion::to_string(s.kind) +
                                " partition: " + torsion::to_string(s));
  }
  const int kind = s.kind.side == PartitionSide::One ? 1 : 2;
  const auto runs = residual_runs(rank, s.parts[0]);
  std::vector<Category> cats;
  std::vector<LocalChoice> choice;
  for (const auto& run : runs) {
    cats.push_back(an::category(static_cast<int>(run.size())));
    const Category& cat = cats.back();
    PartPartition local{{VertexSet{}}, s.kind, true};
    for (std::size_t i = 1; i < s.parts.size(); ++i) {
      VertexSet part;
      for (std::size_t j = 0; j < run.size(); ++j) {
        if (s.parts[i].count(run[j])) part.insert(static_cast<Vertex>(j + 1));
      }
      if (part.empty()) continue;
      if (local.parts.size() != i) throw std::logic_error("residual partition skips a stage");
      local.parts.push_back(part);
    }
    const TorsionPair tp = an::assemble(cat, local, TorsionPair{});
    const bool induced = kind == 1 ? an::is_cotilting_induced(cat, tp) : an::is_tilting_induced(cat, tp);
    if (!induced) throw std::logic_error("residual torsion pair has the wrong type");
    choice.push_back({tp, local});
  }
  return build(rank, kind, s.parts[0], runs, cats, choice);
}

PartPartition tube_tp_to_partition(const TubeTorsionPair& p) {
  PartPartition s;
  s.kind = p.kind == 1 ? kStrong1 : kStrong2;
  s.complete = true;
  s.parts.push_back(p.delta);
  s.parts.insert(s.parts.end(), p.residual_partition.begin(), p.residual_partition.end());
  return s;
}

std::vector<TubeTorsionPair> enumerate_tube_tps_by_partitions(int rank) {
  const Quiver q = cyclic_An(rank);
  std::vector<TubeTorsionPair> out;
  for (PartitionKind kind : {kStrong1, kStrong2}) {
    for (const auto& s : enumerate_partitions(q, kind, true)) {
      if (!s.parts[0].empty()) out.push_back(partition_to_tube_tp(rank, s));
    }
  }
  std::sort(out.begin(), out.end(), tube_pair_less);
  return out;
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::Torsion: return "torsion";
    case Membership::Free: return "free";
    case Membership::Neither: return "neither";
  }
  return "?";
}

Membership tube_membership(const TubeTorsionPair& p, const TubeModule& x) {
  validate(x);
  if (x.rank != p.rank) throw std::invalid_argument("tube rank mismatch");
  const bool t = p.torsion.contains(x);
  const bool f = p.free.contains(x);
  if (t && f) throw std::logic_error(to_string(x) + " lies in both classes");
  if (t) return Membership::Torsion;
  if (f) return Membership::Free;
  return Membership::Neither;
}

std::pair<VertexSet, VertexSet> check_L_R(const TubeTorsionPair& p) {
  const VertexSet l = L_R_sets(p.torsion).first;
  const VertexSet r = L_R_sets(p.free).second;
  if (l.empty() && r.empty()) throw std::logic_error("both L_T and R_F are empty");
  return {l, r};
}

CombinedPair combine_components(std::vector<ComponentPair> components) {
  for (const auto& c : components) {
    if (const auto* lin = std::get_if<LinearComponentPair>(&c)) {
      const Category cat = an::category(lin->n);
      const TorsionPair tp{an::to_set(cat, lin->torsion), an::to_set(cat, lin->free)};
      if (Check chk = is_torsion_pair(cat, cat.all(), tp); !chk) {
        throw std::invalid_argument("linear component is not a torsion pair: " + chk.reason);
      }
    }
  }
  return CombinedPair{std::move(components)};
}

Membership combined_membership(const CombinedPair& pair, std::size_t component,
                               const ComponentObject& x) {
  if (component >= pair.components.size()) throw std::out_of_range("no such component");
  const auto& c = pair.components[component];
  if (const auto* lin = std::get_if<LinearComponentPair>(&c)) {
    const auto* iv = std::get_if<an::Interval>(&x);
    if (!iv) throw std::invalid_argument("expected an interval module for a linear component");
    if (iv->a < 1 || iv->b < iv->a || iv->b > lin->n) throw std::invalid_argument("interval out of range");
    if (std::binary_search(lin->torsion.begin(), lin->torsion.end(), *iv)) return Membership::Torsion;
    if (std::binary_search(lin->free.begin(), lin->free.end(), *iv)) return Membership::Free;
    return Membership::Neither;
  }
  const auto* m = std::get_if<TubeModule>(&x);
  if (!m) throw std::invalid_argument("expected a tube module for a tube component");
  return tube_membership(std::get<TubeTorsionPair>(c), *m);
}

std::vector<CombinedPair> enumerate_combined(const std::vector<ComponentSpec>& specs) {
  std::vector<std::vector<ComponentPair>> options;
  std::uint64_t total = 1;
  for (const auto& spec : specs) {
    std::vector<ComponentPair> local;
    if (spec.kind == ComponentSpec::Kind::Linear) {
      const Category cat = an::category(spec.size);
      for (const auto& tp : an::enumerate_torsion_pairs(cat)) {
        local.push_back(LinearComponentPair{spec.size, an::to_intervals(cat, tp.torsion),
                                            an::to_intervals(cat, tp.free)});
      }
    } else {
      for (auto& p : enumerate_tube_tps(spec.size)) local.push_back(std::move(p));
    }
    total *= local.size();
    if (total > 1'000'000) throw std::length_error("too many combined torsion pairs");
    options.push_back(std::move(local));
  }
  std::vector<CombinedPair> out;
  std::vector<ComponentPair> pick;
  std::function<void()> rec = [&]() {
    if (pick.size() == options.size()) {
      out.push_back(CombinedPair{pick});
      return;
    }
    for (const auto& c : options[pick.size()]) {
      pick.push_back(c);
      rec();
      pick.pop_back();
    }
  };
  rec();
  return out;
}

}  // namespace torsion::tube

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "torsion/category.hpp"
#include "torsion/modcat_an.hpp"
#include "torsion/quiver.hpp"
#include "torsion/torsion_core.hpp"

namespace torsion::an {

enum class Side { Left, Right };
enum class StageSource { Projective, Injective };

struct TraceStep {
  int stage = 0;
  VertexSet vertices;
  StageSource source = StageSource::Projective;
  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct DecompositionResult {
  Side side = Side::Left;
  PartPartition partition;
  VertexSet residual_support;
  TorsionPair residual;  // on the modules supported on residual_support
  std::vector<TraceStep> trace;
};

std::string to_string(Side side);

// The quiver Q(support) as a subquiver of linear A_n.
Quiver support_quiver(const Category& cat, const VertexSet& support);

// Peels projectives lying in T (left) or injectives lying in F (right) off
// the support, alternating, until a later stage finds nothing.
DecompositionResult decompose_left(const Category& cat, const TorsionPair& tp);
DecompositionResult decompose_left(const Category& cat, const TorsionPair& tp,
                                   const VertexSet& support);
DecompositionResult decompose_right(const Category& cat, const TorsionPair& tp);
DecompositionResult decompose_right(const Category& cat, const TorsionPair& tp,
                                    const VertexSet& support);

// Rebuilds the torsion pair from a partition (of the side given by its
// kind) and a residual torsion pair on the uncovered vertices.
TorsionPair assemble(const Category& cat, const PartPartition& partition, const TorsionPair& residual);
TorsionPair assemble(const Category& cat, const PartPartition& partition, const TorsionPair& residual,
                     const VertexSet& support);

// (Gen P_0, Gen P_2, ..., T', F', ..., Cogen I_3, Cogen I_1) for a left
// trace, and the mirror for a right trace.
NTorsionPair trace_ntp(const Category& cat, const DecompositionResult& d);

bool residuals_agree(const Category& cat, const TorsionPair& tp);
bool residuals_agree(const Category& cat, const TorsionPair& tp, const VertexSet& support);

TorsionPair partition_to_tp(const Category& cat, const PartPartition& s);
TorsionPair partition_to_tp(const Category& cat, const PartPartition& s, const VertexSet& support);
PartPartition tp_to_partition(const Category& cat, const TorsionPair& tp);
PartPartition tp_to_partition(const Category& cat, const TorsionPair& tp, const VertexSet& support);

// All torsion pairs on the modules supported on support, via partitions.
std::vector<TorsionPair> enumerate_torsion_pairs(const Category& cat);
std::vector<TorsionPair> enumerate_torsion_pairs(const Category& cat, const VertexSet& support);

std::uint64_t catalan(int k);
std::uint64_t count_torsion_pairs(int n);

struct CountReport {
  int n = 0;
  std::uint64_t formula = 0;
  std::uint64_t partitions = 0;
  std::optional<std::uint64_t> bruteforce;  // absent when n exceeds the bound
  bool agree() const {
    return formula == partitions && (!bruteforce || *bruteforce == formula);
  }
};
CountReport verify_count(int n, int bound = 6);

// Minimal generators: members of T that are not proper quotients of other
// members, and members of F that are not proper submodules of other members.
std::pair<ObjectSet, ObjectSet> generators(const Category& cat, const TorsionPair& tp);

// Injectives of K Q(support) lie in T; cross-checked against the left
// partition containing the first vertex of each component in its first part.
bool is_tilting_induced(const Category& cat, const TorsionPair& tp);
bool is_tilting_induced(const Category& cat, const TorsionPair& tp, const VertexSet& support);
bool is_cotilting_induced(const Category& cat, const TorsionPair& tp);
bool is_cotilting_induced(const Category& cat, const TorsionPair& tp, const VertexSet& support);

}  // namespace torsion::an

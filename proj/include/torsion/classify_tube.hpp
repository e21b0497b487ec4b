#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "torsion/classify_an.hpp"
#include "torsion/modcat_an.hpp"
#include "torsion/modcat_tube.hpp"
#include "torsion/quiver.hpp"

namespace torsion::tube {

// Nontrivial torsion pair on a tube. Kind 1: T = Coray(delta) plus a finite
// part, F finite. Kind 2: T finite, F = Ray(delta) plus a finite part. The
// finite parts come from a torsion pair on the A-type residual quiver.
struct TubeTorsionPair {
  int rank = 1;
  int kind = 1;
  VertexSet delta;
  std::vector<VertexSet> residual_partition;  // Delta_1, ..., Delta_m
  TubeSubcatDescriptor torsion;
  TubeSubcatDescriptor free;

  friend bool operator==(const TubeTorsionPair&, const TubeTorsionPair&) = default;
};

bool tube_pair_less(const TubeTorsionPair& a, const TubeTorsionPair& b);
std::string to_string(const TubeTorsionPair& p);

// Components of the residual quiver, each listed along the arrows.
std::vector<std::vector<Vertex>> residual_runs(int rank, const VertexSet& delta);

std::vector<TubeTorsionPair> enumerate_tube_tps(int rank);
std::vector<TubeTorsionPair> enumerate_tube_tps_by_partitions(int rank);
// Strong partition of the cyclic quiver with nonempty first part; a strong
// 1-type partition gives kind 1, a strong 2-type partition kind 2.
TubeTorsionPair partition_to_tube_tp(int rank, const PartPartition& s);
PartPartition tube_tp_to_partition(const TubeTorsionPair& p);

enum class Membership { Torsion, Free, Neither };
std::string to_string(Membership m);

Membership tube_membership(const TubeTorsionPair& p, const TubeModule& x);

// (L_T, R_F); throws std::logic_error if both are empty.
std::pair<VertexSet, VertexSet> check_L_R(const TubeTorsionPair& p);

// Torsion pairs on a category that splits into linear A and tube blocks.
struct LinearComponentPair {
  int n = 1;
  std::vector<an::Interval> torsion;  // sorted
  std::vector<an::Interval> free;     // sorted
  friend bool operator==(const LinearComponentPair&, const LinearComponentPair&) = default;
};
using ComponentPair = std::variant<LinearComponentPair, TubeTorsionPair>;
using ComponentObject = std::variant<an::Interval, TubeModule>;

struct CombinedPair {
  std::vector<ComponentPair> components;
};

struct ComponentSpec {
  enum class Kind { Linear, Tube };
  Kind kind = Kind::Linear;
  int size = 1;
};

CombinedPair combine_components(std::vector<ComponentPair> components);
Membership combined_membership(const CombinedPair& pair, std::size_t component,
                               const ComponentObject& x);
// Cartesian product of the per-component classifications.
std::vector<CombinedPair> enumerate_combined(const std::vector<ComponentSpec>& specs);

}  // namespace torsion::tube

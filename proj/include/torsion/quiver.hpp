#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace torsion {

using Vertex = int;
using VertexSet = std::set<Vertex>;
using Arrow = std::pair<Vertex, Vertex>;

enum class QuiverShape { LinearA, CyclicA, DisjointLinearA };

class Quiver {
 public:
  Quiver() = default;
  Quiver(QuiverShape shape, VertexSet vertices, std::vector<Arrow> arrows);

  QuiverShape shape() const { return shape_; }
  const VertexSet& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t size() const { return vertices_.size(); }
  bool contains(Vertex v) const { return vertices_.count(v) != 0; }

  VertexSet successors(Vertex v) const;
  VertexSet predecessors(Vertex v) const;
  // A vertex carrying a loop is neither a sink nor a source.
  VertexSet sinks() const;
  VertexSet sources() const;
  bool acyclic() const;

  // Connected components listed along the arrows; only for quivers whose
  // vertices have in- and out-degree at most one and no oriented cycle.
  std::vector<std::vector<Vertex>> linear_components() const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  QuiverShape shape_ = QuiverShape::DisjointLinearA;
  VertexSet vertices_;
  std::vector<Arrow> arrows_;
};

Quiver linear_An(int n);
Quiver cyclic_An(int n);
Quiver subquiver(const Quiver& q, const VertexSet& keep);
bool path_exists(const Quiver& q, const VertexSet& from, const VertexSet& to);

std::string to_string(QuiverShape shape);

enum class PartitionSide { One, Two };

struct PartitionKind {
  PartitionSide side = PartitionSide::One;
  bool strong = true;
  friend bool operator==(const PartitionKind&, const PartitionKind&) = default;
};

inline constexpr PartitionKind kStrong1{PartitionSide::One, true};
inline constexpr PartitionKind kStrong2{PartitionSide::Two, true};
inline constexpr PartitionKind kPlain1{PartitionSide::One, false};
inline constexpr PartitionKind kPlain2{PartitionSide::Two, false};

std::string to_string(PartitionKind kind);
PartitionKind partition_kind_from_string(const std::string& s);

// Ordered sequence of disjoint vertex sets; parts[0] may be empty, later
// parts may not.
struct PartPartition {
  std::vector<VertexSet> parts;
  PartitionKind kind;
  bool complete = false;
  friend bool operator==(const PartPartition&, const PartPartition&) = default;
};

bool partition_less(const PartPartition& a, const PartPartition& b);
std::string to_string(const PartPartition& p);

// Throws std::invalid_argument when parts overlap, leave the vertex set, or a
// part after the first is empty. Returns whether the kind conditions hold
// and the complete flag matches the union.
bool validate_partition(const Quiver& q, const PartPartition& s);

// complete == true: only partitions covering every vertex.
// complete == false: every valid partition, each flagged accurately.
std::vector<PartPartition> enumerate_partitions(const Quiver& q, PartitionKind kind,
                                                bool complete);

}  // namespace torsion

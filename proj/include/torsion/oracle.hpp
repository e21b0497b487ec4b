#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "torsion/category.hpp"
#include "torsion/modcat_an.hpp"
#include "torsion/modcat_tube.hpp"
#include "torsion/quiver.hpp"
#include "torsion/torsion_core.hpp"

namespace torsion::oracle {

// Quiver representation with integer structure maps; maps[k] belongs to the
// k-th arrow of the quiver and has dims[target] rows, dims[source] columns.
struct Representation {
  std::map<Vertex, int> dims;
  std::vector<std::vector<std::vector<int>>> maps;
};

Representation interval_representation(const Quiver& q, an::Interval x);
Representation tube_representation(const Quiver& cyclic, const tube::TubeModule& x);

// dim Hom(X, Y) as the nullity of the commutativity equations, over Q.
int hom_dim_matrix(const Quiver& q, const Representation& x, const Representation& y);
int hom_dim_matrix(const Quiver& q, an::Interval x, an::Interval y);
int hom_dim_matrix(const tube::TubeModule& x, const tube::TubeModule& y);

// Sum d_i e_i minus the sum over arrows i -> j of d_i e_j; vectors follow
// the vertex order of q. Rejects quivers with oriented cycles.
int euler_form(const std::vector<int>& d, const std::vector<int>& e, const Quiver& q);
// The same bilinear form without the acyclicity requirement.
int ringel_form(const std::vector<int>& d, const std::vector<int>& e, const Quiver& q);

enum class Execution { Serial, Parallel };

// Quotient-closed subsets of a finite model: one length prefix per top.
struct QuotientClosedCandidates {
  std::vector<std::vector<ObjectId>> by_top;  // each sorted by length
  std::uint64_t count() const;
  ObjectSet at(std::uint64_t index) const;
};
QuotientClosedCandidates quotient_closed_candidates(const Category& cat);

// Every torsion pair on K(linear A_n)-mod, by exhaustive search over
// quotient-closed subsets. Throws std::length_error when n > bound.
std::vector<TorsionPair> enumerate_torsion_pairs_bruteforce(int n, int bound = 6,
                                                            Execution exec = Execution::Serial);

// Every torsion pair on an arbitrary subset of a model, by subset search.
std::vector<TorsionPair> torsion_pairs_on(const Category& cat, ObjectSet ambient);

// Torsion pairs of the tube truncated at cap: (T, T^perp) with T quotient
// and extension closed inside the model and canonical sequences for every
// module of length below cap.
std::vector<TorsionPair> bruteforce_tube_truncated(int rank, int cap,
                                                   Execution exec = Execution::Serial);
// Torsion classes at the largest cap whose restriction to every smaller cap
// is again a truncated torsion class there.
std::vector<ObjectSet> stable_tube_torsion_classes(int rank, const std::vector<int>& caps,
                                                   Execution exec = Execution::Serial);

Check check_tube_tp_truncated(const tube::Predicate& torsion, const tube::Predicate& free, int rank,
                              int cap);
Check check_tube_tp_truncated(const tube::TubeSubcatDescriptor& torsion,
                              const tube::TubeSubcatDescriptor& free, int cap);

}  // namespace torsion::oracle

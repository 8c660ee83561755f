#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "weiltate/perm_group.hpp"

namespace weiltate {

/// Partition of {0..2g-1} into the orbits of the decomposition subgroup,
/// sorted by smallest member.
struct BlockPartition {
  std::vector<IndexSet> blocks;
  std::vector<int> block_of;  // point -> block index

  std::size_t size() const { return blocks.size(); }
};

/// Galois group of the normal closure acting on the 2g eigenvalue indices.
///
/// Invariants enforced at construction: the action is transitive, tau lies in
/// the group, is central and maps i to i+g mod 2g. Immutable; copies share the
/// underlying group.
class CMGaloisModel {
 public:
  static CMGaloisModel create(int points, std::vector<Permutation> generators, const Permutation& tau,
                              std::size_t cap = kDefaultGroupCap);

  /// Same model with decomposition subgroup generated by `gens`.
  CMGaloisModel with_decomposition(const std::vector<Permutation>& gens) const;
  CMGaloisModel with_decomposition(const Subgroup& d) const;

  int g() const { return points_ / 2; }
  int points() const { return points_; }
  const PermGroup& group() const { return *group_; }
  const Permutation& tau() const { return tau_; }
  std::size_t tau_index() const { return tau_index_; }
  int tau_of(int i) const { return (i + g()) % points_; }
  IndexSet tau_of(IndexSet s) const { return tau_.apply(s); }
  IndexSet all_points() const { return IndexSet::range(0, points_); }

  /// Stabilizer of the first point.
  const Subgroup& stabilizer() const { return *h_; }
  bool has_decomposition() const { return d_ != nullptr; }
  /// Throws HypothesisError when unset.
  const Subgroup& decomposition() const;
  const std::vector<Permutation>& decomposition_generators() const { return d_gens_; }
  const BlockPartition& blocks() const;

 private:
  int points_ = 0;
  std::shared_ptr<const PermGroup> group_;
  Permutation tau_;
  std::size_t tau_index_ = 0;
  std::shared_ptr<const Subgroup> h_;
  std::shared_ptr<const Subgroup> d_;
  std::vector<Permutation> d_gens_;
  std::shared_ptr<const BlockPartition> blocks_;
};

/// mu_2 x S_g on 2g points: (eps, sigma) maps i to sigma(i), shifted by g when
/// eps = -1. Generators in order: tau = (-1, id), (+1, (1 2)), (+1, (1 ... g)).
CMGaloisModel cm_product_group(int g, std::size_t cap = kDefaultGroupCap);

/// Orbit of I under the group, deduplicated and sorted lexicographically.
std::vector<IndexSet> orbit_of_subset(const CMGaloisModel& model, IndexSet subset);

/// Orbits of D on the points, sorted by smallest member.
BlockPartition blocks_of_subgroup(const CMGaloisModel& model, const Subgroup& d);

}  // namespace weiltate

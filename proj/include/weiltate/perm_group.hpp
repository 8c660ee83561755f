#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "weiltate/permutation.hpp"

namespace weiltate {

inline constexpr std::size_t kDefaultGroupCap = 1'000'000;

/// A finite permutation group materialized as its full element list.
///
/// Elements are ordered breadth-first from the identity, trying generators in
/// the given order; element 0 is always the identity.
class PermGroup {
 public:
  /// Throws CapExceeded if the closure grows beyond `cap` elements.
  static PermGroup build(int n, std::vector<Permutation> generators,
                         std::size_t cap = kDefaultGroupCap);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Permutation>& generators() const { return generators_; }

  std::optional<std::size_t> index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }
  /// Index of elements[a] * elements[b].
  std::size_t multiply(std::size_t a, std::size_t b) const;

  /// BFS tree: elements[i] = generators[via(i)] * elements[parent(i)] for i > 0.
  std::size_t parent(std::size_t i) const { return parent_[i]; }
  std::size_t via(std::size_t i) const { return via_[i]; }

 private:
  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> via_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// A subgroup of a PermGroup, stored as sorted element indices of the parent.
class Subgroup {
 public:
  Subgroup() = default;

  /// Verifies the subgroup axioms; throws HypothesisError otherwise.
  static Subgroup from_indices(const PermGroup& group, std::vector<std::size_t> members);
  static Subgroup from_permutations(const PermGroup& group, const std::vector<Permutation>& members);
  /// Closure of the given elements inside `group`.
  static Subgroup generated_by(const PermGroup& group, const std::vector<std::size_t>& gens);
  static Subgroup generated_by(const PermGroup& group, const std::vector<Permutation>& gens);
  static Subgroup whole(const PermGroup& group);
  static Subgroup trivial(const PermGroup& group);
  /// {sigma : sigma(point) = point}
  static Subgroup stabilizer(const PermGroup& group, int point);

  std::size_t order() const { return members_.size(); }
  const std::vector<std::size_t>& members() const { return members_; }
  bool contains(std::size_t element) const { return element < mask_.size() && mask_[element]; }
  bool is_subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  std::vector<std::size_t> members_;
  std::vector<bool> mask_;
};

/// All Z with H <= Z <= G and [G:Z] = 2, found by enumerating sign
/// assignments on the generators of G and keeping the ones that extend to a
/// homomorphism G -> {+1,-1}. Order follows the assignment bit pattern.
std::vector<Subgroup> index2_overgroups(const PermGroup& group, const Subgroup& h);

}  // namespace weiltate

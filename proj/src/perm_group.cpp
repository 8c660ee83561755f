#include "weiltate/perm_group.hpp"

#include <algorithm>
#include <deque>

#include "weiltate/errors.hpp"

namespace weiltate {

namespace {

std::string key_of(const Permutation& p) {
  const auto& im = p.images();
  return std::string(im.begin(), im.end());
}

}  // namespace

PermGroup PermGroup::build(int n, std::vector<Permutation> generators, std::size_t cap) {
  if (n < 1 || n > kMaxPoints) throw HypothesisError("group degree out of range");
  for (const auto& g : generators) {
    if (g.degree() != n) throw HypothesisError("generator " + g.to_cycles() + " has wrong degree");
  }
  PermGroup group;
  group.degree_ = n;
  group.generators_ = std::move(generators);
  Permutation id = Permutation::identity(n);
  group.elements_.push_back(id);
  group.parent_.push_back(0);
  group.via_.push_back(0);
  group.index_.emplace(key_of(id), 0);
  for (std::size_t head = 0; head < group.elements_.size(); ++head) {
    for (std::size_t k = 0; k < group.generators_.size(); ++k) {
      Permutation next = group.generators_[k] * group.elements_[head];
      auto [it, inserted] = group.index_.emplace(key_of(next), group.elements_.size());
      if (!inserted) continue;
      if (group.elements_.size() >= cap) {
        throw CapExceeded("group order exceeds cap " + std::to_string(cap));
      }
      group.elements_.push_back(std::move(next));
      group.parent_.push_back(head);
      group.via_.push_back(k);
    }
  }
  return group;
}

std::optional<std::size_t> PermGroup::index_of(const Permutation& p) const {
  if (p.degree() != degree_) return std::nullopt;
  auto it = index_.find(key_of(p));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t PermGroup::multiply(std::size_t a, std::size_t b) const {
  return *index_of(elements_[a] * elements_[b]);
}

Subgroup Subgroup::generated_by(const PermGroup& group, const std::vector<std::size_t>& gens) {
  Subgroup s;
  s.mask_.assign(group.order(), false);
  std::vector<std::size_t> found{0};
  s.mask_[0] = true;
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (std::size_t g : gens) {
      std::size_t next = group.multiply(g, found[head]);
      if (!s.mask_[next]) {
        s.mask_[next] = true;
        found.push_back(next);
      }
    }
  }
  std::sort(found.begin(), found.end());
  s.members_ = std::move(found);
  return s;
}

Subgroup Subgroup::generated_by(const PermGroup& group, const std::vector<Permutation>& gens) {
  std::vector<std::size_t> idx;
  for (const auto& g : gens) {
    auto i = group.index_of(g);
    if (!i) throw HypothesisError("element " + g.to_cycles() + " is not in the group");
    idx.push_back(*i);
  }
  return generated_by(group, idx);
}

Subgroup Subgroup::from_indices(const PermGroup& group, std::vector<std::size_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) throw HypothesisError("empty set is not a subgroup");
  std::vector<bool> mask(group.order(), false);
  for (auto m : members) {
    if (m >= group.order()) throw HypothesisError("element index out of range");
    mask[m] = true;
  }
  // Grow a generating set greedily; the set is a subgroup iff every partial
  // closure stays inside it and the final closure covers it.
  std::vector<std::size_t> gens;
  Subgroup closure = generated_by(group, gens);
  for (auto m : members) {
    if (closure.contains(m)) continue;
    gens.push_back(m);
    closure = generated_by(group, gens);
    for (auto c : closure.members_) {
      if (!mask[c]) throw HypothesisError("element set is not closed under composition");
    }
  }
  if (closure.order() != members.size()) throw HypothesisError("element set is not a subgroup");
  return closure;
}

Subgroup Subgroup::from_permutations(const PermGroup& group, const std::vector<Permutation>& members) {
  std::vector<std::size_t> idx;
  for (const auto& p : members) {
    auto i = group.index_of(p);
    if (!i) throw HypothesisError("element " + p.to_cycles() + " is not in the group");
    idx.push_back(*i);
  }
  return from_indices(group, std::move(idx));
}

Subgroup Subgroup::whole(const PermGroup& group) {
  Subgroup s;
  s.mask_.assign(group.order(), true);
  s.members_.resize(group.order());
  for (std::size_t i = 0; i < group.order(); ++i) s.members_[i] = i;
  return s;
}

Subgroup Subgroup::trivial(const PermGroup& group) { return generated_by(group, std::vector<std::size_t>{}); }

Subgroup Subgroup::stabilizer(const PermGroup& group, int point) {
  Subgroup s;
  s.mask_.assign(group.order(), false);
  for (std::size_t i = 0; i < group.order(); ++i) {
    if (group.element(i)(point) == point) {
      s.mask_[i] = true;
      s.members_.push_back(i);
    }
  }
  return s;
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::all_of(members_.begin(), members_.end(), [&](std::size_t m) { return other.contains(m); });
}

std::vector<Subgroup> index2_overgroups(const PermGroup& group, const Subgroup& h) {
  const std::size_t k = group.generators().size();
  if (k > 20) throw CapExceeded("too many generators for sign enumeration");
  std::vector<std::size_t> gen_index(k);
  for (std::size_t j = 0; j < k; ++j) gen_index[j] = *group.index_of(group.generators()[j]);

  std::vector<Subgroup> out;
  std::vector<int> sign(group.order());
  for (std::uint32_t assignment = 1; assignment < (1u << k); ++assignment) {
    sign[0] = 1;
    for (std::size_t i = 1; i < group.order(); ++i) {
      int s = (assignment >> group.via(i)) & 1u ? -1 : 1;
      sign[i] = s * sign[group.parent(i)];
    }
    bool hom = true;
    for (std::size_t j = 0; j < k && hom; ++j) {
      int sj = (assignment >> j) & 1u ? -1 : 1;
      for (std::size_t i = 0; i < group.order(); ++i) {
        if (sign[group.multiply(gen_index[j], i)] != sj * sign[i]) {
          hom = false;
          break;
        }
      }
    }
    if (!hom) continue;
    bool contains_h = std::all_of(h.members().begin(), h.members().end(),
                                  [&](std::size_t m) { return sign[m] == 1; });
    if (!contains_h) continue;
    std::vector<std::size_t> kernel;
    for (std::size_t i = 0; i < group.order(); ++i) {
      if (sign[i] == 1) kernel.push_back(i);
    }
    out.push_back(Subgroup::from_indices(group, std::move(kernel)));
  }
  return out;
}

}  // namespace weiltate

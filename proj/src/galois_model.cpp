#include "weiltate/galois_model.hpp"

#include <algorithm>
#include <set>

#include "weiltate/errors.hpp"

namespace weiltate {

namespace {

IndexSet orbit_of_point(const std::vector<Permutation>& gens, int point) {
  IndexSet seen;
  seen.insert(point);
  std::vector<int> queue{point};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : gens) {
      int next = g(queue[head]);
      if (!seen.contains(next)) {
        seen.insert(next);
        queue.push_back(next);
      }
    }
  }
  return seen;
}

}  // namespace

CMGaloisModel CMGaloisModel::create(int points, std::vector<Permutation> generators, const Permutation& tau,
                                    std::size_t cap) {
  if (points < 2 || points % 2 != 0) throw HypothesisError("number of points must be even and >= 2");
  if (points > kMaxPoints) throw CapExceeded("number of points exceeds " + std::to_string(kMaxPoints));
  if (tau.degree() != points) throw HypothesisError("tau has wrong degree");
  const int g = points / 2;
  for (int i = 0; i < points; ++i) {
    if (tau(i) != (i + g) % points) {
      throw HypothesisError("tau must map i to i+g mod 2g; relabel the points");
    }
  }
  for (const auto& s : generators) {
    if (s.degree() != points) throw HypothesisError("generator " + s.to_cycles() + " has wrong degree");
    if (s * tau != tau * s) throw HypothesisError("tau does not commute with " + s.to_cycles());
  }
  if (orbit_of_point(generators, 0) != IndexSet::range(0, points)) {
    throw HypothesisError("group does not act transitively");
  }

  CMGaloisModel model;
  model.points_ = points;
  auto group = std::make_shared<PermGroup>(PermGroup::build(points, std::move(generators), cap));
  auto ti = group->index_of(tau);
  if (!ti) throw HypothesisError("tau is not an element of the group");
  model.tau_ = tau;
  model.tau_index_ = *ti;
  model.h_ = std::make_shared<Subgroup>(Subgroup::stabilizer(*group, 0));
  model.group_ = std::move(group);
  return model;
}

CMGaloisModel CMGaloisModel::with_decomposition(const std::vector<Permutation>& gens) const {
  CMGaloisModel m = with_decomposition(Subgroup::generated_by(*group_, gens));
  m.d_gens_ = gens;
  return m;
}

CMGaloisModel CMGaloisModel::with_decomposition(const Subgroup& d) const {
  CMGaloisModel m = *this;
  m.d_ = std::make_shared<Subgroup>(d);
  m.d_gens_.clear();
  auto blocks = std::make_shared<BlockPartition>(blocks_of_subgroup(m, d));
  for (const auto& b : blocks->blocks) {
    IndexSet image = tau_of(b);
    bool is_block = std::find(blocks->blocks.begin(), blocks->blocks.end(), image) != blocks->blocks.end();
    if (!is_block) throw HypothesisError("tau does not permute the decomposition blocks");
  }
  m.blocks_ = std::move(blocks);
  return m;
}

const Subgroup& CMGaloisModel::decomposition() const {
  if (!d_) throw HypothesisError("decomposition subgroup is not set");
  return *d_;
}

const BlockPartition& CMGaloisModel::blocks() const {
  if (!blocks_) throw HypothesisError("decomposition subgroup is not set");
  return *blocks_;
}

CMGaloisModel cm_product_group(int g, std::size_t cap) {
  if (g < 2) throw HypothesisError("g must be at least 2");
  if (2 * g > kMaxPoints) throw CapExceeded("2g exceeds " + std::to_string(kMaxPoints));
  const int n = 2 * g;
  auto lift = [&](const std::vector<int>& sigma) {
    std::vector<Point> images(static_cast<std::size_t>(n));
    for (int i = 0; i < g; ++i) {
      images[static_cast<std::size_t>(i)] = static_cast<Point>(sigma[static_cast<std::size_t>(i)]);
      images[static_cast<std::size_t>(i + g)] = static_cast<Point>(sigma[static_cast<std::size_t>(i)] + g);
    }
    return Permutation(std::move(images));
  };
  std::vector<int> transposition(static_cast<std::size_t>(g)), cycle(static_cast<std::size_t>(g));
  for (int i = 0; i < g; ++i) {
    transposition[static_cast<std::size_t>(i)] = i;
    cycle[static_cast<std::size_t>(i)] = (i + 1) % g;
  }
  std::swap(transposition[0], transposition[1]);
  std::vector<Point> tau_images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) tau_images[static_cast<std::size_t>(i)] = static_cast<Point>((i + g) % n);
  Permutation tau(std::move(tau_images));
  return CMGaloisModel::create(n, {tau, lift(transposition), lift(cycle)}, tau, cap);
}

std::vector<IndexSet> orbit_of_subset(const CMGaloisModel& model, IndexSet subset) {
  const auto& gens = model.group().generators();
  std::set<std::uint32_t> seen{subset.bits()};
  std::vector<IndexSet> queue{subset};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : gens) {
      IndexSet next = g.apply(queue[head]);
      if (seen.insert(next.bits()).second) queue.push_back(next);
    }
  }
  std::sort(queue.begin(), queue.end(), lex_less);
  return queue;
}

BlockPartition blocks_of_subgroup(const CMGaloisModel& model, const Subgroup& d) {
  const auto& group = model.group();
  BlockPartition part;
  part.block_of.assign(static_cast<std::size_t>(model.points()), -1);
  for (int i = 0; i < model.points(); ++i) {
    if (part.block_of[static_cast<std::size_t>(i)] >= 0) continue;
    IndexSet block;
    for (auto m : d.members()) block.insert(group.element(m)(i));
    for (int p : block.to_vector()) part.block_of[static_cast<std::size_t>(p)] = static_cast<int>(part.blocks.size());
    part.blocks.push_back(block);
  }
  return part;
}

}  // namespace weiltate

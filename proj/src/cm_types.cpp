#include "weiltate/cm_types.hpp"

#include <algorithm>

#include "weiltate/errors.hpp"

namespace weiltate {

void validate_cm_type(const CMGaloisModel& model, IndexSet phi) {
  IndexSet conj = model.tau_of(phi);
  if (!(phi & conj).empty() || (phi | conj) != model.all_points()) {
    throw HypothesisError("invalid CM-type " + phi.to_string() + ": phi and tau(phi) must partition the points");
  }
}

void validate_prescription(const CMGaloisModel& model, const PlacePrescription& prescription) {
  const auto& part = model.blocks();
  if (prescription.targets.size() != part.size()) {
    throw HypothesisError("prescription has " + std::to_string(prescription.targets.size()) + " targets for " +
                          std::to_string(part.size()) + " blocks");
  }
  for (std::size_t b = 0; b < part.size(); ++b) {
    const int size = part.blocks[b].size();
    const int n = prescription.targets[b];
    if (n < 0 || n > size) throw HypothesisError("target out of range for block " + part.blocks[b].to_string());
    const auto conj = static_cast<std::size_t>(part.block_of[static_cast<std::size_t>(model.tau_of(part.blocks[b].min()))]);
    if (n + prescription.targets[conj] != size) {
      throw HypothesisError("no CM-type exists: targets of block " + part.blocks[b].to_string() +
                            " and its conjugate do not add up to the block size");
    }
  }
}

PlacePrescription measure_prescription(const CMGaloisModel& model, IndexSet phi) {
  PlacePrescription out;
  for (const auto& b : model.blocks().blocks) out.targets.push_back((b & phi).size());
  return out;
}

namespace {

struct Enumerator {
  const CMGaloisModel& model;
  const std::vector<int>& targets;
  std::vector<int> count;
  std::vector<int> open;  // undecided points per block
  std::optional<std::size_t> limit;
  std::size_t cap;
  std::vector<IndexSet> out;

  bool full() const { return limit && out.size() >= *limit; }

  bool feasible(int block) const {
    const auto b = static_cast<std::size_t>(block);
    return count[b] <= targets[b] && count[b] + open[b] >= targets[b];
  }

  void run(int i, IndexSet phi) {
    if (full()) return;
    const int g = model.g();
    if (i == g) {
      if (!limit && out.size() >= cap) throw CapExceeded("more than " + std::to_string(cap) + " CM-types");
      out.push_back(phi);
      return;
    }
    const auto& block_of = model.blocks().block_of;
    const int bi = block_of[static_cast<std::size_t>(i)];
    const int bj = block_of[static_cast<std::size_t>(i + g)];
    --open[static_cast<std::size_t>(bi)];
    --open[static_cast<std::size_t>(bj)];
    for (int chosen : {i, i + g}) {
      const int b = block_of[static_cast<std::size_t>(chosen)];
      ++count[static_cast<std::size_t>(b)];
      if (feasible(bi) && feasible(bj)) {
        IndexSet next = phi;
        next.insert(chosen);
        run(i + 1, next);
      }
      --count[static_cast<std::size_t>(b)];
    }
    ++open[static_cast<std::size_t>(bi)];
    ++open[static_cast<std::size_t>(bj)];
  }
};

}  // namespace

std::vector<IndexSet> enumerate_cm_types(const CMGaloisModel& model, const PlacePrescription& prescription,
                                         std::optional<std::size_t> limit, std::size_t cap) {
  validate_prescription(model, prescription);
  const auto& part = model.blocks();
  Enumerator e{model, prescription.targets, std::vector<int>(part.size(), 0), {}, limit, cap, {}};
  for (const auto& b : part.blocks) e.open.push_back(b.size());
  e.run(0, IndexSet());
  return e.out;
}

HodgeType hodge_type(const CMGaloisModel& model, IndexSet phi, IndexSet subset) {
  validate_cm_type(model, phi);
  return {(subset & phi).size(), (subset & model.tau_of(phi)).size()};
}

}  // namespace weiltate

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "weiltate/galois_model.hpp"

namespace weiltate {

inline constexpr std::size_t kDefaultCmTypeCap = 1'000'000;

/// Throws HypothesisError unless phi and tau(phi) partition all points.
void validate_cm_type(const CMGaloisModel& model, IndexSet phi);

/// Required |phi ∩ B| for every decomposition block, in block order.
struct PlacePrescription {
  std::vector<int> targets;
};

/// Throws HypothesisError ("no CM-type exists") when n_v + n_{tau v} != |B_v|
/// or a target is out of range.
void validate_prescription(const CMGaloisModel& model, const PlacePrescription& prescription);

/// Per-block counts |phi ∩ B|.
PlacePrescription measure_prescription(const CMGaloisModel& model, IndexSet phi);

/// All CM-types meeting the prescription in lexicographic order of their
/// sorted index lists. With no limit, more than `cap` results throw
/// CapExceeded.
std::vector<IndexSet> enumerate_cm_types(const CMGaloisModel& model, const PlacePrescription& prescription,
                                         std::optional<std::size_t> limit = std::nullopt,
                                         std::size_t cap = kDefaultCmTypeCap);

struct HodgeType {
  int p = 0;
  int q = 0;
  friend bool operator==(const HodgeType&, const HodgeType&) = default;
};

/// (|I ∩ phi|, |I ∩ tau phi|)
HodgeType hodge_type(const CMGaloisModel& model, IndexSet phi, IndexSet subset);

inline bool is_balanced(HodgeType t) { return t.p == t.q; }

}  // namespace weiltate

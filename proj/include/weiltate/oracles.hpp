#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weiltate/galois_model.hpp"
#include "weiltate/slopes.hpp"

namespace weiltate {

/// Brute-force slope fixer straight from the definition, O(|G|^2), with
/// exact rational comparisons.
std::vector<std::size_t> oracle_fixer(const CMGaloisModel& model, const SlopeVector& s);

/// Decides p-potential membership by grouping valuations: valuations of the
/// closure are the cosets hD with w_h(pi) = s_{h^-1(1)}; two valuations lie
/// over the same valuation of the fixed field of Z when they are related by
/// Z on the left. Membership holds iff w(pi) is constant on every such fiber.
bool oracle_potentially_in(const CMGaloisModel& model, const SlopeVector& s, const Subgroup& z);

/// Random admissible slopes on cm_product_group(g) style models: s_i drawn
/// from {0, 1/d, ..., 1} for i < g with d in 1..4, and s_{i+g} = 1 - s_i.
SlopeVector random_admissible_slopes(const CMGaloisModel& model, std::uint64_t seed);

/// Subgroups containing H used to exercise p-potential membership: H, G,
/// every index-2 overgroup of H and every <H, x> for x in G.
std::vector<Subgroup> overgroups_of_stabilizer(const CMGaloisModel& model);

struct OracleMismatch {
  std::string instance;
  std::string check;
  std::string detail;
};

struct OracleSummary {
  std::size_t instances = 0;
  std::size_t comparisons = 0;
  std::vector<OracleMismatch> mismatches;
};

/// Compares fix_of_slope, is_p_potentially_in and minimal_field_index with
/// the oracles above on one instance, appending to `summary`.
void compare_with_oracles(const std::string& name, const CMGaloisModel& model, const SlopeVector& s,
                          OracleSummary& summary);

}  // namespace weiltate

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weiltate/galois_model.hpp"
#include "weiltate/rational.hpp"

namespace weiltate {

/// s_i = v(pi_i) / v(q) for each eigenvalue index, in index order.
struct SlopeVector {
  std::vector<BigRational> values;

  std::size_t size() const { return values.size(); }
  const BigRational& operator[](int i) const { return values[static_cast<std::size_t>(i)]; }
  friend bool operator==(const SlopeVector&, const SlopeVector&) = default;
};

SlopeVector constant_slopes(int points, const BigRational& value);

/// Throws HypothesisError unless 0 <= s_i <= 1 and s_i + s_{tau i} = 1; when
/// the model has a decomposition subgroup, also requires s constant on every
/// block B with s * |B| integral.
void validate_slopes(const CMGaloisModel& model, const SlopeVector& s);

/// s_i = |phi ∩ B(i)| / |B(i)|.
SlopeVector slopes_from_cm_type(const CMGaloisModel& model, IndexSet phi);

/// Slopes scaled by a common denominator, with the distinct rows
/// h -> (N * s_{h(i)})_i over all group elements h.
struct SlopeTable {
  std::int64_t denom = 1;
  std::vector<std::int64_t> scaled;                 // N * s_i
  std::vector<std::vector<std::int64_t>> rows;      // sorted, distinct
};

SlopeTable slope_table(const CMGaloisModel& model, const SlopeVector& s);

/// {sigma : s_{h sigma(1)} = s_{h(1)} for all h}
Subgroup fix_of_slope(const CMGaloisModel& model, const SlopeVector& s);

/// Z ⊆ fix_of_slope(s). Throws HypothesisError unless H ⊆ Z.
bool is_p_potentially_in(const CMGaloisModel& model, const SlopeVector& s, const Subgroup& z);

/// [G : fix_of_slope(s)], the degree of the field generated by large powers
/// of the Weil number.
std::size_t minimal_field_index(const CMGaloisModel& model, const SlopeVector& s);

/// dim span_Q {(s_{h(i)})_h : i} - 1
int frobenius_rank(const CMGaloisModel& model, const SlopeVector& s);

/// Rank over Q of an integer matrix given by rows.
int rational_rank(const std::vector<std::vector<std::int64_t>>& rows);

std::vector<std::string> slopes_to_strings(const SlopeVector& s);

}  // namespace weiltate

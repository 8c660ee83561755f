#include "weiltate/slopes.hpp"

#include <algorithm>
#include <set>

#include "weiltate/cm_types.hpp"
#include "weiltate/errors.hpp"

namespace weiltate {

SlopeVector constant_slopes(int points, const BigRational& value) {
  return SlopeVector{std::vector<BigRational>(static_cast<std::size_t>(points), value)};
}

void validate_slopes(const CMGaloisModel& model, const SlopeVector& s) {
  if (static_cast<int>(s.size()) != model.points()) {
    throw HypothesisError("slope vector has " + std::to_string(s.size()) + " entries, expected " +
                          std::to_string(model.points()));
  }
  for (int i = 0; i < model.points(); ++i) {
    if (s[i] < 0 || s[i] > 1) throw HypothesisError("slope " + to_string(s[i]) + " outside [0, 1]");
    if (s[i] + s[model.tau_of(i)] != 1) {
      throw HypothesisError("slopes at " + std::to_string(i + 1) + " and " + std::to_string(model.tau_of(i) + 1) +
                            " do not add up to 1");
    }
  }
  if (!model.has_decomposition()) return;
  for (const auto& b : model.blocks().blocks) {
    const BigRational& v = s[b.min()];
    for (int i : b.to_vector()) {
      if (s[i] != v) throw HypothesisError("slopes are not constant on block " + b.to_string());
    }
    BigRational n = v * b.size();
    if (n.get_den() != 1) throw HypothesisError("slope times block size is not an integer on " + b.to_string());
  }
}

SlopeVector slopes_from_cm_type(const CMGaloisModel& model, IndexSet phi) {
  validate_cm_type(model, phi);
  const auto& part = model.blocks();
  SlopeVector s;
  for (int i = 0; i < model.points(); ++i) {
    const IndexSet& b = part.blocks[static_cast<std::size_t>(part.block_of[static_cast<std::size_t>(i)])];
    s.values.push_back(make_rational((b & phi).size(), b.size()));
  }
  return s;
}

SlopeTable slope_table(const CMGaloisModel& model, const SlopeVector& s) {
  validate_slopes(model, s);
  SlopeTable t;
  BigInt denom = 1;
  for (const auto& v : s.values) denom = lcm(denom, v.get_den());
  t.denom = to_int64(denom);
  for (const auto& v : s.values) {
    BigRational scaled = v * denom;
    t.scaled.push_back(to_int64(scaled.get_num()));
  }
  std::set<std::vector<std::int64_t>> rows;
  const std::size_t n = static_cast<std::size_t>(model.points());
  std::vector<std::int64_t> row(n);
  for (const auto& h : model.group().elements()) {
    for (std::size_t i = 0; i < n; ++i) row[i] = t.scaled[h(static_cast<int>(i))];
    rows.insert(row);
  }
  t.rows.assign(rows.begin(), rows.end());
  return t;
}

Subgroup fix_of_slope(const CMGaloisModel& model, const SlopeVector& s) {
  SlopeTable t = slope_table(model, s);
  // Points whose column (h -> s_{h(i)}) equals the column of the first point.
  IndexSet same;
  for (int i = 0; i < model.points(); ++i) {
    bool equal = std::all_of(t.rows.begin(), t.rows.end(), [&](const auto& r) {
      return r[static_cast<std::size_t>(i)] == r[0];
    });
    if (equal) same.insert(i);
  }
  const auto& group = model.group();
  std::vector<std::size_t> members;
  for (std::size_t k = 0; k < group.order(); ++k) {
    if (same.contains(group.element(k)(0))) members.push_back(k);
  }
  return Subgroup::from_indices(group, std::move(members));
}

bool is_p_potentially_in(const CMGaloisModel& model, const SlopeVector& s, const Subgroup& z) {
  if (!model.stabilizer().is_subset_of(z)) {
    throw HypothesisError("Z does not contain the point stabilizer, so it does not describe a subfield");
  }
  return z.is_subset_of(fix_of_slope(model, s));
}

std::size_t minimal_field_index(const CMGaloisModel& model, const SlopeVector& s) {
  return model.group().order() / fix_of_slope(model, s).order();
}

int rational_rank(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) return 0;
  std::vector<std::vector<BigRational>> m;
  for (const auto& r : rows) {
    std::vector<BigRational> q;
    for (auto v : r) q.emplace_back(static_cast<long>(v));
    m.push_back(std::move(q));
  }
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      BigRational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

int frobenius_rank(const CMGaloisModel& model, const SlopeVector& s) {
  return rational_rank(slope_table(model, s).rows) - 1;
}

std::vector<std::string> slopes_to_strings(const SlopeVector& s) {
  std::vector<std::string> out;
  for (const auto& v : s.values) out.push_back(to_string(v));
  return out;
}

}  // namespace weiltate

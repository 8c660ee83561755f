#include "weiltate/oracles.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace weiltate {

std::vector<std::size_t> oracle_fixer(const CMGaloisModel& model, const SlopeVector& s) {
  const auto& elems = model.group().elements();
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < elems.size(); ++k) {
    const Permutation& sigma = elems[k];
    bool fixes = true;
    for (const auto& h : elems) {
      if (s[h(sigma(0))] != s[h(0)]) {
        fixes = false;
        break;
      }
    }
    if (fixes) out.push_back(k);
  }
  return out;
}

bool oracle_potentially_in(const CMGaloisModel& model, const SlopeVector& s, const Subgroup& z) {
  const auto& elems = model.group().elements();
  const std::size_t n = elems.size();
  std::vector<BigRational> value(n);
  for (std::size_t h = 0; h < n; ++h) value[h] = s[elems[h].inverse()(0)];
  // The value must not depend on the coset representative.
  if (model.has_decomposition()) {
    for (std::size_t h = 0; h < n; ++h) {
      for (auto d : model.decomposition().members()) {
        Permutation hd = elems[h] * elems[d];
        if (s[hd.inverse()(0)] != value[h]) return false;
      }
    }
  }
  for (std::size_t h = 0; h < n; ++h) {
    for (auto zi : z.members()) {
      Permutation zh = elems[zi] * elems[h];
      if (s[zh.inverse()(0)] != value[h]) return false;
    }
  }
  return true;
}

SlopeVector random_admissible_slopes(const CMGaloisModel& model, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int g = model.g();
  SlopeVector s;
  s.values.resize(static_cast<std::size_t>(model.points()));
  for (int i = 0; i < g; ++i) {
    const long d = static_cast<long>(rng() % 4) + 1;
    const long num = static_cast<long>(rng() % static_cast<std::uint64_t>(d + 1));
    s.values[static_cast<std::size_t>(i)] = make_rational(num, d);
    s.values[static_cast<std::size_t>(i + g)] = 1 - s.values[static_cast<std::size_t>(i)];
  }
  return s;
}

std::vector<Subgroup> overgroups_of_stabilizer(const CMGaloisModel& model) {
  const auto& group = model.group();
  const Subgroup& h = model.stabilizer();
  std::vector<Subgroup> out{h, Subgroup::whole(group)};
  for (auto& z : index2_overgroups(group, h)) out.push_back(std::move(z));
  std::set<std::vector<std::size_t>> seen;
  for (const auto& z : out) seen.insert(z.members());
  // A small generating set of H.
  std::vector<std::size_t> h_gens;
  Subgroup closure = Subgroup::trivial(group);
  for (auto m : h.members()) {
    if (closure.contains(m)) continue;
    h_gens.push_back(m);
    closure = Subgroup::generated_by(group, h_gens);
  }
  // <H, x> only depends on the coset xH, i.e. on x(1).
  std::vector<bool> done(static_cast<std::size_t>(model.points()), false);
  for (std::size_t x = 0; x < group.order(); ++x) {
    const int image = group.element(x)(0);
    if (done[static_cast<std::size_t>(image)]) continue;
    done[static_cast<std::size_t>(image)] = true;
    std::vector<std::size_t> gens = h_gens;
    gens.push_back(x);
    Subgroup z = Subgroup::generated_by(group, gens);
    if (seen.insert(z.members()).second) out.push_back(std::move(z));
  }
  return out;
}

void compare_with_oracles(const std::string& name, const CMGaloisModel& model, const SlopeVector& s,
                          OracleSummary& summary) {
  ++summary.instances;
  const Subgroup fix = fix_of_slope(model, s);
  ++summary.comparisons;
  if (fix.members() != oracle_fixer(model, s)) {
    summary.mismatches.push_back({name, "fix_of_slope", "fixer differs from the brute-force definition"});
  }
  for (const auto& z : overgroups_of_stabilizer(model)) {
    ++summary.comparisons;
    const bool fast = is_p_potentially_in(model, s, z);
    const bool slow = oracle_potentially_in(model, s, z);
    if (fast != slow) {
      summary.mismatches.push_back({name, "is_p_potentially_in",
                                    "subgroup of order " + std::to_string(z.order()) + ": " +
                                        (fast ? "true" : "false") + " vs oracle " + (slow ? "true" : "false")});
    }
  }
  ++summary.comparisons;
  const std::size_t index = minimal_field_index(model, s);
  if (static_cast<std::size_t>(model.points()) % index != 0) {
    summary.mismatches.push_back({name, "minimal_field_index", std::to_string(index) + " does not divide 2g"});
  }
}

}  // namespace weiltate

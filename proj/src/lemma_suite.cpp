#include "weiltate/lemma_suite.hpp"

#include <algorithm>

namespace weiltate {

std::string to_string(LemmaStatus s) {
  switch (s) {
    case LemmaStatus::Pass:
      return "PASS";
    case LemmaStatus::Fail:
      return "FAIL";
    case LemmaStatus::NotApplicable:
      return "NOT_APPLICABLE";
  }
  return "NOT_APPLICABLE";
}

bool LemmaSuiteResult::any_fail() const {
  return std::any_of(results.begin(), results.end(), [](const LemmaResult& r) { return r.status == LemmaStatus::Fail; });
}

namespace {

bool all_rows_half(const SlopeTable& t, IndexSet j) {
  for (const auto& r : t.rows) {
    std::int64_t sum = 0;
    for (int i : j.to_vector()) sum += r[static_cast<std::size_t>(i)];
    if (2 * sum != static_cast<std::int64_t>(j.size()) * t.denom) return false;
  }
  return true;
}

LemmaResult partition(const LemmaInstance& inst, const ClassifierReport& rep) {
  LemmaResult r{inst.name, "partition", LemmaStatus::Pass, ""};
  if (!rep.mildly_exotic) return {inst.name, "partition", LemmaStatus::NotApplicable, "not mildly exotic"};
  const IndexSet all = inst.model.all_points();
  for (auto idx : rep.exotic) {
    const auto& o = rep.orbits[idx];
    if (o.rank > 2) continue;
    for (IndexSet i : o.orbit) {
      if ((i | inst.model.tau_of(i)) != all) return {inst.name, "partition", LemmaStatus::Fail, i.to_string()};
    }
  }
  return r;
}

LemmaResult half_weight(const LemmaInstance& inst, const ClassifierReport& rep, const SlopeTable& t) {
  if (!rep.mildly_exotic) return {inst.name, "half_weight_subsets", LemmaStatus::NotApplicable, "not mildly exotic"};
  const int g = inst.model.g();
  for (auto idx : rep.exotic) {
    for (IndexSet i : rep.orbits[idx].orbit) {
      // Nonempty submasks of I.
      for (std::uint32_t sub = i.bits(); sub; sub = (sub - 1) & i.bits()) {
        IndexSet j(sub);
        if (2 * j.size() >= g) continue;
        if (all_rows_half(t, j)) {
          return {inst.name, "half_weight_subsets", LemmaStatus::Fail, "J = " + j.to_string() + " in I = " + i.to_string()};
        }
      }
    }
  }
  return {inst.name, "half_weight_subsets", LemmaStatus::Pass, ""};
}

LemmaResult uniqueness(const LemmaInstance& inst, const ClassifierReport& rep, const EndAlgebraReport& end) {
  if (!rep.mildly_exotic) return {inst.name, "uniqueness", LemmaStatus::NotApplicable, "not mildly exotic"};
  if (end.commutative) return {inst.name, "uniqueness", LemmaStatus::NotApplicable, "endomorphism algebra is commutative"};
  const int g = inst.model.g();
  const IndexSet first = rep.orbits[rep.exotic.front()].representative;
  const IndexSet conj = inst.model.tau_of(first);
  for (auto idx : rep.exotic) {
    for (IndexSet j : rep.orbits[idx].orbit) {
      if (j.size() > g) continue;
      if (j != first && j != conj) {
        return {inst.name, "uniqueness", LemmaStatus::Fail, j.to_string() + " differs from " + first.to_string()};
      }
    }
  }
  return {inst.name, "uniqueness", LemmaStatus::Pass, ""};
}

LemmaResult unique_orbit(const LemmaInstance& inst, const ClassifierReport& rep) {
  if (inst.family != "main") return {inst.name, "unique_exotic_orbit", LemmaStatus::NotApplicable, "not the main family"};
  if (rep.exotic.size() != 1) {
    return {inst.name, "unique_exotic_orbit", LemmaStatus::Fail,
            std::to_string(rep.exotic.size()) + " exotic orbits"};
  }
  const auto& o = rep.orbits[rep.exotic.front()];
  if (o.weight != inst.model.g()) {
    return {inst.name, "unique_exotic_orbit", LemmaStatus::Fail, "exotic orbit has weight " + std::to_string(o.weight)};
  }
  return {inst.name, "unique_exotic_orbit", LemmaStatus::Pass, ""};
}

}  // namespace

LemmaSuiteResult verify_lemma_suite(const std::vector<LemmaInstance>& instances, unsigned workers, int max_points) {
  LemmaSuiteResult out;
  for (const auto& inst : instances) {
    ClassifyOptions opts;
    opts.workers = workers;
    opts.max_points = max_points;
    ClassifierReport rep = classify_orbits(inst.model, inst.slopes, opts);
    SlopeTable t = slope_table(inst.model, inst.slopes);
    out.results.push_back(partition(inst, rep));
    out.results.push_back(half_weight(inst, rep, t));
    if (rep.mildly_exotic && inst.model.has_decomposition()) {
      out.results.push_back(uniqueness(inst, rep, honda_tate_endomorphism(inst.model, inst.slopes)));
    } else if (!rep.mildly_exotic) {
      out.results.push_back({inst.name, "uniqueness", LemmaStatus::NotApplicable, "not mildly exotic"});
    } else {
      out.results.push_back({inst.name, "uniqueness", LemmaStatus::NotApplicable, "no decomposition subgroup"});
    }
    out.results.push_back(unique_orbit(inst, rep));
  }
  return out;
}

}  // namespace weiltate

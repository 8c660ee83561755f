#include "weiltate/motive.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <thread>
#include <unordered_set>

#include "weiltate/errors.hpp"

namespace weiltate {

std::string to_string(SchtVerdict v) {
  switch (v) {
    case SchtVerdict::ApplicableMildlyExotic:
      return "APPLICABLE_MILDLY_EXOTIC";
    case SchtVerdict::LefschetzOnly:
      return "LEFSCHETZ_ONLY";
    case SchtVerdict::NotDecided:
      return "NOT_DECIDED";
  }
  return "NOT_DECIDED";
}

SchtVerdict parse_verdict(const std::string& text) {
  if (text == "APPLICABLE_MILDLY_EXOTIC") return SchtVerdict::ApplicableMildlyExotic;
  if (text == "LEFSCHETZ_ONLY") return SchtVerdict::LefschetzOnly;
  if (text == "NOT_DECIDED") return SchtVerdict::NotDecided;
  throw HypothesisError("unknown verdict '" + text + "'");
}

bool is_tate_subset(const CMGaloisModel& model, const SlopeVector& s, IndexSet subset) {
  validate_slopes(model, s);
  if (subset.size() % 2 != 0) return false;
  const BigRational half = make_rational(subset.size(), 2);
  for (IndexSet j : orbit_of_subset(model, subset)) {
    BigRational sum = 0;
    for (int i : j.to_vector()) sum += s[i];
    if (sum != half) return false;
  }
  return true;
}

namespace {

// pair[i] = bitmask of j such that {i, j} is a weight-2 Tate subset.
std::vector<std::uint32_t> tate_pairs(const SlopeTable& t, int n) {
  std::vector<std::uint32_t> pair(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool ok = std::all_of(t.rows.begin(), t.rows.end(), [&](const auto& r) {
        return r[static_cast<std::size_t>(i)] + r[static_cast<std::size_t>(j)] == t.denom;
      });
      if (ok) {
        pair[static_cast<std::size_t>(i)] |= 1u << j;
        pair[static_cast<std::size_t>(j)] |= 1u << i;
      }
    }
  }
  return pair;
}

class PairMatcher {
 public:
  explicit PairMatcher(std::vector<std::uint32_t> pair) : pair_(std::move(pair)) {}

  bool matched(std::uint32_t mask) {
    if (mask == 0) return true;
    if (std::popcount(mask) % 2 != 0) return false;
    if (failed_.count(mask)) return false;
    const int i = std::countr_zero(mask);
    const std::uint32_t rest = mask & ~(1u << i);
    for (std::uint32_t options = pair_[static_cast<std::size_t>(i)] & rest; options; options &= options - 1) {
      const int j = std::countr_zero(options);
      if (matched(rest & ~(1u << j))) return true;
    }
    failed_.insert(mask);
    return false;
  }

 private:
  std::vector<std::uint32_t> pair_;
  std::unordered_set<std::uint32_t> failed_;
};

std::int64_t identity_sum(const SlopeTable& t, std::uint32_t mask) {
  std::int64_t sum = 0;
  for (; mask; mask &= mask - 1) sum += t.scaled[static_cast<std::size_t>(std::countr_zero(mask))];
  return sum;
}

}  // namespace

bool is_lefschetz_subset(const CMGaloisModel& model, const SlopeVector& s, IndexSet subset) {
  SlopeTable t = slope_table(model, s);
  PairMatcher matcher(tate_pairs(t, model.points()));
  return matcher.matched(subset.bits());
}

std::vector<WeilTateEntry> weil_tate_submotives(const CMGaloisModel& model, const SlopeVector& s) {
  validate_slopes(model, s);
  const auto& group = model.group();
  SlopeTable t = slope_table(model, s);
  PairMatcher matcher(tate_pairs(t, model.points()));
  std::vector<WeilTateEntry> out;
  for (const auto& z : index2_overgroups(group, model.stabilizer())) {
    if (z.contains(model.tau_index())) continue;
    WeilTateEntry e;
    for (auto m : z.members()) e.subset.insert(group.element(m)(0));
    e.z_order = z.order();
    e.is_tate = is_tate_subset(model, s, e.subset);
    e.is_lefschetz_bearing = e.is_tate && matcher.matched(e.subset.bits());
    e.is_exotic = e.is_tate && !e.is_lefschetz_bearing;
    out.push_back(e);
  }
  return out;
}

ClassifierReport classify_orbits(const CMGaloisModel& model, const SlopeVector& s, const ClassifyOptions& options) {
  const int n = model.points();
  const int g = model.g();
  if (options.max_points > kHardMaxPoints) {
    throw CapExceeded("point cap above the supported maximum " + std::to_string(kHardMaxPoints));
  }
  if (n > options.max_points) {
    throw CapExceeded("2g = " + std::to_string(n) + " exceeds the enumeration cap " +
                      std::to_string(options.max_points));
  }
  if (options.phi) validate_cm_type(model, *options.phi);
  SlopeTable t = slope_table(model, s);

  ClassifierReport report;
  report.g = g;
  if (options.weights) {
    for (int w : *options.weights) {
      if (w < 0 || w > n || w % 2 != 0) throw HypothesisError("weight " + std::to_string(w) + " is not in 0, 2, ..., 2g");
      report.weights.push_back(w);
    }
    std::sort(report.weights.begin(), report.weights.end());
    report.weights.erase(std::unique(report.weights.begin(), report.weights.end()), report.weights.end());
  } else {
    for (int w = 0; w <= n; w += 2) report.weights.push_back(w);
  }
  std::vector<bool> wanted(static_cast<std::size_t>(n) + 1, false);
  for (int w : report.weights) wanted[static_cast<std::size_t>(w)] = true;

  // Phase 1: subsets whose slope sum at the chosen valuation is half their size.
  const std::uint64_t total = std::uint64_t{1} << n;
  const unsigned workers = std::max(1u, options.workers);
  std::vector<std::vector<std::uint32_t>> chunks(workers);
  auto scan = [&](unsigned w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    auto& found = chunks[w];
    for (std::uint64_t m = begin; m < end; ++m) {
      const auto mask = static_cast<std::uint32_t>(m);
      const int size = std::popcount(mask);
      if (!wanted[static_cast<std::size_t>(size)]) continue;
      if (2 * identity_sum(t, mask) == static_cast<std::int64_t>(size) * t.denom) found.push_back(mask);
    }
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(scan, w);
    for (auto& th : threads) th.join();
  }
  std::vector<std::uint8_t> candidate(total, 0);
  std::vector<std::uint32_t> candidates;
  for (const auto& c : chunks) {
    for (auto m : c) {
      candidate[m] = 1;
      candidates.push_back(m);
    }
  }

  // Phase 2: a candidate orbit is Tate iff it lies entirely inside the candidates.
  PairMatcher matcher(tate_pairs(t, n));
  const auto& gens = model.group().generators();
  std::vector<std::uint8_t> visited(total, 0);
  for (auto start : candidates) {
    if (visited[start]) continue;
    visited[start] = 1;
    std::vector<IndexSet> orbit{IndexSet(start)};
    bool tate = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const auto& gen : gens) {
        IndexSet next = gen.apply(orbit[head]);
        if (visited[next.bits()]) continue;
        visited[next.bits()] = 1;
        if (!candidate[next.bits()]) tate = false;
        orbit.push_back(next);
      }
    }
    if (!tate) continue;
    std::sort(orbit.begin(), orbit.end(), lex_less);
    MotiveOrbit o;
    o.weight = orbit.front().size();
    o.representative = orbit.front();
    o.rank = orbit.size();
    o.is_tate = true;
    o.is_lefschetz_bearing = matcher.matched(o.representative.bits());
    o.is_exotic = !o.is_lefschetz_bearing;
    if (options.phi) o.hodge = hodge_type(model, *options.phi, o.representative);
    o.orbit = std::move(orbit);
    report.orbits.push_back(std::move(o));
  }
  std::sort(report.orbits.begin(), report.orbits.end(), [](const MotiveOrbit& a, const MotiveOrbit& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    return lex_less(a.representative, b.representative);
  });

  for (int w : report.weights) report.tate_dims[w / 2] = 0;
  bool all_small = true;
  for (std::size_t i = 0; i < report.orbits.size(); ++i) {
    const auto& o = report.orbits[i];
    report.tate_dims[o.weight / 2] += o.rank;
    if (o.is_exotic) {
      report.exotic.push_back(i);
      if (o.rank > 2) all_small = false;
    }
  }
  report.mildly_exotic = !report.exotic.empty() && all_small;
  if (report.mildly_exotic) {
    report.verdict = SchtVerdict::ApplicableMildlyExotic;
  } else if (report.exotic.empty()) {
    report.verdict = SchtVerdict::LefschetzOnly;
  } else {
    report.verdict = SchtVerdict::NotDecided;
  }
  report.weil_tate = weil_tate_submotives(model, s);
  return report;
}

EndAlgebraReport honda_tate_endomorphism(const CMGaloisModel& model, const SlopeVector& s) {
  SlopeTable t = slope_table(model, s);
  const int n = model.points();
  // Embeddings of the Frobenius field: points with equal columns h -> s_{h(i)}.
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  int classes = 0;
  for (int i = 0; i < n; ++i) {
    if (cls[static_cast<std::size_t>(i)] >= 0) continue;
    for (int j = i; j < n; ++j) {
      if (cls[static_cast<std::size_t>(j)] >= 0) continue;
      bool same = std::all_of(t.rows.begin(), t.rows.end(), [&](const auto& r) {
        return r[static_cast<std::size_t>(i)] == r[static_cast<std::size_t>(j)];
      });
      if (same) cls[static_cast<std::size_t>(j)] = classes;
    }
    ++classes;
  }

  EndAlgebraReport rep;
  rep.frobenius_field_degree = static_cast<std::size_t>(classes);
  const auto& part = model.blocks();
  // Places above p: orbits of D on embedding classes, i.e. unions of the
  // blocks sharing a class.
  std::vector<int> place_of_class(static_cast<std::size_t>(classes), -1);
  std::vector<IndexSet> place_points;
  for (const auto& b : part.blocks) {
    int place = -1;
    for (int i : b.to_vector()) {
      int pc = place_of_class[static_cast<std::size_t>(cls[static_cast<std::size_t>(i)])];
      if (pc >= 0) place = pc;
    }
    if (place < 0) {
      place = static_cast<int>(place_points.size());
      place_points.emplace_back();
    }
    for (int i : b.to_vector()) {
      place_points[static_cast<std::size_t>(place)].insert(i);
      place_of_class[static_cast<std::size_t>(cls[static_cast<std::size_t>(i)])] = place;
    }
  }
  // Close under shared classes (a class may straddle several blocks).
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 0; a < place_points.size() && !changed; ++a) {
      for (std::size_t b = a + 1; b < place_points.size() && !changed; ++b) {
        bool share = false;
        for (int i : place_points[a].to_vector()) {
          for (int j : place_points[b].to_vector()) {
            if (cls[static_cast<std::size_t>(i)] == cls[static_cast<std::size_t>(j)]) share = true;
          }
        }
        if (share) {
          place_points[a] = place_points[a] | place_points[b];
          place_points.erase(place_points.begin() + static_cast<std::ptrdiff_t>(b));
          changed = true;
        }
      }
    }
  }
  std::sort(place_points.begin(), place_points.end(), [](IndexSet a, IndexSet b) { return a.min() < b.min(); });

  BigRational total = 0;
  BigInt m = 1;
  for (IndexSet pts : place_points) {
    LocalInvariant li;
    li.points = pts;
    std::vector<int> seen_classes;
    for (int i : pts.to_vector()) seen_classes.push_back(cls[static_cast<std::size_t>(i)]);
    std::sort(seen_classes.begin(), seen_classes.end());
    seen_classes.erase(std::unique(seen_classes.begin(), seen_classes.end()), seen_classes.end());
    li.local_degree = seen_classes.size();
    li.slope = s[pts.min()];
    for (int i : pts.to_vector()) {
      if (s[i] != li.slope) throw HypothesisError("slope is not constant over the place " + pts.to_string());
    }
    li.invariant = frac(li.slope * static_cast<long>(li.local_degree));
    total += li.invariant;
    m = lcm(m, li.invariant.get_den());
    rep.local_invariants.push_back(li);
  }
  // A real Frobenius field is totally real; each real place carries 1/2.
  const bool real_field = fix_of_slope(model, s).contains(model.tau_index());
  if (real_field) {
    for (std::size_t k = 0; k < rep.frobenius_field_degree; ++k) {
      LocalInvariant li;
      li.archimedean = true;
      li.local_degree = 1;
      li.slope = make_rational(1, 2);
      li.invariant = make_rational(1, 2);
      total += li.invariant;
      m = lcm(m, BigInt(2));
      rep.local_invariants.push_back(li);
    }
  }
  if (frac(total) != 0) throw HypothesisError("local invariants do not sum to an integer");
  rep.index = m;
  rep.commutative = (m == 1);
  BigInt twice_dim = m * static_cast<unsigned long>(rep.frobenius_field_degree);
  if (twice_dim % 2 != 0) throw HypothesisError("odd value of m [F:Q]");
  rep.abelian_variety_dim = twice_dim / 2;
  return rep;
}

StructureVerdict structure_check(const CMGaloisModel& model, const SlopeVector& s, const ClassifierReport& report,
                                 const EndAlgebraReport& end_report) {
  (void)s;
  if (!report.mildly_exotic) throw HypothesisError("structure check requires a mildly exotic report");
  StructureVerdict v;
  v.branch = end_report.commutative ? "commutative" : "noncommutative";
  const int g = model.g();
  auto fail = [&](const std::string& why) {
    v.pass = false;
    v.violated = why;
    return v;
  };
  if (g % 2 != 0) return fail("g is odd");
  for (auto idx : report.exotic) {
    const auto& o = report.orbits[idx];
    bool found = std::any_of(report.weil_tate.begin(), report.weil_tate.end(), [&](const WeilTateEntry& e) {
      return e.is_exotic && std::find(o.orbit.begin(), o.orbit.end(), e.subset) != o.orbit.end();
    });
    if (!found) return fail("exotic orbit " + o.representative.to_string() + " is not a Weil-Tate determinant");
  }
  if (end_report.commutative) {
    if (report.weil_tate.empty()) return fail("no imaginary quadratic subfield");
  } else {
    if (end_report.index != 2) return fail("index m is not 2");
    if ((g / 2) % 2 != 1) return fail("g/2 is even");
    if (report.exotic.size() != 1) return fail("exotic orbit is not unique");
  }
  v.pass = true;
  return v;
}

Signature predicted_signature(const ClassifierReport& report, int g) {
  if (g % 2 != 0) throw HypothesisError("signature needs even g");
  Signature sig;
  for (int k = 0; k <= g / 2; ++k) {
    auto it = report.tate_dims.find(k);
    if (it == report.tate_dims.end()) throw HypothesisError("rho_" + std::to_string(k) + " was not computed");
    const auto rho = static_cast<std::int64_t>(it->second);
    sig.plus += (k % 2 == 0) ? rho : -rho;
  }
  sig.minus = static_cast<std::int64_t>(report.tate_dims.at(g / 2)) - sig.plus;
  return sig;
}

}  // namespace weiltate

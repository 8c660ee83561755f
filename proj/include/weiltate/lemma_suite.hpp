#pragma once

#include <string>
#include <vector>

#include "weiltate/galois_model.hpp"
#include "weiltate/motive.hpp"
#include "weiltate/slopes.hpp"

namespace weiltate {

struct LemmaInstance {
  std::string name;
  std::string family;  // "main", "ramified", "split", "file", "random"
  CMGaloisModel model;
  SlopeVector slopes;
};

enum class LemmaStatus { Pass, Fail, NotApplicable };

std::string to_string(LemmaStatus s);

struct LemmaResult {
  std::string instance;
  std::string lemma;  // "partition", "half_weight_subsets", "uniqueness", "unique_exotic_orbit"
  LemmaStatus status = LemmaStatus::NotApplicable;
  std::string detail;  // counterexample or reason for skipping
};

struct LemmaSuiteResult {
  std::vector<LemmaResult> results;
  bool any_fail() const;
};

/// Exhaustive checks, each restricted to instances meeting its hypotheses:
///  partition            - mildly exotic: every exotic I of rank <= 2 has I ∪ tau I = all
///  half_weight_subsets  - mildly exotic: every nonempty J ⊆ I whose conjugate slope
///                         sums are all |J|/2 has |J| >= g/2
///  uniqueness           - mildly exotic and noncommutative: every exotic subset of
///                         size <= g is I or tau I
///  unique_exotic_orbit  - main family: exactly one exotic orbit, of weight g
LemmaSuiteResult verify_lemma_suite(const std::vector<LemmaInstance>& instances, unsigned workers = 1,
                                    int max_points = kDefaultMaxPoints);

}  // namespace weiltate

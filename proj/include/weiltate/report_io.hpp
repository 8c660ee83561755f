#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weiltate/field_forge.hpp"
#include "weiltate/lemma_suite.hpp"
#include "weiltate/motive.hpp"
#include "weiltate/oracles.hpp"
#include "weiltate/scenario.hpp"

namespace weiltate {

/// Everything the classify command reports about one scenario.
struct ClassifyRun {
  std::string scenario;
  std::string family;
  std::string provenance;
  int g = 0;
  int points = 0;
  std::optional<std::uint32_t> p;
  std::size_t group_order = 0;
  std::vector<std::string> generators;
  std::string tau;
  std::vector<std::string> decomposition_generators;
  std::vector<IndexSet> blocks;
  IndexSet phi;
  SlopeVector slopes;
  std::vector<std::pair<std::string, std::int64_t>> quadratic_fields;

  ClassifierReport classifier;
  EndAlgebraReport endomorphism;
  std::size_t minimal_field_index = 0;
  int frobenius_rank = 0;
  std::optional<StructureVerdict> structure;
  std::optional<Signature> signature;

  friend bool operator==(const ClassifyRun&, const ClassifyRun&) = default;
};

ClassifyRun run_classification(const Scenario& scenario, const ClassifyOptions& options);

std::string classify_to_json(const ClassifyRun& run);
/// Inverse of classify_to_json; throws ParseError on malformed documents.
ClassifyRun classify_from_json(const std::string& text);
std::string classify_to_text(const ClassifyRun& run);

std::string forge_to_json(const ForgedField& field);
ForgedField forge_from_json(const std::string& text);
std::string forge_to_text(const ForgedField& field);

struct VerifyRun {
  LemmaSuiteResult lemmas;
  OracleSummary oracles;
};

std::string verify_to_json(const VerifyRun& run);
std::string verify_to_text(const VerifyRun& run);

}  // namespace weiltate

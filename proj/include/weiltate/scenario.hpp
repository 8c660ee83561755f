#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weiltate/galois_model.hpp"
#include "weiltate/slopes.hpp"

namespace weiltate {

/// A classified input: model with decomposition subgroup, CM-type and the
/// slopes it induces.
struct Scenario {
  std::string name;
  std::string family;  // "main", "ramified", "split" or "file"
  std::string provenance;  // "preset" or "file"
  int g = 0;
  CMGaloisModel model;
  IndexSet phi;
  SlopeVector slopes;
  std::optional<std::uint32_t> p;
  /// Quadratic fields Q(sqrt d) recorded as provenance (name, d).
  std::vector<std::pair<std::string, std::int64_t>> quadratic_fields;
};

/// mu_2 x S_g with D generated by (-1, (1 2 ... g)); targets (1, g-1).
Scenario scenario_main(int g, std::uint32_t p, std::size_t cap = kDefaultGroupCap);

/// (mu_2 x mu_2) x S_{g'} on 4g' points labelled (a, b, j):
///   1..g' = (+,+,j), g'+1..2g' = (+,-,j), 2g'+1..3g' = (-,-,j), 3g'+1..4g' = (-,+,j),
/// tau = (-,-,id), D generated by (-,+,c) and (+,-,id) with c = (1 2 ... g'-1).
/// Blocks of sizes 2(g'-1), 2(g'-1), 4 with targets (1, 2g'-3, 2).
Scenario scenario_ramified(int gp, std::uint32_t p, std::size_t cap = kDefaultGroupCap);

/// Same group and labels, D generated by (-,-,c). Six blocks of sizes
/// g'-1 (four times) and 2 (twice), slopes 0, 1, 1/(g'-1), (g'-2)/(g'-1), 1/2, 1/2.
Scenario scenario_split(int gp, std::uint32_t p, std::size_t cap = kDefaultGroupCap);

/// Check D-block sizes against the declared local degrees (any order).
void check_local_degrees(const Scenario& s, std::vector<int> degrees);

/// Scenario file: `key = value` lines, '#' starts a comment.
///   name, points, generators ("(1 2)(3 4); (1 3)"), tau,
///   decomposition_generators, phi ("1 2 4 7") or phi_targets (per block, in
///   block order), optional slopes ("1/4 3/4 ...", validated).
/// Throws ParseError carrying the line and field.
Scenario parse_scenario(const std::string& text, std::size_t cap = kDefaultGroupCap);
Scenario load_scenario_file(const std::string& path, std::size_t cap = kDefaultGroupCap);

}  // namespace weiltate

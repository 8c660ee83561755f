#include "weiltate/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "weiltate/cm_types.hpp"
#include "weiltate/errors.hpp"
#include "weiltate/field_forge.hpp"
#include "weiltate/prime_field_poly.hpp"

namespace weiltate {

namespace {

void check_prime(std::uint32_t p) {
  if (!is_small_prime(p)) throw HypothesisError(std::to_string(p) + " is not prime");
}

// Points of the (mu_2 x mu_2) x S_g' models, 0-based: quadrant order
// (+,+), (+,-), (-,-), (-,+) so that (-,-,id) is i -> i + 2g'.
int quad_point(int a, int b, int j, int gp) {
  int quadrant = 0;
  if (a > 0 && b > 0) quadrant = 0;
  if (a > 0 && b < 0) quadrant = 1;
  if (a < 0 && b < 0) quadrant = 2;
  if (a < 0 && b > 0) quadrant = 3;
  return quadrant * gp + j;
}

// (e1, e2, sigma) acting on the 4g' points.
Permutation quad_element(int e1, int e2, const std::vector<int>& sigma, int gp) {
  static const int signs[4][2] = {{1, 1}, {1, -1}, {-1, -1}, {-1, 1}};
  std::vector<Point> images(static_cast<std::size_t>(4 * gp));
  for (int q = 0; q < 4; ++q) {
    for (int j = 0; j < gp; ++j) {
      images[static_cast<std::size_t>(q * gp + j)] = static_cast<Point>(
          quad_point(e1 * signs[q][0], e2 * signs[q][1], sigma[static_cast<std::size_t>(j)], gp));
    }
  }
  return Permutation(std::move(images));
}

std::vector<int> identity_perm(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

// Cycle (0 1 ... len-1) on n letters.
std::vector<int> cycle_perm(int n, int len) {
  std::vector<int> v = identity_perm(n);
  for (int i = 0; i < len; ++i) v[static_cast<std::size_t>(i)] = (i + 1) % len;
  return v;
}

CMGaloisModel quad_model(int gp, std::size_t cap) {
  std::vector<int> transposition = identity_perm(gp);
  std::swap(transposition[0], transposition[1]);
  const auto id = identity_perm(gp);
  std::vector<Permutation> gens{quad_element(-1, 1, id, gp), quad_element(1, -1, id, gp),
                                quad_element(1, 1, transposition, gp), quad_element(1, 1, cycle_perm(gp, gp), gp)};
  return CMGaloisModel::create(4 * gp, std::move(gens), quad_element(-1, -1, id, gp), cap);
}

// Targets given as (point inside block, n_v), turned into block order.
PlacePrescription targets_by_point(const CMGaloisModel& model, const std::vector<std::pair<int, int>>& wanted) {
  const auto& part = model.blocks();
  PlacePrescription pr;
  pr.targets.assign(part.size(), -1);
  for (auto [point, n] : wanted) pr.targets[static_cast<std::size_t>(part.block_of[static_cast<std::size_t>(point)])] = n;
  if (std::find(pr.targets.begin(), pr.targets.end(), -1) != pr.targets.end()) {
    throw HypothesisError("internal: incomplete block targets");
  }
  return pr;
}

Scenario finish(std::string name, std::string family, CMGaloisModel model, const PlacePrescription& pr,
                std::uint32_t p) {
  Scenario s;
  s.name = std::move(name);
  s.family = std::move(family);
  s.provenance = "preset";
  s.g = model.g();
  s.phi = enumerate_cm_types(model, pr, 1).at(0);
  s.slopes = slopes_from_cm_type(model, s.phi);
  s.model = std::move(model);
  s.p = p;
  return s;
}

}  // namespace

Scenario scenario_main(int g, std::uint32_t p, std::size_t cap) {
  if (g < 4 || g % 2 != 0) throw HypothesisError("main scenario needs even g >= 4");
  check_prime(p);
  CMGaloisModel base = cm_product_group(g, cap);
  // (-1, (1 2 ... g)): i -> sigma(i) + g, i + g -> sigma(i).
  std::vector<Point> images(static_cast<std::size_t>(2 * g));
  for (int i = 0; i < g; ++i) {
    images[static_cast<std::size_t>(i)] = static_cast<Point>((i + 1) % g + g);
    images[static_cast<std::size_t>(i + g)] = static_cast<Point>((i + 1) % g);
  }
  CMGaloisModel model = base.with_decomposition({Permutation(std::move(images))});
  PlacePrescription pr = targets_by_point(model, {{0, 1}, {g, g - 1}});
  Scenario s = finish("main(g=" + std::to_string(g) + ")", "main", std::move(model), pr, p);
  check_local_degrees(s, {g, g});
  s.quadratic_fields.emplace_back("Q", forge_quadratic(p, Splitting::Inert, QuadSignature::Imaginary));
  return s;
}

Scenario scenario_ramified(int gp, std::uint32_t p, std::size_t cap) {
  if (gp < 3 || gp % 2 == 0) throw HypothesisError("ramified scenario needs odd g' >= 3");
  check_prime(p);
  CMGaloisModel base = quad_model(gp, cap);
  const auto id = identity_perm(gp);
  CMGaloisModel model =
      base.with_decomposition({quad_element(-1, 1, cycle_perm(gp, gp - 1), gp), quad_element(1, -1, id, gp)});
  PlacePrescription pr = targets_by_point(
      model, {{quad_point(1, 1, 0, gp), 1}, {quad_point(1, 1, 1, gp), 2 * gp - 3}, {quad_point(1, 1, gp - 1, gp), 2}});
  Scenario s = finish("ramified(g'=" + std::to_string(gp) + ")", "ramified", std::move(model), pr, p);
  check_local_degrees(s, {2 * (gp - 1), 2 * (gp - 1), 4});
  // Q ramified at p; Q' ramified at p with Q Q' having an inert real quadratic subfield.
  const std::int64_t d = forge_quadratic(p, Splitting::Ramified, QuadSignature::Imaginary);
  for (int k = 1;; ++k) {
    const std::int64_t d2 = forge_quadratic(p, Splitting::Ramified, QuadSignature::Imaginary, k);
    const std::int64_t real = squarefree_kernel(d * d2);
    if (real != 1 && quadratic_splitting(real, p) == Splitting::Inert) {
      s.quadratic_fields.emplace_back("Q", d);
      s.quadratic_fields.emplace_back("Q'", d2);
      s.quadratic_fields.emplace_back("B_R", real);
      break;
    }
  }
  return s;
}

Scenario scenario_split(int gp, std::uint32_t p, std::size_t cap) {
  if (gp < 3 || gp % 2 == 0) throw HypothesisError("split scenario needs odd g' >= 3");
  check_prime(p);
  CMGaloisModel base = quad_model(gp, cap);
  CMGaloisModel model = base.with_decomposition({quad_element(-1, -1, cycle_perm(gp, gp - 1), gp)});
  PlacePrescription pr = targets_by_point(model, {{quad_point(1, 1, 0, gp), 0},
                                                  {quad_point(-1, -1, 0, gp), gp - 1},
                                                  {quad_point(1, -1, 0, gp), 1},
                                                  {quad_point(-1, 1, 0, gp), gp - 2},
                                                  {quad_point(1, 1, gp - 1, gp), 1},
                                                  {quad_point(1, -1, gp - 1, gp), 1}});
  Scenario s = finish("split(g'=" + std::to_string(gp) + ")", "split", std::move(model), pr, p);
  check_local_degrees(s, {gp - 1, gp - 1, gp - 1, gp - 1, 2, 2});
  const std::int64_t d = forge_quadratic(p, Splitting::Inert, QuadSignature::Imaginary);
  const std::int64_t d2 = forge_quadratic(p, Splitting::Inert, QuadSignature::Imaginary, 1);
  s.quadratic_fields.emplace_back("Q", d);
  s.quadratic_fields.emplace_back("Q'", d2);
  s.quadratic_fields.emplace_back("B_R", squarefree_kernel(d * d2));
  return s;
}

void check_local_degrees(const Scenario& s, std::vector<int> degrees) {
  std::vector<int> sizes;
  for (const auto& b : s.model.blocks().blocks) sizes.push_back(b.size());
  std::sort(sizes.begin(), sizes.end());
  std::sort(degrees.begin(), degrees.end());
  if (sizes != degrees) throw HypothesisError("decomposition blocks do not match the declared local degrees");
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_tokens(const std::string& s, const std::string& separators) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (separators.find(c) != std::string::npos) {
      if (!trim(cur).empty()) out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

struct Field {
  std::size_t line;
  std::string value;
};

int parse_int(const Field& f, const std::string& key) {
  try {
    std::size_t used = 0;
    int v = std::stoi(f.value, &used);
    if (used != f.value.size()) throw std::invalid_argument("trailing text");
    return v;
  } catch (const std::exception&) {
    throw ParseError(f.line, key, "expected an integer, got '" + f.value + "'");
  }
}

std::vector<int> parse_int_list(const Field& f, const std::string& key) {
  std::vector<int> out;
  for (const auto& tok : split_tokens(f.value, " ,\t")) out.push_back(parse_int(Field{f.line, tok}, key));
  return out;
}

std::vector<Permutation> parse_perms(const Field& f, const std::string& key, int points) {
  std::vector<Permutation> out;
  for (const auto& tok : split_tokens(f.value, ";")) {
    try {
      out.push_back(Permutation::from_cycles(points, tok));
    } catch (const HypothesisError& e) {
      throw ParseError(f.line, key, e.what());
    }
  }
  return out;
}

}  // namespace

Scenario parse_scenario(const std::string& text, std::size_t cap) {
  static const std::vector<std::string> known{"name",   "points", "generators",  "tau", "decomposition_generators",
                                              "phi",    "phi_targets", "slopes"};
  std::map<std::string, Field> fields;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(line_no, "", "expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (std::find(known.begin(), known.end(), key) == known.end()) throw ParseError(line_no, key, "unknown key");
    if (fields.count(key)) throw ParseError(line_no, key, "duplicate key");
    fields.emplace(key, Field{line_no, value});
  }
  const std::size_t last = line_no + 1;
  auto require = [&](const std::string& key) -> const Field& {
    auto it = fields.find(key);
    if (it == fields.end()) throw ParseError(last, key, "missing required field");
    return it->second;
  };

  const Field& points_field = require("points");
  const int points = parse_int(points_field, "points");
  if (points < 2 || points % 2 != 0 || points > kMaxPoints) {
    throw ParseError(points_field.line, "points", "must be even, between 2 and " + std::to_string(kMaxPoints));
  }
  const Field& gens_field = require("generators");
  std::vector<Permutation> gens = parse_perms(gens_field, "generators", points);
  const Field& tau_field = require("tau");
  std::vector<Permutation> taus = parse_perms(tau_field, "tau", points);
  if (taus.size() != 1) throw ParseError(tau_field.line, "tau", "expected exactly one permutation");
  const Field& d_field = require("decomposition_generators");
  std::vector<Permutation> dgens = parse_perms(d_field, "decomposition_generators", points);

  Scenario s;
  s.name = fields.count("name") ? fields.at("name").value : "file";
  s.family = "file";
  s.provenance = "file";
  s.g = points / 2;
  CMGaloisModel model;
  try {
    model = CMGaloisModel::create(points, gens, taus[0], cap);
  } catch (const HypothesisError& e) {
    throw ParseError(gens_field.line, "generators", e.what());
  }
  try {
    model = model.with_decomposition(dgens);
  } catch (const HypothesisError& e) {
    throw ParseError(d_field.line, "decomposition_generators", e.what());
  }

  const bool has_phi = fields.count("phi") > 0;
  const bool has_targets = fields.count("phi_targets") > 0;
  if (has_phi == has_targets) throw ParseError(last, "phi", "give exactly one of 'phi' and 'phi_targets'");
  if (has_phi) {
    const Field& f = fields.at("phi");
    try {
      s.phi = IndexSet::from_one_based(parse_int_list(f, "phi"));
      for (int i : s.phi.to_vector()) {
        if (i >= points) throw HypothesisError("index " + std::to_string(i + 1) + " out of range");
      }
      validate_cm_type(model, s.phi);
    } catch (const HypothesisError& e) {
      throw ParseError(f.line, "phi", e.what());
    }
  } else {
    const Field& f = fields.at("phi_targets");
    try {
      auto found = enumerate_cm_types(model, PlacePrescription{parse_int_list(f, "phi_targets")}, 1);
      if (found.empty()) throw HypothesisError("no CM-type meets the targets");
      s.phi = found.front();
    } catch (const HypothesisError& e) {
      throw ParseError(f.line, "phi_targets", e.what());
    }
  }
  s.slopes = slopes_from_cm_type(model, s.phi);
  if (fields.count("slopes")) {
    const Field& f = fields.at("slopes");
    SlopeVector given;
    try {
      for (const auto& tok : split_tokens(f.value, " ,\t")) given.values.push_back(parse_rational(tok));
    } catch (const HypothesisError& e) {
      throw ParseError(f.line, "slopes", e.what());
    }
    if (!(given == s.slopes)) throw ParseError(f.line, "slopes", "slopes do not match the CM-type");
  }
  s.model = std::move(model);
  return s;
}

Scenario load_scenario_file(const std::string& path, std::size_t cap) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "", "cannot open scenario file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), cap);
}

}  // namespace weiltate

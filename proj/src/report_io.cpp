#include "weiltate/report_io.hpp"

#include <iomanip>
#include <nlohmann/json.hpp>
#include <sstream>

#include "weiltate/errors.hpp"

namespace weiltate {

using json = nlohmann::ordered_json;

namespace {

const char* const kClassifyFormat = "weiltate.classify/1";
const char* const kForgeFormat = "weiltate.forge/1";
const char* const kVerifyFormat = "weiltate.verify/1";
const char* const kRhoLabel = "Tate-class counts, identified with cycle-space dimensions by assumption";
const char* const kMildRule = "at least one exotic orbit and every exotic orbit of rank <= 2";

json subset_json(IndexSet s) { return json(s.to_one_based()); }

IndexSet subset_from(const json& j) { return IndexSet::from_one_based(j.get<std::vector<int>>()); }

json poly_json(const IntPolynomial& f) {
  json coeffs = json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(c.get_str());
  return coeffs;
}

IntPolynomial poly_from(const json& j) {
  std::vector<BigInt> c;
  for (const auto& v : j) c.emplace_back(v.get<std::string>());
  return IntPolynomial(std::move(c));
}

json pattern_json(const DegreePattern& d) {
  json parts = json::array();
  for (auto [deg, count] : d.parts) parts.push_back(json::array({deg, count}));
  return json{{"parts", parts}, {"squarefree", d.squarefree}};
}

DegreePattern pattern_from(const json& j) {
  DegreePattern d;
  for (const auto& part : j.at("parts")) d.parts.emplace_back(part.at(0).get<int>(), part.at(1).get<int>());
  d.squarefree = j.at("squarefree").get<bool>();
  return d;
}

std::string big_str(const BigInt& z) { return z.get_str(); }

template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(0, "", std::string("malformed report: ") + e.what());
  } catch (const HypothesisError& e) {
    throw ParseError(0, "", std::string("malformed report: ") + e.what());
  }
}

}  // namespace

ClassifyRun run_classification(const Scenario& scenario, const ClassifyOptions& options) {
  const auto& model = scenario.model;
  ClassifyRun run;
  run.scenario = scenario.name;
  run.family = scenario.family;
  run.provenance = scenario.provenance;
  run.g = scenario.g;
  run.points = model.points();
  run.p = scenario.p;
  run.group_order = model.group().order();
  for (const auto& gen : model.group().generators()) run.generators.push_back(gen.to_cycles());
  run.tau = model.tau().to_cycles();
  for (const auto& gen : model.decomposition_generators()) run.decomposition_generators.push_back(gen.to_cycles());
  run.blocks = model.blocks().blocks;
  run.phi = scenario.phi;
  run.slopes = scenario.slopes;
  run.quadratic_fields = scenario.quadratic_fields;

  ClassifyOptions opts = options;
  opts.phi = scenario.phi;
  run.classifier = classify_orbits(model, scenario.slopes, opts);
  run.endomorphism = honda_tate_endomorphism(model, scenario.slopes);
  run.minimal_field_index = minimal_field_index(model, scenario.slopes);
  run.frobenius_rank = frobenius_rank(model, scenario.slopes);
  if (run.classifier.mildly_exotic) {
    run.structure = structure_check(model, scenario.slopes, run.classifier, run.endomorphism);
  }
  bool have_low_weights = true;
  for (int k = 0; k <= run.g / 2; ++k) have_low_weights = have_low_weights && run.classifier.tate_dims.count(k);
  if (run.g % 2 == 0 && have_low_weights) run.signature = predicted_signature(run.classifier, run.g);
  return run;
}

std::string classify_to_json(const ClassifyRun& run) {
  json scen;
  scen["name"] = run.scenario;
  scen["family"] = run.family;
  scen["provenance"] = run.provenance;
  scen["g"] = run.g;
  scen["points"] = run.points;
  scen["p"] = run.p ? json(*run.p) : json(nullptr);
  scen["group_order"] = run.group_order;
  scen["generators"] = run.generators;
  scen["tau"] = run.tau;
  scen["decomposition_generators"] = run.decomposition_generators;
  json blocks = json::array();
  for (auto b : run.blocks) blocks.push_back(subset_json(b));
  scen["blocks"] = blocks;
  scen["phi"] = subset_json(run.phi);
  scen["slopes"] = slopes_to_strings(run.slopes);
  json quads = json::array();
  for (const auto& [name, d] : run.quadratic_fields) quads.push_back(json{{"name", name}, {"d", d}});
  scen["quadratic_fields"] = quads;

  const auto& c = run.classifier;
  json orbits = json::array();
  for (const auto& o : c.orbits) {
    json members = json::array();
    for (auto m : o.orbit) members.push_back(subset_json(m));
    orbits.push_back(json{{"weight", o.weight},
                          {"representative", subset_json(o.representative)},
                          {"rank", o.rank},
                          {"tate", o.is_tate},
                          {"lefschetz_bearing", o.is_lefschetz_bearing},
                          {"exotic", o.is_exotic},
                          {"hodge_type", o.hodge ? json::array({o.hodge->p, o.hodge->q}) : json(nullptr)},
                          {"balanced", o.hodge ? json(is_balanced(*o.hodge)) : json(nullptr)},
                          {"members", members}});
  }
  json dims = json::array();
  for (auto [k, rho] : c.tate_dims) dims.push_back(json{{"k", k}, {"rho", rho}});
  json wt = json::array();
  for (const auto& e : c.weil_tate) {
    wt.push_back(json{{"subset", subset_json(e.subset)},
                      {"z_order", e.z_order},
                      {"tate", e.is_tate},
                      {"lefschetz_bearing", e.is_lefschetz_bearing},
                      {"exotic", e.is_exotic}});
  }
  json cls{{"g", c.g},
           {"weights", c.weights},
           {"orbits", orbits},
           {"tate_dims", dims},
           {"tate_dims_label", kRhoLabel},
           {"exotic", c.exotic},
           {"mildly_exotic", c.mildly_exotic},
           {"mildly_exotic_rule", kMildRule},
           {"weil_tate", wt},
           {"scht_verdict", to_string(c.verdict)}};

  const auto& e = run.endomorphism;
  json inv = json::array();
  for (const auto& li : e.local_invariants) {
    inv.push_back(json{{"points", subset_json(li.points)},
                       {"archimedean", li.archimedean},
                       {"local_degree", li.local_degree},
                       {"slope", to_string(li.slope)},
                       {"invariant", to_string(li.invariant)}});
  }
  json end{{"frobenius_field_degree", e.frobenius_field_degree},
           {"local_invariants", inv},
           {"index", big_str(e.index)},
           {"commutative", e.commutative},
           {"abelian_variety_dim", big_str(e.abelian_variety_dim)}};

  json doc;
  doc["format"] = kClassifyFormat;
  doc["scenario"] = scen;
  doc["classifier"] = cls;
  doc["endomorphism"] = end;
  doc["minimal_field_index"] = run.minimal_field_index;
  doc["frobenius_rank"] = run.frobenius_rank;
  doc["structure"] = run.structure ? json{{"pass", run.structure->pass},
                                          {"branch", run.structure->branch},
                                          {"violated", run.structure->violated}}
                                   : json(nullptr);
  doc["signature"] = run.signature ? json{{"plus", run.signature->plus},
                                          {"minus", run.signature->minus},
                                          {"label", kRhoLabel}}
                                   : json(nullptr);
  return doc.dump(2) + "\n";
}

ClassifyRun classify_from_json(const std::string& text) {
  return guarded([&] {
    json doc = json::parse(text);
    if (doc.at("format").get<std::string>() != kClassifyFormat) throw ParseError(0, "format", "unexpected format");
    ClassifyRun run;
    const json& scen = doc.at("scenario");
    run.scenario = scen.at("name").get<std::string>();
    run.family = scen.at("family").get<std::string>();
    run.provenance = scen.at("provenance").get<std::string>();
    run.g = scen.at("g").get<int>();
    run.points = scen.at("points").get<int>();
    if (!scen.at("p").is_null()) run.p = scen.at("p").get<std::uint32_t>();
    run.group_order = scen.at("group_order").get<std::size_t>();
    run.generators = scen.at("generators").get<std::vector<std::string>>();
    run.tau = scen.at("tau").get<std::string>();
    run.decomposition_generators = scen.at("decomposition_generators").get<std::vector<std::string>>();
    for (const auto& b : scen.at("blocks")) run.blocks.push_back(subset_from(b));
    run.phi = subset_from(scen.at("phi"));
    for (const auto& v : scen.at("slopes")) run.slopes.values.push_back(parse_rational(v.get<std::string>()));
    for (const auto& q : scen.at("quadratic_fields")) {
      run.quadratic_fields.emplace_back(q.at("name").get<std::string>(), q.at("d").get<std::int64_t>());
    }

    const json& cls = doc.at("classifier");
    auto& c = run.classifier;
    c.g = cls.at("g").get<int>();
    c.weights = cls.at("weights").get<std::vector<int>>();
    for (const auto& o : cls.at("orbits")) {
      MotiveOrbit m;
      m.weight = o.at("weight").get<int>();
      m.representative = subset_from(o.at("representative"));
      m.rank = o.at("rank").get<std::size_t>();
      m.is_tate = o.at("tate").get<bool>();
      m.is_lefschetz_bearing = o.at("lefschetz_bearing").get<bool>();
      m.is_exotic = o.at("exotic").get<bool>();
      if (!o.at("hodge_type").is_null()) m.hodge = HodgeType{o.at("hodge_type").at(0).get<int>(), o.at("hodge_type").at(1).get<int>()};
      for (const auto& mem : o.at("members")) m.orbit.push_back(subset_from(mem));
      c.orbits.push_back(std::move(m));
    }
    for (const auto& d : cls.at("tate_dims")) c.tate_dims[d.at("k").get<int>()] = d.at("rho").get<std::uint64_t>();
    c.exotic = cls.at("exotic").get<std::vector<std::size_t>>();
    c.mildly_exotic = cls.at("mildly_exotic").get<bool>();
    for (const auto& w : cls.at("weil_tate")) {
      WeilTateEntry e;
      e.subset = subset_from(w.at("subset"));
      e.z_order = w.at("z_order").get<std::size_t>();
      e.is_tate = w.at("tate").get<bool>();
      e.is_lefschetz_bearing = w.at("lefschetz_bearing").get<bool>();
      e.is_exotic = w.at("exotic").get<bool>();
      c.weil_tate.push_back(e);
    }
    c.verdict = parse_verdict(cls.at("scht_verdict").get<std::string>());

    const json& end = doc.at("endomorphism");
    auto& e = run.endomorphism;
    e.frobenius_field_degree = end.at("frobenius_field_degree").get<std::size_t>();
    for (const auto& li : end.at("local_invariants")) {
      LocalInvariant l;
      l.points = subset_from(li.at("points"));
      l.archimedean = li.at("archimedean").get<bool>();
      l.local_degree = li.at("local_degree").get<std::size_t>();
      l.slope = parse_rational(li.at("slope").get<std::string>());
      l.invariant = parse_rational(li.at("invariant").get<std::string>());
      e.local_invariants.push_back(l);
    }
    e.index = BigInt(end.at("index").get<std::string>());
    e.commutative = end.at("commutative").get<bool>();
    e.abelian_variety_dim = BigInt(end.at("abelian_variety_dim").get<std::string>());

    run.minimal_field_index = doc.at("minimal_field_index").get<std::size_t>();
    run.frobenius_rank = doc.at("frobenius_rank").get<int>();
    if (!doc.at("structure").is_null()) {
      const json& s = doc.at("structure");
      run.structure = StructureVerdict{s.at("pass").get<bool>(), s.at("branch").get<std::string>(),
                                       s.at("violated").get<std::string>()};
    }
    if (!doc.at("signature").is_null()) {
      const json& s = doc.at("signature");
      run.signature = Signature{s.at("plus").get<std::int64_t>(), s.at("minus").get<std::int64_t>()};
    }
    return run;
  });
}

std::string classify_to_text(const ClassifyRun& run) {
  std::ostringstream os;
  os << "scenario        " << run.scenario << " (" << run.family << ", " << run.provenance << ")\n";
  os << "g               " << run.g << "  points " << run.points << "  |G| " << run.group_order;
  if (run.p) os << "  p " << *run.p;
  os << "\n";
  os << "generators      ";
  for (std::size_t i = 0; i < run.generators.size(); ++i) os << (i ? "; " : "") << run.generators[i];
  os << "\ntau             " << run.tau << "\n";
  os << "D generators    ";
  for (std::size_t i = 0; i < run.decomposition_generators.size(); ++i) {
    os << (i ? "; " : "") << run.decomposition_generators[i];
  }
  os << "\nblocks          ";
  for (std::size_t i = 0; i < run.blocks.size(); ++i) os << (i ? " " : "") << run.blocks[i].to_string();
  os << "\nphi             " << run.phi.to_string() << "\n";
  os << "slopes          ";
  for (std::size_t i = 0; i < run.slopes.size(); ++i) os << (i ? " " : "") << to_string(run.slopes.values[i]);
  os << "\n";
  for (const auto& [name, d] : run.quadratic_fields) os << "quadratic       " << name << " = Q(sqrt " << d << ")\n";

  const auto& c = run.classifier;
  os << "\nTate orbits\n";
  os << std::left << std::setw(8) << "weight" << std::setw(6) << "rank" << std::setw(12) << "kind" << std::setw(10)
     << "hodge" << "representative\n";
  for (const auto& o : c.orbits) {
    std::string hodge = o.hodge ? "(" + std::to_string(o.hodge->p) + "," + std::to_string(o.hodge->q) + ")" : "-";
    os << std::setw(8) << o.weight << std::setw(6) << o.rank << std::setw(12)
       << (o.is_exotic ? "exotic" : "lefschetz") << std::setw(10) << hodge << o.representative.to_string() << "\n";
  }
  os << "\nrho_k (" << kRhoLabel << ")\n";
  for (auto [k, rho] : c.tate_dims) os << "  rho_" << k << " = " << rho << "\n";
  os << "\nexotic orbits   " << c.exotic.size() << "\n";
  os << "mildly exotic   " << (c.mildly_exotic ? "yes" : "no") << " (" << kMildRule << ")\n";
  os << "SCHT verdict    " << to_string(c.verdict) << "\n";
  os << "\nWeil-Tate candidates\n";
  if (c.weil_tate.empty()) os << "  none\n";
  for (const auto& e : c.weil_tate) {
    os << "  |Z| " << e.z_order << "  I_Z " << e.subset.to_string() << "  "
       << (e.is_tate ? (e.is_exotic ? "tate, exotic" : "tate, lefschetz-bearing") : "not tate") << "\n";
  }

  const auto& e = run.endomorphism;
  os << "\nendomorphism algebra\n";
  os << "  [F:Q]         " << e.frobenius_field_degree << "\n";
  for (const auto& li : e.local_invariants) {
    os << "  place         " << (li.archimedean ? std::string("real") : li.points.to_string()) << "  degree "
       << li.local_degree << "  slope " << to_string(li.slope) << "  inv " << to_string(li.invariant) << "\n";
  }
  os << "  index m       " << e.index.get_str() << (e.commutative ? " (commutative)" : " (noncommutative)") << "\n";
  os << "  dimension     " << e.abelian_variety_dim.get_str() << "\n";
  os << "\nminimal field index  " << run.minimal_field_index << "\n";
  os << "Frobenius rank       " << run.frobenius_rank << "\n";
  if (run.structure) {
    os << "structure check      " << (run.structure->pass ? "PASS" : "FAIL") << " (" << run.structure->branch
       << (run.structure->violated.empty() ? "" : ": " + run.structure->violated) << ")\n";
  }
  if (run.signature) {
    os << "predicted signature  (" << run.signature->plus << ", " << run.signature->minus << ")\n";
  }
  return os.str();
}

std::string forge_to_json(const ForgedField& f) {
  const auto& c = f.certificates;
  json certs{{"pattern_at_p", pattern_json(c.pattern_at_p)},
             {"pattern_at_l", pattern_json(c.pattern_at_l)},
             {"pattern_at_lp", pattern_json(c.pattern_at_lp)},
             {"roots_at_lp", c.roots_at_lp},
             {"pattern_at_aux", pattern_json(c.pattern_at_aux)},
             {"real_root_count", c.real_root_count},
             {"galois_is_sg", c.galois_is_sg}};
  json doc{{"format", kForgeFormat},
           {"g", f.g},
           {"p", f.p},
           {"l", f.l},
           {"lp", f.lp},
           {"aux", f.aux},
           {"seed", f.seed},
           {"spread", big_str(f.spread)},
           {"polynomial", f.poly.to_string()},
           {"coefficients", poly_json(f.poly)},
           {"certificates", certs}};
  return doc.dump(2) + "\n";
}

ForgedField forge_from_json(const std::string& text) {
  return guarded([&] {
    json doc = json::parse(text);
    if (doc.at("format").get<std::string>() != kForgeFormat) throw ParseError(0, "format", "unexpected format");
    ForgedField f;
    f.g = doc.at("g").get<int>();
    f.p = doc.at("p").get<std::uint32_t>();
    f.l = doc.at("l").get<std::uint32_t>();
    f.lp = doc.at("lp").get<std::uint32_t>();
    f.aux = doc.at("aux").get<std::uint32_t>();
    f.seed = doc.at("seed").get<std::uint64_t>();
    f.spread = BigInt(doc.at("spread").get<std::string>());
    f.poly = poly_from(doc.at("coefficients"));
    const json& c = doc.at("certificates");
    f.certificates.pattern_at_p = pattern_from(c.at("pattern_at_p"));
    f.certificates.pattern_at_l = pattern_from(c.at("pattern_at_l"));
    f.certificates.pattern_at_lp = pattern_from(c.at("pattern_at_lp"));
    f.certificates.roots_at_lp = c.at("roots_at_lp").get<int>();
    f.certificates.pattern_at_aux = pattern_from(c.at("pattern_at_aux"));
    f.certificates.real_root_count = c.at("real_root_count").get<int>();
    f.certificates.galois_is_sg = c.at("galois_is_sg").get<bool>();
    return f;
  });
}

std::string forge_to_text(const ForgedField& f) {
  const auto& c = f.certificates;
  std::ostringstream os;
  os << "polynomial      " << f.poly.to_string() << "\n";
  os << "g " << f.g << "  p " << f.p << "  l " << f.l << "  l' " << f.lp;
  if (f.aux) os << "  aux " << f.aux;
  os << "  seed " << f.seed << "  K " << f.spread.get_str() << "\n";
  os << "mod p           " << c.pattern_at_p.to_string() << "\n";
  os << "mod l           " << c.pattern_at_l.to_string() << "\n";
  os << "mod l'          " << c.pattern_at_lp.to_string() << ", " << c.roots_at_lp << " distinct roots\n";
  if (f.aux) os << "mod aux         " << c.pattern_at_aux.to_string() << "\n";
  os << "real roots      " << c.real_root_count << "\n";
  os << "Galois group    " << (c.galois_is_sg ? "S_g (certified)" : "not certified") << "\n";
  return os.str();
}

std::string verify_to_json(const VerifyRun& run) {
  json lemmas = json::array();
  for (const auto& r : run.lemmas.results) {
    lemmas.push_back(json{{"instance", r.instance}, {"lemma", r.lemma}, {"status", to_string(r.status)},
                          {"detail", r.detail}});
  }
  json mism = json::array();
  for (const auto& m : run.oracles.mismatches) {
    mism.push_back(json{{"instance", m.instance}, {"check", m.check}, {"detail", m.detail}});
  }
  json doc{{"format", kVerifyFormat},
           {"lemmas", lemmas},
           {"oracles", json{{"instances", run.oracles.instances},
                            {"comparisons", run.oracles.comparisons},
                            {"mismatches", mism}}},
           {"any_fail", run.lemmas.any_fail() || !run.oracles.mismatches.empty()}};
  return doc.dump(2) + "\n";
}

std::string verify_to_text(const VerifyRun& run) {
  std::ostringstream os;
  if (!run.lemmas.results.empty()) {
    os << std::left << std::setw(24) << "instance" << std::setw(22) << "lemma" << std::setw(16) << "status"
       << "detail\n";
    for (const auto& r : run.lemmas.results) {
      os << std::setw(24) << r.instance << std::setw(22) << r.lemma << std::setw(16) << to_string(r.status) << r.detail
         << "\n";
    }
  }
  if (run.oracles.instances > 0) {
    os << "oracle instances " << run.oracles.instances << ", comparisons " << run.oracles.comparisons
       << ", mismatches " << run.oracles.mismatches.size() << "\n";
    for (const auto& m : run.oracles.mismatches) os << "  " << m.instance << " " << m.check << ": " << m.detail << "\n";
  }
  if (run.lemmas.results.empty() && run.oracles.instances == 0) os << "nothing to verify\n";
  return os.str();
}

}  // namespace weiltate

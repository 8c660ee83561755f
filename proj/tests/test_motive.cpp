#include <gtest/gtest.h>

#include "weiltate/errors.hpp"
#include "weiltate/lemma_suite.hpp"
#include "weiltate/motive.hpp"
#include "weiltate/scenario.hpp"

using namespace weiltate;

namespace {

ClassifyOptions with_phi(const Scenario& s) {
  ClassifyOptions o;
  o.phi = s.phi;
  return o;
}

std::vector<const MotiveOrbit*> exotic_orbits(const ClassifierReport& r) {
  std::vector<const MotiveOrbit*> out;
  for (auto i : r.exotic) out.push_back(&r.orbits[i]);
  return out;
}

SlopeVector ordinary_slopes(int g) {
  SlopeVector s;
  for (int i = 0; i < 2 * g; ++i) s.values.push_back(make_rational(i < g ? 0 : 1));
  return s;
}

CMGaloisModel elliptic_model() {
  auto t = Permutation::from_cycles(2, "(1 2)");
  return CMGaloisModel::create(2, {t}, t).with_decomposition({t});
}

}  // namespace

TEST(TateSubsets, Examples) {
  auto s = scenario_main(4, 5);
  EXPECT_TRUE(is_tate_subset(s.model, s.slopes, IndexSet::from_one_based({1, 2, 3, 4})));
  for (int i = 0; i < 8; ++i) {
    IndexSet pair;
    pair.insert(i);
    pair.insert(s.model.tau_of(i));
    EXPECT_TRUE(is_tate_subset(s.model, s.slopes, pair));
    EXPECT_TRUE(is_lefschetz_subset(s.model, s.slopes, pair));
  }
  EXPECT_FALSE(is_tate_subset(s.model, s.slopes, IndexSet::from_one_based({1, 3})));
  EXPECT_FALSE(is_tate_subset(s.model, s.slopes, IndexSet::from_one_based({1, 2, 3})));
  EXPECT_FALSE(is_lefschetz_subset(s.model, s.slopes, IndexSet::from_one_based({1, 2, 3, 4})));
}

TEST(Classifier, MainFour) {
  auto s = scenario_main(4, 5);
  auto r = classify_orbits(s.model, s.slopes, with_phi(s));
  auto ex = exotic_orbits(r);
  ASSERT_EQ(ex.size(), 1u);
  EXPECT_EQ(ex[0]->weight, 4);
  EXPECT_EQ(ex[0]->rank, 2u);
  EXPECT_EQ(ex[0]->representative, IndexSet::from_one_based({1, 2, 3, 4}));
  EXPECT_EQ(ex[0]->hodge, (HodgeType{3, 1}));
  EXPECT_TRUE(r.mildly_exotic);
  EXPECT_EQ(r.verdict, SchtVerdict::ApplicableMildlyExotic);
  EXPECT_EQ(r.tate_dims.at(0), 1u);
  EXPECT_EQ(r.tate_dims.at(1), 4u);
  EXPECT_EQ(r.tate_dims.at(2), 8u);

  std::size_t weight2 = 0;
  for (const auto& o : r.orbits) {
    if (o.weight != 2) continue;
    ++weight2;
    EXPECT_EQ(o.rank, 4u);
    EXPECT_TRUE(o.is_lefschetz_bearing);
  }
  EXPECT_EQ(weight2, 1u);
  EXPECT_EQ(predicted_signature(r, 4), (Signature{5, 3}));
}

TEST(Classifier, TateCountsMatchDirectEnumeration) {
  for (const auto& s : {scenario_main(4, 5), scenario_ramified(3, 5), scenario_split(3, 5)}) {
    auto r = classify_orbits(s.model, s.slopes);
    std::map<int, std::uint64_t> direct;
    for (std::uint32_t bits = 0; bits < (1u << s.model.points()); ++bits) {
      IndexSet i(bits);
      if (i.size() % 2 != 0) continue;
      // every conjugate has slope sum |I|/2
      bool tate = true;
      for (const auto& e : s.model.group().elements()) {
        BigRational sum = 0;
        for (int p : e.apply(i).to_vector()) sum += s.slopes[p];
        if (sum * 2 != i.size()) {
          tate = false;
          break;
        }
      }
      if (tate) direct[i.size() / 2]++;
    }
    EXPECT_EQ(r.tate_dims, direct) << s.name;
  }
}

TEST(Classifier, DualityAndComplements) {
  for (const auto& s : {scenario_main(4, 5), scenario_main(6, 5), scenario_ramified(3, 5), scenario_split(3, 5)}) {
    auto r = classify_orbits(s.model, s.slopes);
    const int g = s.model.g();
    for (int k = 0; k <= g; ++k) EXPECT_EQ(r.tate_dims.at(k), r.tate_dims.at(g - k)) << s.name << " k=" << k;
    for (const auto& o : r.orbits) {
      auto comp = o.representative.complement(s.model.points());
      EXPECT_TRUE(is_tate_subset(s.model, s.slopes, comp));
    }
  }
}

TEST(Classifier, OrdinaryIsLefschetzOnly) {
  auto model = cm_product_group(4);
  auto r = classify_orbits(model, ordinary_slopes(4));
  EXPECT_TRUE(r.exotic.empty());
  EXPECT_FALSE(r.mildly_exotic);
  EXPECT_EQ(r.verdict, SchtVerdict::LefschetzOnly);
  EXPECT_THROW(structure_check(model, ordinary_slopes(4), r, EndAlgebraReport{}), HypothesisError);
}

TEST(Classifier, WeightFilterAndCap) {
  auto s = scenario_main(6, 5);
  ClassifyOptions o;
  o.weights = std::vector<int>{6};
  auto r = classify_orbits(s.model, s.slopes, o);
  EXPECT_EQ(r.weights, (std::vector<int>{6}));
  ASSERT_EQ(r.exotic.size(), 1u);
  EXPECT_EQ(r.orbits[r.exotic[0]].rank, 2u);
  o.weights = std::vector<int>{3};
  EXPECT_THROW(classify_orbits(s.model, s.slopes, o), HypothesisError);
  ClassifyOptions small;
  small.max_points = 10;
  EXPECT_THROW(classify_orbits(s.model, s.slopes, small), CapExceeded);
}

TEST(Classifier, DeterministicAcrossWorkers) {
  auto s = scenario_split(3, 5);
  auto base = classify_orbits(s.model, s.slopes, with_phi(s));
  for (unsigned w : {2u, 3u, 8u}) {
    auto o = with_phi(s);
    o.workers = w;
    EXPECT_EQ(classify_orbits(s.model, s.slopes, o), base);
  }
}

TEST(Classifier, MainSixAndRamifiedAndSplit) {
  auto m6 = scenario_main(6, 5);
  auto r6 = classify_orbits(m6.model, m6.slopes, with_phi(m6));
  auto ex6 = exotic_orbits(r6);
  ASSERT_EQ(ex6.size(), 1u);
  EXPECT_EQ(ex6[0]->weight, 6);
  EXPECT_EQ(ex6[0]->rank, 2u);
  EXPECT_EQ(ex6[0]->hodge, (HodgeType{4, 2}));

  auto ram = scenario_ramified(3, 5);
  auto rr = classify_orbits(ram.model, ram.slopes);
  auto exr = exotic_orbits(rr);
  ASSERT_EQ(exr.size(), 1u);
  EXPECT_EQ(exr[0]->representative, IndexSet::from_one_based({1, 2, 3, 4, 5, 6}));

  auto sp = scenario_split(3, 5);
  auto rs = classify_orbits(sp.model, sp.slopes);
  auto exs = exotic_orbits(rs);
  ASSERT_EQ(exs.size(), 2u);
  for (auto* o : exs) EXPECT_EQ(o->rank, 2u);
}

TEST(WeilTate, Entries) {
  auto m = scenario_main(4, 5);
  auto wm = weil_tate_submotives(m.model, m.slopes);
  ASSERT_EQ(wm.size(), 1u);
  EXPECT_TRUE(wm[0].is_tate);
  EXPECT_TRUE(wm[0].is_exotic);
  EXPECT_EQ(wm[0].subset, IndexSet::from_one_based({1, 2, 3, 4}));

  auto sp = scenario_split(3, 5);
  auto ws = weil_tate_submotives(sp.model, sp.slopes);
  ASSERT_EQ(ws.size(), 2u);
  for (const auto& e : ws) {
    EXPECT_TRUE(e.is_tate);
    EXPECT_TRUE(e.is_exotic);
  }

  auto ram = scenario_ramified(3, 5);
  auto wr = weil_tate_submotives(ram.model, ram.slopes);
  ASSERT_EQ(wr.size(), 2u);
  EXPECT_TRUE(wr[0].is_exotic);
  EXPECT_EQ(wr[0].subset, IndexSet::from_one_based({1, 2, 3, 4, 5, 6}));
  EXPECT_TRUE(wr[1].is_tate);
  EXPECT_TRUE(wr[1].is_lefschetz_bearing);
  EXPECT_FALSE(wr[1].is_exotic);

  auto tau = Permutation::from_cycles(4, "(1 3)(2 4)");
  auto cyclic = CMGaloisModel::create(4, {Permutation::from_cycles(4, "(1 2 3 4)")}, tau);
  EXPECT_TRUE(weil_tate_submotives(cyclic, constant_slopes(4, make_rational(1, 2))).empty());
}

TEST(HondaTate, Invariants) {
  auto ram = scenario_ramified(3, 5);
  auto er = honda_tate_endomorphism(ram.model, ram.slopes);
  std::vector<BigRational> inv;
  for (const auto& li : er.local_invariants) inv.push_back(li.invariant);
  EXPECT_EQ(inv, (std::vector<BigRational>{make_rational(1, 2), make_rational(1, 2), make_rational(0)}));
  EXPECT_EQ(er.index, 2);
  EXPECT_FALSE(er.commutative);
  EXPECT_EQ(er.frobenius_field_degree, 6u);
  EXPECT_EQ(er.abelian_variety_dim, 6);

  auto m = scenario_main(4, 5);
  auto em = honda_tate_endomorphism(m.model, m.slopes);
  EXPECT_EQ(em.index, 1);
  EXPECT_TRUE(em.commutative);
  EXPECT_EQ(em.frobenius_field_degree, 8u);
  EXPECT_EQ(em.abelian_variety_dim, 4);

  auto sp = scenario_split(3, 5);
  auto es = honda_tate_endomorphism(sp.model, sp.slopes);
  EXPECT_TRUE(es.commutative);
  EXPECT_EQ(es.frobenius_field_degree, 12u);

  auto ell = elliptic_model();
  auto ee = honda_tate_endomorphism(ell, constant_slopes(2, make_rational(1, 2)));
  EXPECT_EQ(ee.index, 2);
  EXPECT_EQ(ee.abelian_variety_dim, 1);
  ASSERT_FALSE(ee.local_invariants.empty());
  EXPECT_EQ(ee.local_invariants.front().invariant, make_rational(1, 2));
  BigRational total = 0;
  for (const auto& li : ee.local_invariants) total += li.invariant;
  EXPECT_EQ(frac(total), 0);
}

TEST(HondaTate, InvariantsSumToAnInteger) {
  for (const auto& s : {scenario_main(4, 5), scenario_main(6, 5), scenario_ramified(3, 5), scenario_split(3, 5)}) {
    auto e = honda_tate_endomorphism(s.model, s.slopes);
    BigRational total = 0;
    for (const auto& li : e.local_invariants) total += li.invariant;
    EXPECT_EQ(frac(total), 0) << s.name;
  }
}

TEST(StructureCheck, Branches) {
  auto m = scenario_main(4, 5);
  auto rm = classify_orbits(m.model, m.slopes);
  auto vm = structure_check(m.model, m.slopes, rm, honda_tate_endomorphism(m.model, m.slopes));
  EXPECT_TRUE(vm.pass);
  EXPECT_EQ(vm.branch, "commutative");

  auto ram = scenario_ramified(3, 5);
  auto rr = classify_orbits(ram.model, ram.slopes);
  auto vr = structure_check(ram.model, ram.slopes, rr, honda_tate_endomorphism(ram.model, ram.slopes));
  EXPECT_TRUE(vr.pass);
  EXPECT_EQ(vr.branch, "noncommutative");
}

TEST(Signature, AlternatingSum) {
  ClassifierReport r;
  r.tate_dims = {{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}};
  EXPECT_EQ(predicted_signature(r, 4), (Signature{1, 0}));
  EXPECT_THROW(predicted_signature(r, 3), HypothesisError);
  r.tate_dims.erase(2);
  EXPECT_THROW(predicted_signature(r, 4), HypothesisError);
}

TEST(LemmaSuite, Presets) {
  std::vector<LemmaInstance> instances;
  for (const auto& s : {scenario_main(4, 5), scenario_ramified(3, 5)}) {
    instances.push_back({s.name, s.family, s.model, s.slopes});
  }
  auto result = verify_lemma_suite(instances);
  EXPECT_FALSE(result.any_fail());
  ASSERT_EQ(result.results.size(), 8u);
  for (const auto& r : result.results) {
    if (r.instance == "ramified(g'=3)" && r.lemma == "uniqueness") EXPECT_EQ(r.status, LemmaStatus::Pass);
    if (r.instance == "main(g=4)" && r.lemma != "uniqueness") EXPECT_EQ(r.status, LemmaStatus::Pass);
  }
}

TEST(LemmaSuite, SkipsWhenHypothesesFail) {
  auto model = cm_product_group(3);
  auto result = verify_lemma_suite({{"ordinary", "random", model, ordinary_slopes(3)}});
  for (const auto& r : result.results) EXPECT_EQ(r.status, LemmaStatus::NotApplicable) << r.lemma;
  EXPECT_EQ(to_string(LemmaStatus::NotApplicable), "NOT_APPLICABLE");
}

TEST(Verdict, StringRoundTrip) {
  for (auto v : {SchtVerdict::ApplicableMildlyExotic, SchtVerdict::LefschetzOnly, SchtVerdict::NotDecided}) {
    EXPECT_EQ(parse_verdict(to_string(v)), v);
  }
  EXPECT_THROW(parse_verdict("MAYBE"), Error);
}

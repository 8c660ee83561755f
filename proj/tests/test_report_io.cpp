#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <memory>

#include "weiltate/errors.hpp"
#include "weiltate/report_io.hpp"

using namespace weiltate;

namespace {

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(WEILTATE_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

ClassifyRun classify_preset(const Scenario& s, unsigned workers = 1) {
  ClassifyOptions o;
  o.workers = workers;
  return run_classification(s, o);
}

}  // namespace

TEST(ClassifyJson, RoundTripsEveryPreset) {
  for (const auto& s : {scenario_main(4, 5), scenario_main(6, 5), scenario_ramified(3, 5), scenario_split(3, 5)}) {
    auto run = classify_preset(s);
    auto json = classify_to_json(run);
    auto back = classify_from_json(json);
    EXPECT_EQ(back, run) << s.name;
    EXPECT_EQ(classify_to_json(back), json);
  }
}

TEST(ClassifyJson, TextAndJsonCarryTheSameFacts) {
  auto run = classify_preset(scenario_ramified(3, 5));
  auto text = classify_to_text(run);
  auto json = classify_to_json(run);
  for (const std::string fact : {"APPLICABLE_MILDLY_EXOTIC", "1/2", "noncommutative"}) {
    EXPECT_NE(text.find(fact), std::string::npos) << fact;
    EXPECT_NE(json.find(fact), std::string::npos) << fact;
  }
  // subsets are "{1, 2}" in text and [1, 2] in json
  const auto& exotic = run.classifier.orbits.at(run.classifier.exotic.at(0)).representative;
  EXPECT_NE(text.find(exotic.to_string()), std::string::npos);
  EXPECT_EQ(classify_from_json(json).classifier.orbits.at(run.classifier.exotic.at(0)).representative, exotic);
}

TEST(ClassifyJson, RejectsMalformedDocuments) {
  EXPECT_THROW(classify_from_json("{"), ParseError);
  EXPECT_THROW(classify_from_json("{\"format\": \"something else\"}"), ParseError);
  auto json = classify_to_json(classify_preset(scenario_main(4, 5)));
  auto pos = json.find("\"scht_verdict\"");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_THROW(classify_from_json(json.substr(0, pos) + "\"scht_verdict_x\"" + json.substr(pos + 14)), ParseError);
}

TEST(ClassifyJson, ByteIdenticalAcrossWorkerCounts) {
  auto s = scenario_main(6, 5);
  const auto base = classify_to_json(classify_preset(s, 1));
  for (unsigned w : {2u, 4u}) EXPECT_EQ(classify_to_json(classify_preset(s, w)), base);
}

TEST(ForgeJson, RoundTrip) {
  auto f = forge_totally_real(6, 7, 11, 13, 2);
  auto json = forge_to_json(f);
  auto back = forge_from_json(json);
  EXPECT_EQ(back.poly, f.poly);
  EXPECT_EQ(back.certificates, f.certificates);
  EXPECT_EQ(back.spread, f.spread);
  EXPECT_EQ(forge_to_json(back), json);
  EXPECT_NE(forge_to_text(f).find(f.poly.to_string()), std::string::npos);
}

TEST(Cli, Forge) {
  auto ok = run_cli("forge --g 4 --p 5 --l 7 --lp 11 --seed 0 --format json");
  EXPECT_EQ(ok.status, 0);
  EXPECT_NE(ok.out.find("weiltate.forge/1"), std::string::npos);
  EXPECT_EQ(run_cli("forge --g 3 --p 5 --l 7 --lp 11").status, 3);
  EXPECT_EQ(run_cli("forge --g 4 --p 5 --l 5 --lp 7").status, 3);
  EXPECT_EQ(run_cli("forge --g 4").status, 2);
}

TEST(Cli, Classify) {
  auto main4 = run_cli("classify --preset main --g 4 --p 5");
  EXPECT_EQ(main4.status, 0);
  EXPECT_NE(main4.out.find("exotic orbits   1"), std::string::npos);
  EXPECT_NE(main4.out.find("APPLICABLE_MILDLY_EXOTIC"), std::string::npos);
  auto ram = run_cli("classify --preset ramified --gp 3 --p 5");
  EXPECT_EQ(ram.status, 0);
  EXPECT_NE(ram.out.find("noncommutative"), std::string::npos);
  EXPECT_EQ(run_cli("classify --preset main --g 6 --max-points 10").status, 4);
  EXPECT_EQ(run_cli("classify --preset nope").status, 2);
  EXPECT_EQ(run_cli("classify").status, 2);
}

TEST(Cli, ClassifyMalformedFile) {
  const std::string path = ::testing::TempDir() + "weiltate_bad.scn";
  {
    std::ofstream out(path);
    out << "name = bad\npoints = 8\ngenerators = (1 2 3\n";
  }
  auto r = run_cli("classify --file " + path);
  EXPECT_EQ(r.status, 6);
  const std::string err_cmd = std::string(WEILTATE_CLI_PATH) + " classify --file " + path + " 2>&1";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(err_cmd.c_str(), "r"), pclose);
  std::string err;
  std::array<char, 512> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe.get())) err += buf.data();
  EXPECT_NE(err.find("line 3"), std::string::npos) << err;
  EXPECT_NE(err.find("generators"), std::string::npos) << err;
}

TEST(Cli, Verify) {
  auto all = run_cli("verify --presets all");
  EXPECT_EQ(all.status, 0);
  EXPECT_EQ(all.out.find("FAIL"), std::string::npos);
  auto rnd = run_cli("verify --random 100 --g 3 --seed 1 --format json");
  EXPECT_EQ(rnd.status, 0);
  EXPECT_NE(rnd.out.find("\"mismatches\": []"), std::string::npos);
  EXPECT_EQ(run_cli("verify --random 0").status, 0);
}

TEST(Cli, EnvironmentCapOverride) {
  EXPECT_EQ(run_cli("classify --preset main --g 4").status, 0);
  EXPECT_EQ(run_cli("classify --preset main --g 4", "WEILTATE_MAX_GROUP=10").status, 4);
  EXPECT_EQ(run_cli("classify --preset main --g 4 --max-group 100", "WEILTATE_MAX_GROUP=10").status, 0);
  EXPECT_EQ(run_cli("classify --preset main --g 6", "WEILTATE_MAX_POINTS=10").status, 4);
  EXPECT_EQ(run_cli("classify --preset main --g 4", "WEILTATE_MAX_GROUP=zero").status, 2);
  EXPECT_EQ(run_cli("classify --help").status, 0);
}

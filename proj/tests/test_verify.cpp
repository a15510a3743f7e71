#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gmod/verify.hpp"

using namespace gmod;

namespace {

const std::vector<std::string> kPassingSuites = {
    "lemma-key", "tau-triangles", "thm1",     "sod-theta",
    "lemma-main1", "sod-chart",   "decompose"};

const std::vector<ClaimReport>& cached_run(const std::string& suite) {
  static std::map<std::string, std::vector<ClaimReport>> cache;
  auto it = cache.find(suite);
  if (it == cache.end())
    it = cache.emplace(suite, run_suite(suite, SuiteConfig{})).first;
  return it->second;
}

std::string golden_dir() {
  if (const char* env = std::getenv("GMOD_CORPUS_DIR")) return env;
  return GMOD_GOLDEN_DIR;
}

}  // namespace

TEST_CASE("config plumbing") {
  SuiteConfig cfg;
  CHECK(parse_window("-3..5", cfg.window));
  CHECK(cfg.window.lo == -3);
  CHECK(cfg.window.hi == 5);
  CHECK(!parse_window("5..-3", cfg.window));
  CHECK(!parse_window("junk", cfg.window));

  std::string path = "/tmp/gmod_test_config.txt";
  {
    std::ofstream out(path);
    out << "# sample config\n"
        << "l = 2 3\n"
        << "divisor = 5\n"
        << "window = -2..2\n"
        << "depth = 4\n"
        << "quiet = true\n";
  }
  SuiteConfig c2;
  std::string err;
  REQUIRE(apply_config_file(path, c2, err));
  CHECK(c2.ls == std::vector<long>{2, 3});
  CHECK(c2.divisors == std::vector<long>{5});
  CHECK(c2.window.lo == -2);
  CHECK(c2.depth == 4);
  CHECK(c2.quiet);

  {
    std::ofstream out(path);
    out << "nonsense line\n";
  }
  CHECK(!apply_config_file(path, c2, err));
  CHECK(!err.empty());
  CHECK(!apply_config_file("/tmp/gmod_no_such_file", c2, err));
}

TEST_CASE("invalid configs are rejected") {
  SuiteConfig cfg;
  cfg.ls = {1};
  CHECK_THROWS_AS(run_suite("lemma-key", cfg), std::invalid_argument);
  cfg = SuiteConfig{};
  cfg.depth = 1;
  CHECK_THROWS_AS(run_suite("lemma-key", cfg), std::invalid_argument);
  cfg = SuiteConfig{};
  cfg.window = {3, -3};
  CHECK_THROWS_AS(run_suite("lemma-key", cfg), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("no-such-suite", SuiteConfig{}),
                  std::invalid_argument);
}

TEST_CASE("exit code contract") {
  ClaimReport p{"a", "", {}, "pass", "w"};
  ClaimReport f{"b", "", {}, "fail", ""};
  ClaimReport i{"c", "", {}, "inconclusive", ""};
  CHECK(reports_exit_code({p, p}) == 0);
  CHECK(reports_exit_code({p, f, i}) == 1);
  CHECK(reports_exit_code({p, i}) == 3);
  CHECK(reports_exit_code({}) == 0);
}

TEST_CASE("every suite passes under the default config") {
  for (const std::string& s : kPassingSuites) {
    const auto& reps = cached_run(s);
    REQUIRE(!reps.empty());
    for (const ClaimReport& r : reps) {
      INFO(r.id, ": ", r.status, "\n", r.witness);
      CHECK(r.status == "pass");
      CHECK(!r.witness.empty());  // pass requires a witness
    }
    CHECK(reports_exit_code(reps) == 0);
  }
}

TEST_CASE("the alternative index conventions are recorded as failing") {
  const auto& reps = cached_run("alt-conventions");
  REQUIRE(!reps.empty());
  for (const ClaimReport& r : reps) {
    INFO(r.id);
    CHECK(r.status == "fail");
  }
  CHECK(reports_exit_code(reps) == 1);
}

TEST_CASE("reports are byte-identical across runs") {
  SuiteConfig cfg;
  for (const std::string& s : suite_names()) {
    std::string a = report_json(s, cfg, cached_run(s));
    std::string b = report_json(s, cfg, run_suite(s, cfg));
    CHECK(a == b);
  }
}

TEST_CASE("reports match the stored corpus") {
  SuiteConfig cfg;
  for (const std::string& s : suite_names()) {
    std::ifstream in(golden_dir() + "/" + s + ".json");
    REQUIRE_MESSAGE(in.good(), "missing golden file for ", s);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK_MESSAGE(report_json(s, cfg, cached_run(s)) == buf.str(),
                  "golden mismatch for ", s);
  }
}

TEST_CASE("json report shape") {
  SuiteConfig cfg;
  std::string j = report_json("lemma-key", cfg, cached_run("lemma-key"));
  CHECK(j.find("\"schema\": 1") != std::string::npos);
  CHECK(j.find("\"suite\": \"lemma-key\"") != std::string::npos);
  CHECK(j.find("\"claims\"") != std::string::npos);
  std::string t = report_text(cached_run("lemma-key"));
  CHECK(t.find("[pass] lemma-key/push-structure") != std::string::npos);
}

TEST_CASE("decompose object direct call") {
  long l = 2;
  Module m = wedge_right(0, GT{{0, free_group(1)}}, l);
  ClaimReport r = decompose_object(m, 0, l, SuiteConfig{}, "block0");
  CHECK(r.status == "pass");
  CHECK(r.params.at("object") == "block0");
  Module bad = free_module(point_g(), {{{0}}});
  CHECK_THROWS_AS(decompose_object(bad, 0, l, SuiteConfig{}),
                  std::invalid_argument);
}

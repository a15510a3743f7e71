#pragma once

#include <map>
#include <string>
#include <vector>

#include "gmod/charts.hpp"
#include "gmod/tau.hpp"

namespace gmod {

// Named verification suites: each runs a fixed list of identity checks at
// desk scale and reports per-claim outcomes. All computation is exact, all
// iteration orders fixed, so reports are byte-identical across runs.

struct SuiteConfig {
  std::vector<long> ls = {2, 3};        // cover degrees, each >= 2
  std::vector<long> divisors = {4, 5};  // chart branch orders
  Window window{-4, 4};
  int depth = 8;  // homological depth bound, >= 2
  std::string json_path;
  bool quiet = false;
};

struct ClaimReport {
  std::string id;
  std::string statement;  // the identity being checked, in plain words
  std::map<std::string, std::string> params;
  std::string status;   // "pass" | "fail" | "inconclusive"
  std::string witness;  // serialized tables/groups backing the status
};

const std::vector<std::string>& suite_names();

// Runs one suite; throws std::invalid_argument on unknown suite or invalid
// config. Certificate shortfalls surface as status "inconclusive".
std::vector<ClaimReport> run_suite(const std::string& suite,
                                   const SuiteConfig& cfg);

// Filtration bookkeeping for one object over the graded line: transforms m
// along the kernel chain, realizes each step as a cone, and checks the
// degreewise alternating-rank identity against the cover round trip.
ClaimReport decompose_object(const Module& m, long i, long l,
                             const SuiteConfig& cfg,
                             const std::string& label = "object");

std::string report_text(const std::vector<ClaimReport>& reps);
std::string report_json(const std::string& suite, const SuiteConfig& cfg,
                        const std::vector<ClaimReport>& reps);
// 0 all pass, 1 any fail, 3 no fail but some inconclusive.
int reports_exit_code(const std::vector<ClaimReport>& reps);

// key = value lines, '#' comments; keys: l, divisor (repeatable via
// space-separated lists), window (LO..HI), depth, json, quiet.
// Returns false and sets err on malformed input.
bool apply_config_file(const std::string& path, SuiteConfig& cfg,
                       std::string& err);
bool parse_window(const std::string& text, Window& w);

}  // namespace gmod

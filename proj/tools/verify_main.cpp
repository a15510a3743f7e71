#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "gmod/verify.hpp"

int main(int argc, char** argv) {
  CLI::App app{"run exact verification suites for the graded module calculus"};
  std::string suite;
  std::vector<long> ls, divisors;
  std::string window_text, config_path, json_path;
  int depth = -1;
  bool quiet = false;

  std::string suite_list;
  for (const std::string& s : gmod::suite_names())
    suite_list += (suite_list.empty() ? "" : ", ") + s;
  app.add_option("suite", suite, "one of: " + suite_list)->required();
  app.add_option("--l", ls, "cover degrees to check (repeatable)");
  app.add_option("--divisor", divisors, "chart branch orders (repeatable)");
  app.add_option("--window", window_text, "degree window LO..HI");
  app.add_option("--depth", depth, "homological depth bound");
  app.add_option("--config", config_path, "key = value config file");
  app.add_option("--json", json_path, "write the JSON report here");
  app.add_flag("--quiet", quiet, "suppress the per-claim text report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  gmod::SuiteConfig cfg;
  if (!config_path.empty()) {
    std::string err;
    if (!gmod::apply_config_file(config_path, cfg, err)) {
      std::cerr << "config error: " << err << "\n";
      return 2;
    }
  }
  if (!ls.empty()) cfg.ls = ls;
  if (!divisors.empty()) cfg.divisors = divisors;
  if (!window_text.empty() && !gmod::parse_window(window_text, cfg.window)) {
    std::cerr << "config error: bad window " << window_text << "\n";
    return 2;
  }
  if (depth >= 0) cfg.depth = depth;
  if (!json_path.empty()) cfg.json_path = json_path;
  cfg.quiet = cfg.quiet || quiet;

  std::vector<gmod::ClaimReport> reps;
  auto t0 = std::chrono::steady_clock::now();
  try {
    reps = gmod::run_suite(suite, cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();

  if (!cfg.quiet) std::cout << gmod::report_text(reps);
  if (!cfg.json_path.empty()) {
    std::ofstream out(cfg.json_path);
    if (!out) {
      std::cerr << "config error: cannot write " << cfg.json_path << "\n";
      return 2;
    }
    out << gmod::report_json(suite, cfg, reps);
  }
  int code = gmod::reports_exit_code(reps);
  if (!cfg.quiet)
    std::cout << suite << ": " << reps.size() << " claims, exit " << code
              << ", " << ms << " ms\n";
  return code;
}

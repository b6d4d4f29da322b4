#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <cohere/program.hpp>

#include "verify.hpp"

namespace {

constexpr int kParseError = 2;

int run(const std::string& path, const cohere::RunOptions& options, bool json) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) {
      std::cerr << path << ": cannot open file\n";
      return kParseError;
    }
    text.assign(std::istreambuf_iterator<char>(in), {});
  }

  cohere::Program program;
  try {
    program = cohere::parse_program(text);
  } catch (const cohere::ParseError& e) {
    std::cerr << path << ":" << e.what() << '\n';
    return kParseError;
  }

  auto report = cohere::run_program(program, options);
  std::cout << (json ? cohere::to_json(report) : cohere::to_text(report));
  for (const auto& r : report.results) {
    if (r.error) std::cerr << path << ":" << r.query->line << ": " << *r.error << '\n';
  }
  return report.exit_code();
}

int verify(const std::string& suite, unsigned denominator, bool json) {
  std::vector<cohere::tools::SuiteResult> results;
  if (suite == "all" || suite == "wt") results.push_back(cohere::tools::verify_weak_transitivity(denominator));
  if (suite == "all" || suite == "cm") results.push_back(cohere::tools::verify_cautious_monotonicity(denominator));
  if (suite == "all" || suite == "total") results.push_back(cohere::tools::verify_total_coherence());

  bool ok = true;
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    ok = ok && r.mismatches == 0;
    if (json) {
      out.push_back({{"suite", r.name}, {"points", r.points}, {"mismatches", r.mismatches},
                     {"details", r.details}});
    } else {
      std::cout << (r.mismatches == 0 ? "PASS " : "FAIL ") << r.name << ": " << r.points
                << " points, " << r.mismatches << " mismatches\n";
      for (const auto& d : r.details) std::cout << "  " << d << '\n';
    }
  }
  if (json) std::cout << out.dump(2) << '\n';
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coherence checking, bound propagation and default entailment"};
  app.set_version_flag("--version", std::string(cohere::version()));
  app.require_subcommand(1);

  cohere::RunOptions options;
  bool json = false;
  std::string path;
  auto* run_cmd = app.add_subcommand("run", "Run the queries of a knowledge-base program");
  run_cmd->add_option("file", path, "Program file, or - for standard input")->required();
  run_cmd->add_flag("--json", json, "Emit a JSON report");
  run_cmd->add_option("--seed", options.seed, "Seed of the witness and counterexample search");
  run_cmd->add_option("--budget", options.budget, "Candidate points per search")
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--grid", options.grid, "Denominator of the certificate re-check grid")
      ->check(CLI::PositiveNumber);
  run_cmd->add_flag("--trace", options.trace, "Include zero-layer traces of bounds queries");

  std::string suite = "all";
  unsigned denominator = 4;
  bool verify_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "Check closed forms against the engine on a grid");
  verify_cmd->add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember({"all", "wt", "cm", "total"}));
  verify_cmd->add_option("--denominator", denominator, "Grid denominator")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--json", verify_json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kParseError;
  }

  if (*run_cmd) return run(path, options, json);
  return verify(suite, denominator, verify_json);
}

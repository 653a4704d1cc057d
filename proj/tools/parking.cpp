#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "parking/cli.hpp"

using namespace parking::cli;

int main(int argc, char** argv) {
  CLI::App app{"Parking functions under the k-Naples rule and per-car rule vectors"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"text", Format::text}, {"csv", Format::csv}, {"json", Format::json}};
  CommandResult result;

  auto* park = app.add_subcommand("park", "simulate a preference under a rule vector");
  std::string park_prefs, park_rules = "k=0";
  Format park_format = Format::text;
  park->add_option("--prefs", park_prefs, "preference, e.g. 5,3,3,5,4 or 2,2@5")->required();
  park->add_option("--rules", park_rules, "rule vector: 0,1,inf or k=K");
  park->add_option("--format", park_format, "text or json")->transform(CLI::CheckedTransformer(formats));
  park->callback([&] { result = run_park(park_prefs, park_rules, park_format); });

  auto* check = app.add_subcommand("check", "decide membership in the k-Naples parking functions");
  std::string check_prefs;
  int check_k = 0;
  CheckMode check_mode = CheckMode::simulate;
  const std::map<std::string, CheckMode> modes{{"simulate", CheckMode::simulate},
                                               {"structural", CheckMode::structural},
                                               {"rtl", CheckMode::rtl},
                                               {"perminv", CheckMode::perminv},
                                               {"ones", CheckMode::ones}};
  check->add_option("--prefs", check_prefs, "preference")->required();
  check->add_option("--k", check_k, "backward limit")->required();
  check->add_option("--mode", check_mode, "simulate, structural, rtl, perminv or ones")
      ->transform(CLI::CheckedTransformer(modes));
  check->callback([&] { result = run_check(check_prefs, check_k, check_mode); });

  auto* table = app.add_subcommand("table", "print a counting table");
  TableKind table_kind = TableKind::pf;
  int table_nmax = 8;
  Format table_format = Format::text;
  const std::map<std::string, TableKind> kinds{{"theta_eq", TableKind::theta_eq}, {"theta_leq", TableKind::theta_leq},
                                               {"T", TableKind::T},               {"upsilon0", TableKind::upsilon0},
                                               {"pf", TableKind::pf},             {"knap", TableKind::knap}};
  table->add_option("kind", table_kind, "theta_eq, theta_leq, T, upsilon0, pf or knap")
      ->required()
      ->transform(CLI::CheckedTransformer(kinds));
  table->add_option("--nmax", table_nmax, "largest n");
  table->add_option("--format", table_format, "text, csv or json")->transform(CLI::CheckedTransformer(formats));
  table->callback([&] { result = run_table(table_kind, table_nmax, table_format); });

  auto* strategy = app.add_subcommand("strategy", "build an optimal rule vector");
  std::string strategy_prefs;
  Goal strategy_goal = Goal::steps;
  bool strategy_all = false;
  const std::map<std::string, Goal> goals{{"steps", Goal::steps}, {"cars", Goal::cars}, {"ones", Goal::ones}};
  strategy->add_option("--prefs", strategy_prefs, "preference")->required();
  strategy->add_option("--goal", strategy_goal, "steps, cars or ones")->transform(CLI::CheckedTransformer(goals));
  strategy->add_flag("--all", strategy_all, "list every optimal vector (goal steps)");
  strategy->callback([&] { result = run_strategy(strategy_prefs, strategy_goal, strategy_all); });

  auto* orc = app.add_subcommand("oracle", "cross-check formulas and deciders against brute force");
  Suite suite = Suite::counts;
  int oracle_nmax = 5;
  unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  std::optional<int> max_n;
  const std::map<std::string, Suite> suites{{"counts", Suite::counts},
                                            {"characterize", Suite::characterize},
                                            {"strategies", Suite::strategies},
                                            {"posets", Suite::posets}};
  orc->add_option("suite", suite, "counts, characterize, strategies or posets")
      ->required()
      ->transform(CLI::CheckedTransformer(suites));
  orc->add_option("--nmax", oracle_nmax, "largest n");
  orc->add_option("--workers", workers, "census threads");
  orc->add_option("--max-n", max_n, "allow censuses up to n^n for this n (env PARKING_MAX_N)");
  orc->callback([&] { result = run_oracle(suite, oracle_nmax, workers, max_n); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(Status::invalid_input);
  }
  std::cout << result.payload;
  return result.exit_code();
}

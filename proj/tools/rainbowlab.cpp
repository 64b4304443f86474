#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rainbow/experiment.hpp"
#include "rainbow/graph_io.hpp"
#include "rainbow/summary.hpp"

namespace {

struct CommonFlags {
  std::string input;
  std::string gen;
  std::uint64_t budget_nodes = 0;
  std::int64_t budget_secs = 0;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string out;
  int threads = 1;
};

void attach_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--input", f.input, "graph file to read");
  cmd->add_option("--gen", f.gen, "generator spec, key=value pairs");
  cmd->add_option("--budget-nodes", f.budget_nodes,
                  "node cap per search invocation");
  cmd->add_option("--budget-secs", f.budget_secs,
                  "wall-clock cap per search invocation, seconds");
  cmd->add_option("--seed", f.seed, "seed override for generated streams")
      ->each([&f](const std::string&) { f.seed_set = true; });
  cmd->add_option("--out", f.out, "also write the report to this file");
  cmd->add_option("--threads", f.threads, "worker threads for the solvers");
}

void fill_config(rainbow::ExperimentConfig& cfg, const CommonFlags& f) {
  cfg.input_path = f.input;
  cfg.gen = f.gen;
  if (f.budget_nodes) cfg.budget.max_nodes = f.budget_nodes;
  if (f.budget_secs) cfg.budget.max_millis = f.budget_secs * 1000;
  if (f.seed_set) cfg.seed = f.seed;
  cfg.output_path = f.out;
  cfg.threads = f.threads;
}

int run_and_print(const rainbow::ExperimentConfig& cfg) {
  rainbow::ExperimentOutcome out = rainbow::run_experiment(cfg);
  std::cout << out.report.str();
  return out.exit_code;
}

std::string lowercased(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge-colored graph toolkit: exact rainbow path/cycle solvers "
               "and statement checkers"};
  app.require_subcommand(1);

  CommonFlags flags;
  int k = 0, s = 0, t = 0, n = 0, delta_c = 0;
  bool k_set = false, s_set = false, t_set = false;
  std::string theorem;
  std::vector<std::string> sweep_args;
  std::vector<std::string> report_paths;

  auto add_k = [&](CLI::App* cmd) {
    cmd->add_option("--k", k, "target cycle length")
        ->each([&](const std::string&) { k_set = true; });
  };

  CLI::App* solve = app.add_subcommand("solve", "longest rainbow path and cycle");
  attach_common(solve, flags);

  CLI::App* lemmas = app.add_subcommand(
      "check-lemmas", "longest-path color claims under a no-cycle certificate");
  attach_common(lemmas, flags);
  add_k(lemmas);
  lemmas->add_option("--s", s, "first part of the split s+t=k")
      ->each([&](const std::string&) { s_set = true; });
  lemmas->add_option("--t", t, "second part of the split s+t=k")
      ->each([&](const std::string&) { t_set = true; });

  CLI::App* evalt =
      app.add_subcommand("eval-theorem", "evaluate one statement on graphs");
  attach_common(evalt, flags);
  add_k(evalt);
  evalt->add_option("theorem", theorem, "statement name")->required();

  CLI::App* trace = app.add_subcommand(
      "trace", "full proof-quantity trace on certified instances");
  attach_common(trace, flags);
  add_k(trace);

  CLI::App* hunt = app.add_subcommand(
      "hunt", "search generated graphs for conjecture counterexamples");
  attach_common(hunt, flags);
  add_k(hunt);

  CLI::App* compare = app.add_subcommand(
      "compare", "arithmetic comparison of the two cycle guarantees");
  attach_common(compare, flags);
  compare->add_option("--n", n, "graph order")->required();
  compare->add_option("--delta-c", delta_c, "minimum color degree")
      ->required();
  add_k(compare);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "run a checking action over the exhaustive small-graph stream");
  attach_common(sweep, flags);
  sweep->add_option("args", sweep_args,
                    "key=value settings (n=, k=) and one action: "
                    "check-lemmas | trace | cada2 | path-bounds");

  CLI::App* summarize =
      app.add_subcommand("summarize", "aggregate one or more reports");
  summarize->add_option("reports", report_paths, "report files")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (summarize->parsed()) {
      std::vector<rainbow::Report> reports;
      for (const std::string& path : report_paths)
        reports.push_back(rainbow::Report::load(path));
      rainbow::SummaryOutput out = rainbow::emit_summary(reports);
      std::cout << out.table << "\n" << out.csv;
      return 0;
    }

    rainbow::ExperimentConfig cfg;
    fill_config(cfg, flags);
    if (k_set) cfg.k = k;
    if (s_set) cfg.s = s;
    if (t_set) cfg.t = t;

    if (solve->parsed()) {
      cfg.command = "solve";
    } else if (lemmas->parsed()) {
      cfg.command = "check-lemmas";
    } else if (evalt->parsed()) {
      cfg.command = "eval-theorem";
      cfg.theorem = lowercased(theorem);
    } else if (trace->parsed()) {
      cfg.command = "trace";
    } else if (hunt->parsed()) {
      cfg.command = "hunt";
    } else if (compare->parsed()) {
      cfg.command = "compare";
      cfg.n = n;
      cfg.delta_c = delta_c;
    } else if (sweep->parsed()) {
      cfg.command = "sweep";
      for (const std::string& arg : sweep_args) {
        auto eq = arg.find('=');
        if (eq == std::string::npos) {
          if (!cfg.sweep_action.empty())
            throw std::invalid_argument("sweep takes one action, got '" +
                                        arg + "' after '" + cfg.sweep_action +
                                        "'");
          cfg.sweep_action = arg;
        } else {
          const std::string key = arg.substr(0, eq);
          const std::string value = arg.substr(eq + 1);
          if (key == "n")
            cfg.n = std::stoi(value);
          else if (key == "k")
            cfg.k = std::stoi(value);
          else if (key == "seed")
            cfg.seed = std::stoull(value);
          else
            throw std::invalid_argument("unknown sweep setting '" + key +
                                        "'");
        }
      }
      if (cfg.sweep_action.empty())
        throw std::invalid_argument("sweep needs an action");
    }
    return run_and_print(cfg);
  } catch (const rainbow::GraphFormatError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const rainbow::ReportFormatError& e) {
    std::cerr << "report error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

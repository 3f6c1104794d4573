#include "hatgame/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"

#include "hatgame/adequate.hpp"
#include "hatgame/artifacts.hpp"
#include "hatgame/complexity.hpp"
#include "hatgame/errors.hpp"
#include "hatgame/patterns.hpp"
#include "hatgame/regions.hpp"
#include "hatgame/strategy.hpp"

namespace hatgame {

namespace {

std::vector<Code> parse_codes(const std::string& text) {
  std::vector<Code> codes;
  std::string token;
  std::stringstream ss(text);
  while (ss >> token) {
    std::stringstream parts(token);
    std::string part;
    while (std::getline(parts, part, ',')) {
      if (part.empty()) continue;
      std::size_t used = 0;
      long value = -1;
      try {
        value = std::stol(part, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != part.size() || value < 0) throw InvalidInput("bad configuration code '" + part + "'");
      codes.push_back(static_cast<Code>(value));
    }
  }
  if (codes.empty()) throw InvalidInput("no configuration codes given");
  return codes;
}

// Writes to `path`, or to `out` when path is empty.
void emit(const std::string& path, std::ostream& out,
          const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidInput("cannot open '" + path + "' for writing");
  write(file);
  if (!file) throw InvalidInput("failed writing '" + path + "'");
}

std::ifstream open_input(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InvalidInput("cannot open '" + path + "' for reading");
  return file;
}

std::string codes_text(const std::vector<Code>& codes) {
  std::string s;
  for (std::size_t i = 0; i < codes.size(); ++i) s += (i ? " " : "") + std::to_string(codes[i]);
  return s;
}

std::string value_text(double value, const std::optional<Rational>& exact) {
  std::string s = format_real(value);
  if (exact) s += " (exact " + format_rational(*exact) + ")";
  return s;
}

std::vector<AdequateSet> load_or_enumerate(const std::string& in_path, int players, int colors,
                                           int size, int workers) {
  if (!in_path.empty()) {
    auto file = open_input(in_path);
    return read_set_list(file).sets;
  }
  EnumerationOptions options;
  options.workers = workers;
  return enumerate_adequate_sets(GameShape(players, colors), size, options);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solver for the hat game with asymmetric color probabilities"};
  app.require_subcommand(1, 1);
  std::function<void()> action;

  // Shared option storage.
  int players = 3;
  int colors = 3;
  int size = 12;
  int workers = 0;
  std::string out_path;
  std::string in_path;
  std::string probs_text;
  std::string codes;
  std::string mode = "exhaustive";
  std::string format = "grid";
  std::vector<std::string> probs_list;
  bool no_prune = false;
  bool diagnose_weak = false;
  std::uint64_t trials = 1000000;
  std::uint64_t seed = 1;
  double step = 0.01;

  auto shape_opts = [&](CLI::App* sub) {
    sub->add_option("--players", players, "number of players N")->capture_default_str();
    sub->add_option("--colors", colors, "number of colors Q")->capture_default_str();
  };
  auto workers_opt = [&](CLI::App* sub) {
    sub->add_option("--workers", workers, "search threads (0 = all cores; capped by HATGAME_MAX_WORKERS)");
  };

  auto* enumerate = app.add_subcommand("enumerate", "list all adequate sets of one size");
  shape_opts(enumerate);
  enumerate->add_option("--size", size, "set size (das)")->required();
  enumerate->add_option("--out", out_path, "output file (JSON); stdout when omitted");
  enumerate->add_option("--probs", probs_list, "probability vectors to attach phi for");
  enumerate->add_flag("--no-prune", no_prune, "disable prefix pruning");
  enumerate->add_flag("--diagnose-weak", diagnose_weak,
                      "count sets adequate only when members are exempt from the covering rule");
  workers_opt(enumerate);
  enumerate->callback([&] {
    action = [&] {
      const GameShape shape(players, colors);
      EnumerationOptions options;
      options.workers = workers;
      options.prune = !no_prune;
      SetList list{enumerate_adequate_sets(shape, size, options), {}};
      for (const auto& p : probs_list) list.probs.push_back(ProbabilityVector::parse(p));
      emit(out_path, out, [&](std::ostream& o) { write_set_list(o, list); });
      if (!out_path.empty()) out << list.sets.size() << " adequate sets written to " << out_path << '\n';
      if (diagnose_weak) {
        out << "outside-only adequate sets failing the self-counting rule: "
            << count_outside_only_sets(shape, size, options) << '\n';
      }
    };
  });

  auto* solve_cmd = app.add_subcommand("solve", "optimal strategies for three players and three colors");
  solve_cmd->add_option("--probs", probs_text, "color probabilities, e.g. 0.7,0.2,0.1 or 1/2,1/3,1/6")
      ->required();
  solve_cmd->add_option("--mode", mode, "exhaustive or closed_form")->capture_default_str();
  solve_cmd->add_option("--out", out_path, "solution record (JSON)");
  workers_opt(solve_cmd);
  solve_cmd->callback([&] {
    action = [&] {
      EnumerationOptions options;
      options.workers = workers;
      const Solution sol = solve(ProbabilityVector::parse(probs_text), parse_solve_mode(mode), options);
      out << "mode: " << to_string(sol.mode) << '\n';
      out << "value: " << value_text(sol.value, sol.exact_value) << '\n';
      if (sol.classification) {
        out << "region: " << region_letter(sol.classification->label.region)
            << (sol.classification->label.is_boundary ? " (boundary)" : "") << '\n';
      }
      out << "optimal sets: " << sol.optimal.size() << '\n';
      for (const auto& o : sol.optimal) {
        out << "  " << codes_text(o.set.codes()) << "  phi " << value_text(o.phi, o.exact_phi) << '\n';
      }
      if (!out_path.empty()) emit(out_path, out, [&](std::ostream& o) { write_solution(o, sol); });
    };
  });

  auto* classify_cmd = app.add_subcommand("classify", "region and closed-form optimum");
  classify_cmd->add_option("--probs", probs_text, "three color probabilities")->required();
  classify_cmd->callback([&] {
    action = [&] {
      const Classification c = classify(ProbabilityVector::parse(probs_text));
      out << "region: " << region_letter(c.label.region) << '\n';
      out << "value: " << format_real(c.value) << '\n';
      out << "boundary: " << (c.label.is_boundary ? "yes" : "no");
      if (c.label.is_boundary) {
        out << " (tied:";
        for (int i : c.label.tied) out << " psi" << i;
        out << ')';
      }
      out << '\n';
      out << "sorted: p=" << format_real(c.sorted.p) << " q=" << format_real(c.sorted.q)
          << " r=" << format_real(c.sorted.r) << '\n';
      for (int i = 0; i < 3; ++i) out << "psi" << i + 1 << ": " << format_real(c.psi_values[i]) << '\n';
    };
  });

  auto* patterns_cmd = app.add_subcommand("patterns", "distinct pattern table (CSV)");
  shape_opts(patterns_cmd);
  patterns_cmd->add_option("--size", size, "set size when enumerating")->capture_default_str();
  patterns_cmd->add_option("--in", in_path, "adequate-set list to read instead of enumerating");
  patterns_cmd->add_option("--out", out_path, "output CSV; stdout when omitted");
  workers_opt(patterns_cmd);
  patterns_cmd->callback([&] {
    action = [&] {
      const auto patterns = distinct_patterns(load_or_enumerate(in_path, players, colors, size, workers));
      emit(out_path, out, [&](std::ostream& o) { write_pattern_table(o, patterns); });
      if (!out_path.empty()) out << patterns.size() << " patterns written to " << out_path << '\n';
    };
  });

  auto* dominance_cmd = app.add_subcommand("dominance", "dominant patterns and certified dominators");
  shape_opts(dominance_cmd);
  dominance_cmd->add_option("--size", size, "set size when enumerating")->capture_default_str();
  dominance_cmd->add_option("--in", in_path, "adequate-set list to read instead of enumerating");
  workers_opt(dominance_cmd);
  dominance_cmd->callback([&] {
    action = [&] {
      const auto patterns = distinct_patterns(load_or_enumerate(in_path, players, colors, size, workers));
      const DominanceSummary summary = dominant_patterns(patterns);
      auto row = [&](std::size_t i) {
        std::string s;
        for (int c : patterns[i].coefficients()) s += " " + std::to_string(c);
        return s;
      };
      out << "dominant patterns: " << summary.minimal.size() << '\n';
      for (std::size_t m : summary.minimal) out << "  #" << m + 1 << ":" << row(m) << '\n';
      out << "pattern,dominated_by\n";
      for (std::size_t i = 0; i < patterns.size(); ++i) {
        out << i + 1 << ',' << summary.dominator[i] + 1 << '\n';
      }
    };
  });

  auto* strategy_cmd = app.add_subcommand("strategy", "decision matrix of an adequate set");
  shape_opts(strategy_cmd);
  strategy_cmd->add_option("--codes", codes, "set members, e.g. 4,5,7,8")->required();
  strategy_cmd->add_option("--format", format, "grid or json")->capture_default_str();
  strategy_cmd->add_option("--probs", probs_text, "evaluate the strategy exactly under these probabilities");
  strategy_cmd->add_option("--out", out_path, "output file; stdout when omitted");
  strategy_cmd->callback([&] {
    action = [&] {
      const AdequateSet set(GameShape(players, colors), parse_codes(codes));
      const DecisionMatrix matrix = build_decision_matrix(set);
      if (format != "grid" && format != "json") throw InvalidInput("unknown format '" + format + "'");
      emit(out_path, out, [&](std::ostream& o) {
        if (format == "grid") {
          o << render_matrix_grid(matrix);
        } else {
          write_decision_matrix(o, matrix);
        }
      });
      if (!probs_text.empty()) {
        const StrategyReport report = evaluate_exact(matrix, ProbabilityVector::parse(probs_text));
        out << "win probability: " << value_text(report.win_probability, report.exact_win_probability)
            << '\n';
      }
    };
  });

  auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo play of an adequate-set strategy");
  shape_opts(simulate_cmd);
  simulate_cmd->add_option("--codes", codes, "set members")->required();
  simulate_cmd->add_option("--probs", probs_text, "color probabilities")->required();
  simulate_cmd->add_option("--trials", trials, "number of games")->capture_default_str();
  simulate_cmd->add_option("--seed", seed, "generator seed")->capture_default_str();
  simulate_cmd->callback([&] {
    action = [&] {
      const AdequateSet set(GameShape(players, colors), parse_codes(codes));
      const DecisionMatrix matrix = build_decision_matrix(set);
      const ProbabilityVector probs = ProbabilityVector::parse(probs_text);
      const SimulationResult sim = simulate(matrix, probs, trials, seed);
      const StrategyReport exact = evaluate_exact(matrix, probs);
      out << "trials: " << sim.trials << '\n';
      out << "wins: " << sim.wins << '\n';
      out << "estimate: " << format_real(sim.estimate) << '\n';
      out << "stderr: " << format_real(sim.standard_error) << '\n';
      out << "exact: " << format_real(exact.win_probability) << '\n';
    };
  });

  auto* min_das_cmd = app.add_subcommand("min-das", "smallest adequate set size");
  shape_opts(min_das_cmd);
  workers_opt(min_das_cmd);
  min_das_cmd->callback([&] {
    action = [&] {
      const GameShape shape(players, colors);
      EnumerationOptions options;
      options.workers = workers;
      const MinDasResult result = find_min_das(shape, options);
      out << "min das: " << result.das << '\n';
      out << "witness: " << codes_text(result.witness.codes()) << '\n';
      out << "uniform win probability: "
          << format_rational(1 - phi_exact(result.witness, ProbabilityVector::uniform(colors))) << '\n';
    };
  });

  auto* complexity_cmd = app.add_subcommand("complexity", "strategy-space sizes");
  shape_opts(complexity_cmd);
  complexity_cmd->add_option("--size", size, "set size (das)")->capture_default_str();
  complexity_cmd->callback([&] {
    action = [&] {
      const ComplexityReport r = complexity_report(players, colors, size);
      out << "brute force: " << r.brute.str() << " (" << scientific(r.brute) << ")\n";
      out << "reduced: " << r.reduced.str() << " (" << scientific(r.reduced) << ")\n";
      out << "adequate set method: " << r.adequate.str() << " (" << scientific(r.adequate) << ")\n";
    };
  });

  auto* region_map_cmd = app.add_subcommand("region-map", "region label and optimum over a (p, r) grid");
  region_map_cmd->add_option("--step", step, "grid spacing")->capture_default_str();
  region_map_cmd->add_option("--out", out_path, "output CSV; stdout when omitted");
  region_map_cmd->callback([&] {
    action = [&] {
      const auto rows = region_map(step);
      emit(out_path, out, [&](std::ostream& o) { write_region_map(o, rows); });
    };
  });

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitInvalidInput;
  }

  try {
    action();
    return kExitOk;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const IncompletenessError& e) {
    err << "incomplete: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace hatgame

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "subsum/baselines.hpp"
#include "subsum/enumerate.hpp"
#include "subsum/errors.hpp"
#include "subsum/gen.hpp"
#include "subsum/greedy.hpp"
#include "subsum/io.hpp"
#include "subsum/probe.hpp"
#include "subsum/report.hpp"
#include "subsum/rng.hpp"

namespace {

using namespace subsum;
using nlohmann::json;

constexpr int kExitSolution = 0;
constexpr int kExitNoSolution = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitResource = 4;

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Instance load_instance(const std::string& path) {
  const std::string text = read_input(path);
  return looks_like_json(text) ? parse_instance_json(text) : parse_instance_text(text);
}

// The enumeration cap: command-line flag beats the environment variable
// beats the built-in default.
std::size_t effective_max_n(const std::optional<std::size_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("SUBSUM_MAX_N")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 62)
      throw CLI::ValidationError("SUBSUM_MAX_N", "must be an integer in [1, 62]");
    return static_cast<std::size_t>(v);
  }
  return EnumerationConfig{}.max_n;
}

// Re-certify a solution against the instance before it leaves the
// process, then record it.
void attach_solution(RunReport& report, const Instance& inst, const SubsetSolution& s) {
  const SubsetSolution checked(inst, s.indices());
  report.solutions.push_back({checked.indices(), checked.values()});
}

void print_solution_line(std::ostream& out, const SubsetSolution& s,
                         std::optional<std::uint64_t> position) {
  out << "solution:";
  for (std::int64_t v : s.values()) out << ' ' << v;
  out << "  (indices";
  for (std::size_t i : s.indices()) out << ' ' << i;
  if (position) out << ", position " << *position;
  out << ")\n";
}

struct SolveOptions {
  std::string file;
  std::string mode = "all";
  bool as_json = false;
  std::optional<std::size_t> max_n;
  std::uint64_t chunk_size = EnumerationConfig{}.chunk_size;
  std::optional<std::uint64_t> solution_limit;
  std::optional<std::size_t> piece;
  std::uint64_t repeats = 200;
  std::uint64_t seed = 0;
  std::optional<std::size_t> rounds;
  std::optional<std::size_t> beam;
  std::optional<double> budget_ms;
};

int run_solve(const SolveOptions& opt) {
  const Instance inst = load_instance(opt.file);
  Deadline deadline;
  if (opt.budget_ms)
    deadline = Deadline::after(std::chrono::milliseconds(static_cast<long long>(*opt.budget_ms)));

  RunReport report;
  report.mode = opt.mode;
  report.digest = instance_digest(inst);
  report.n = inst.size();
  report.target = inst.target();

  std::ostream& human = opt.as_json ? std::cerr : std::cout;
  int exit_code = kExitNoSolution;
  const auto start = std::chrono::steady_clock::now();

  if (opt.mode == "all") {
    EnumerationConfig config;
    config.max_n = effective_max_n(opt.max_n);
    config.chunk_size = opt.chunk_size;
    config.solution_limit = opt.solution_limit;
    const auto result = solve_all(inst, config, deadline);
    report.wall_ms = elapsed_ms(start);
    report.ops = result.ops;
    report.truncated = result.truncated;
    report.timed_out = result.timed_out;
    report.config = {{"max_n", config.max_n}, {"chunk_size", config.chunk_size}};
    if (config.solution_limit) report.config["solution_limit"] = *config.solution_limit;
    for (std::size_t i = 0; i < result.solutions.size(); ++i) {
      attach_solution(report, inst, result.solutions[i]);
      print_solution_line(human, result.solutions[i], result.positions[i]);
    }
    if (result.timed_out) {
      report.outcome = "timeout";
      human << "timed out after " << report.wall_ms << " ms\n";
      exit_code = kExitNoSolution;
    } else if (!result.solutions.empty()) {
      report.outcome = "solution";
      human << result.solutions.size() << (result.solutions.size() == 1 ? " solution" : " solutions");
      if (result.truncated) human << " (truncated at the solution limit)";
      human << "\n";
      exit_code = kExitSolution;
    } else {
      report.outcome = "no-solution";
      human << "no solution\n";
      exit_code = kExitNoSolution;
    }
  } else if (opt.mode == "prob") {
    ProbeConfig config;
    config.piece_length = opt.piece.value_or(std::min<std::size_t>(inst.size(), 20));
    config.repeat_times = opt.repeats;
    config.seed = opt.seed;
    const auto result = solve_probabilistic(inst, config, deadline);
    report.wall_ms = elapsed_ms(start);
    report.ops = result.ops;
    report.timed_out = result.timed_out;
    report.rounds_used = result.rounds_used;
    report.seed = config.seed;
    report.config = {{"piece_length", config.piece_length},
                     {"repeat_times", config.repeat_times}};
    if (result.solution) {
      attach_solution(report, inst, *result.solution);
      print_solution_line(human, *result.solution, std::nullopt);
      human << "found in round " << result.rounds_used << "\n";
      report.outcome = "solution";
      exit_code = kExitSolution;
    } else if (result.timed_out) {
      report.outcome = "timeout";
      human << "timed out after " << report.wall_ms << " ms\n";
    } else {
      report.outcome = "failure";
      human << "failure after " << result.rounds_used
            << " rounds (a solution may still exist)\n";
    }
  } else if (opt.mode == "greedy") {
    GreedyConfig config;
    if (opt.rounds) config.round_bound = *opt.rounds;
    if (opt.beam) config.beam_limit = *opt.beam;
    const auto result = solve_greedy(inst, config, deadline);
    report.wall_ms = elapsed_ms(start);
    report.ops = result.ops;
    report.timed_out = result.timed_out;
    report.rounds_used = result.rounds_used;
    report.config = {{"round_bound", std::min(config.round_bound, inst.size())}};
    if (config.beam_limit) report.config["beam_limit"] = *config.beam_limit;
    if (result.solution) {
      attach_solution(report, inst, *result.solution);
      report.variance = result.variance;
      report.degenerate = result.degenerate;
      print_solution_line(human, *result.solution, std::nullopt);
      char buffer[64];
      std::snprintf(buffer, sizeof buffer, "%.4f", result.variance);
      human << "variance: " << buffer << (result.degenerate ? " (degenerate singleton)" : "")
            << "\n"
            << "rounds used: " << result.rounds_used << "\n";
      report.outcome = "solution";
      exit_code = kExitSolution;
    } else if (result.timed_out) {
      report.outcome = "timeout";
      human << "timed out after " << report.wall_ms << " ms\n";
    } else {
      report.outcome = "failure";
      human << "failure after " << result.rounds_used << " rounds";
      if (result.beam_truncated)
        human << " (beam truncation dropped states; a solution may still exist)";
      human << "\n";
    }
  } else if (opt.mode == "dp") {
    const auto result = bellman_run(inst);
    report.wall_ms = elapsed_ms(start);
    report.ops = result.cell_lookups;
    report.decision = result.decision;
    report.config = json::object();
    report.outcome = result.decision ? "solution" : "no-solution";
    human << (result.decision ? "yes" : "no") << "\n";
    exit_code = result.decision ? kExitSolution : kExitNoSolution;
  }

  if (opt.as_json) std::cout << report_to_json(report).dump(2) << "\n";
  return exit_code;
}

struct GenOptions {
  std::size_t n = 0;
  unsigned bits = 20;
  std::optional<std::size_t> planted;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string out;
};

int run_gen(const GenOptions& opt) {
  GenSpec spec;
  spec.n = opt.n;
  spec.bit_length = opt.bits;
  spec.planted_size = opt.planted;
  spec.seed = opt.seed;

  Instance inst = [&] {
    if (spec.planted_size) return gen_planted(spec).first;
    return gen_random(spec);
  }();
  json witness_doc;
  if (spec.planted_size) {
    // Re-run deterministically to recover the witness alongside.
    const auto [_, witness] = gen_planted(spec);
    witness_doc = {{"indices", witness.indices()}, {"values", witness.values()}};
  }

  const std::string payload = opt.format == "json" ? serialize_instance_json(inst) + "\n"
                                                   : serialize_instance_text(inst);
  if (opt.out.empty()) {
    std::cout << payload;
    if (spec.planted_size) std::cerr << "witness: " << witness_doc.dump() << "\n";
  } else {
    std::ofstream out(opt.out, std::ios::binary);
    if (!out) throw ResourceError("cannot open " + opt.out + " for writing");
    out << payload;
    if (spec.planted_size) {
      const std::string side = opt.out + ".witness.json";
      std::ofstream w(side, std::ios::binary);
      if (!w) throw ResourceError("cannot open " + side + " for writing");
      w << witness_doc.dump(2) << "\n";
      std::cerr << "witness written to " << side << "\n";
    }
  }
  return kExitSolution;
}

struct BenchOptions {
  std::string modes = "all,prob,greedy,dp";
  std::size_t n_from = 0;
  std::size_t n_to = 0;
  std::size_t n_step = 1;
  std::uint64_t trials = 0;
  unsigned bits = 20;
  std::uint64_t seed = 0;
  double budget_ms = 10000.0;
  std::string out;
};

int run_bench(const BenchOptions& opt) {
  std::vector<std::string> modes;
  std::stringstream parts(opt.modes);
  std::string mode;
  while (std::getline(parts, mode, ',')) {
    if (mode != "all" && mode != "prob" && mode != "greedy" && mode != "dp")
      throw CLI::ValidationError("--modes", "unknown mode: " + mode);
    modes.push_back(mode);
  }
  if (modes.empty()) throw CLI::ValidationError("--modes", "needs at least one mode");
  if (opt.n_from < 1 || opt.n_to < opt.n_from || opt.n_step < 1)
    throw CLI::ValidationError("--n-from/--n-to/--n-step", "need 1 <= n-from <= n-to, step >= 1");

  ensure_bench_header(opt.out);
  for (std::size_t n = opt.n_from; n <= opt.n_to; n += opt.n_step) {
    for (std::uint64_t trial = 0; trial < opt.trials; ++trial) {
      const std::uint64_t instance_seed = mix_seed(opt.seed, n, trial);
      GenSpec spec;
      spec.n = n;
      spec.bit_length = opt.bits;
      spec.seed = instance_seed;
      const Instance inst = gen_random(spec);

      for (const std::string& m : modes) {
        BenchRow row;
        row.mode = m;
        row.n = n;
        row.bit_length = opt.bits;
        row.trial = trial;
        row.seed = instance_seed;
        const auto deadline =
            Deadline::after(std::chrono::milliseconds(static_cast<long long>(opt.budget_ms)));
        const auto start = std::chrono::steady_clock::now();
        try {
          if (m == "all") {
            EnumerationConfig config;
            config.max_n = 62;  // the budget, not the cap, bounds the sweep
            const auto result = solve_all(inst, config, deadline);
            row.ops = result.ops;
            row.outcome = result.timed_out ? "timeout"
                          : result.solutions.empty() ? "no-solution"
                                                     : "solution";
          } else if (m == "prob") {
            ProbeConfig config;
            config.piece_length = std::min<std::size_t>(n, 20);
            config.repeat_times = 200;
            config.seed = mix_seed(instance_seed, 0xb, 0);
            const auto result = solve_probabilistic(inst, config, deadline);
            row.ops = result.ops;
            row.outcome = result.timed_out ? "timeout"
                          : result.solution ? "solution"
                                            : "failure";
          } else if (m == "greedy") {
            const auto result = solve_greedy(inst, {}, deadline);
            row.ops = result.ops;
            row.outcome = result.timed_out ? "timeout"
                          : result.solution ? "solution"
                                            : "failure";
          } else {
            const auto result = bellman_run(inst);
            row.ops = result.cell_lookups;
            row.outcome = result.decision ? "solution" : "no-solution";
          }
        } catch (const ResourceError&) {
          // A combination the mode cannot attempt at this size (for
          // example exhaustive enumeration past n=62) is recorded, not
          // fatal.
          row.outcome = "error";
          row.ops = 0;
        }
        row.millis = elapsed_ms(start);
        append_bench_row(opt.out, row);
      }
    }
  }
  return kExitSolution;
}

struct CoverOptions {
  std::string file;
  std::size_t k = 1;
  double delta = 0.25;
  std::uint64_t seed = 0;
  bool as_json = false;
};

int run_cover(const CoverOptions& opt) {
  const Instance inst = load_instance(opt.file);
  ColorCodingConfig config;
  config.k = opt.k;
  config.delta = opt.delta;
  config.seed = opt.seed;
  const auto start = std::chrono::steady_clock::now();
  const auto covered = color_coding(inst.weights(), inst.target(), config);
  const double ms = elapsed_ms(start);

  std::ostream& human = opt.as_json ? std::cerr : std::cout;
  const bool hit = covered.contains(inst.target());
  human << "rounds: " << config.rounds() << "\n"
        << "covered: " << covered.count() << " sums within [0, " << inst.target() << "]\n"
        << "target covered: " << (hit ? "yes" : "no") << "\n";
  if (opt.as_json) {
    json doc{{"mode", "sumset-cover"},
             {"digest", instance_digest(inst)},
             {"k", config.k},
             {"delta", config.delta},
             {"seed", config.seed},
             {"rounds", config.rounds()},
             {"covered_count", covered.count()},
             {"target_covered", hit},
             {"wall_ms", ms}};
    if (covered.count() <= 4096) doc["values"] = covered.values();
    std::cout << doc.dump(2) << "\n";
  }
  return hit ? kExitSolution : kExitNoSolution;
}

int run_selftest() {
  int failures = 0;
  const auto check = [&](const char* name, bool ok) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
    if (!ok) ++failures;
  };

  {
    const Instance inst(5, {1, 2, 3, 4});
    const auto result = solve_all(inst);
    check("enumeration finds both solutions of (5; 1 2 3 4)",
          result.solutions.size() == 2 &&
              result.positions == std::vector<std::uint64_t>{7, 10});
  }
  {
    check("position decoding round-trips the worked examples",
          decode_position(14, 4) == std::vector<std::size_t>{1, 3, 4} &&
              decode_position(9, 4) == std::vector<std::size_t>{4} &&
              decode_position(5, 4) == std::vector<std::size_t>{3});
  }
  {
    const auto result = solve_greedy(Instance(24, {1, 2, 3, 4, 5, 6, 7, 8}));
    check("greedy reaches the minimum-variance row on the walkthrough",
          result.solution.has_value() &&
              result.solution->indices() == std::vector<std::size_t>{4, 5, 7, 8} &&
              std::abs(result.variance - 3.3333) <= 1e-4);
  }
  {
    check("dp decides yes and no cases",
          bellman_decides(Instance(5, {1, 2, 3, 4})) && !bellman_decides(Instance(1, {2, 3})));
  }
  {
    ProbeConfig config;
    config.piece_length = 4;
    config.repeat_times = 50;
    config.seed = 3;
    const auto result = solve_probabilistic(Instance(5, {1, 2, 3, 4}), config);
    check("probabilistic solver certifies a known solution",
          result.solution.has_value());
  }
  {
    RunReport report;
    report.mode = "dp";
    report.outcome = "no-solution";
    report.decision = false;
    check("run reports survive a JSON round-trip",
          report_from_json(report_to_json(report)) == report);
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subset-sum solver toolkit"};
  app.require_subcommand(1);

  SolveOptions solve_opt;
  auto* solve = app.add_subcommand("solve", "solve one instance");
  solve->add_option("file", solve_opt.file, "instance file (text or JSON); - or absent: stdin");
  solve->add_option("--mode", solve_opt.mode, "solver: all, prob, greedy, dp")
      ->check(CLI::IsMember({"all", "prob", "greedy", "dp"}))
      ->capture_default_str();
  solve->add_flag("--json", solve_opt.as_json, "emit a JSON report on stdout");
  solve->add_option("--max-n", solve_opt.max_n, "enumeration cap (mode all)");
  solve->add_option("--chunk", solve_opt.chunk_size, "chunk size, power of two (mode all)");
  solve->add_option("--limit", solve_opt.solution_limit, "stop after this many solutions");
  solve->add_option("--piece", solve_opt.piece, "sampled piece length (mode prob)");
  solve->add_option("--repeats", solve_opt.repeats, "sampling rounds (mode prob)")
      ->capture_default_str();
  solve->add_option("--seed", solve_opt.seed, "RNG seed (mode prob)")->capture_default_str();
  solve->add_option("--rounds", solve_opt.rounds, "round bound (mode greedy; default n)");
  solve->add_option("--beam", solve_opt.beam, "beam limit on live residuals (mode greedy)");
  solve->add_option("--budget-ms", solve_opt.budget_ms, "time budget in milliseconds");

  GenOptions gen_opt;
  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("--n", gen_opt.n, "number of weights")->required();
  gen->add_option("--bits", gen_opt.bits, "weight bit length")->capture_default_str();
  gen->add_option("--planted", gen_opt.planted, "plant a solution of this size");
  gen->add_option("--seed", gen_opt.seed, "RNG seed")->capture_default_str();
  gen->add_option("--format", gen_opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  gen->add_option("--out", gen_opt.out, "output file (default stdout)");

  BenchOptions bench_opt;
  auto* bench = app.add_subcommand("bench", "run a seeded benchmark sweep");
  bench->add_option("--modes", bench_opt.modes, "comma-separated solver list")
      ->capture_default_str();
  bench->add_option("--n-from", bench_opt.n_from, "smallest n")->required();
  bench->add_option("--n-to", bench_opt.n_to, "largest n")->required();
  bench->add_option("--n-step", bench_opt.n_step, "n increment")->capture_default_str();
  bench->add_option("--trials", bench_opt.trials, "instances per n")->required();
  bench->add_option("--bits", bench_opt.bits, "weight bit length")->capture_default_str();
  bench->add_option("--seed", bench_opt.seed, "sweep seed")->capture_default_str();
  bench->add_option("--budget-ms", bench_opt.budget_ms, "per-run time budget")
      ->capture_default_str();
  bench->add_option("--out", bench_opt.out, "CSV output path")->required();

  CoverOptions cover_opt;
  auto* cover = app.add_subcommand("sumset-cover",
                                   "randomized cover of attainable subset sums up to the target");
  cover->add_option("file", cover_opt.file, "instance file; weights form the base set");
  cover->add_option("--k", cover_opt.k, "solution-size bound")->required();
  cover->add_option("--delta", cover_opt.delta, "per-sum miss probability")
      ->capture_default_str();
  cover->add_option("--seed", cover_opt.seed, "RNG seed")->capture_default_str();
  cover->add_flag("--json", cover_opt.as_json, "emit a JSON report on stdout");

  auto* selftest = app.add_subcommand("selftest", "run the built-in smoke checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (solve->parsed()) return run_solve(solve_opt);
    if (gen->parsed()) return run_gen(gen_opt);
    if (bench->parsed()) return run_bench(bench_opt);
    if (cover->parsed()) return run_cover(cover_opt);
    if (selftest->parsed()) return run_selftest();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return kExitResource;
  }
  return kExitUsage;
}

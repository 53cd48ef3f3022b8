// ramseyq: evaluate, classify, reduce, probe, and benchmark clique-threshold
// quantifier instances from the command line.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ramsey/bench.hpp"
#include "ramsey/classify.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/evaluator.hpp"
#include "ramsey/generators.hpp"
#include "ramsey/io.hpp"
#include "ramsey/reductions.hpp"
#include "ramsey/selftest.hpp"

namespace {

using namespace ramsey;

struct InstanceFlags {
  std::string graph_path;
  std::string model_path;
  bool loops_free = false;
};

struct EngineFlags {
  std::string strategy = "auto";
  std::optional<std::uint64_t> budget_ms;
  std::size_t c_small = 4;
  std::size_t c_log = 2;
};

void add_instance_flags(CLI::App* cmd, InstanceFlags& flags) {
  auto* g = cmd->add_option("--graph", flags.graph_path, "DIMACS edge-format instance");
  auto* m = cmd->add_option("--model", flags.model_path, "relational structure instance");
  g->excludes(m);
  cmd->add_flag("--loops-free", flags.loops_free,
                "treat a DIMACS graph as a plain simple graph: every vertex eligible");
}

void add_engine_flags(CLI::App* cmd, EngineFlags& flags) {
  cmd->add_option("--strategy", flags.strategy, "auto|enum|vc|bnb|oracle")
      ->check(CLI::IsMember({"auto", "enum", "vc", "bnb", "oracle"}));
  cmd->add_option("--budget-ms", flags.budget_ms, "wall budget for branch-and-bound");
  cmd->add_option("--c-small", flags.c_small, "enumeration regime bound (default 4)");
  cmd->add_option("--c-log", flags.c_log, "vertex-cover regime log factor (default 2)");
}

EvalConfig to_config(const EngineFlags& flags) {
  EvalConfig cfg;
  cfg.c_small = flags.c_small;
  cfg.c_log = flags.c_log;
  cfg.budget_ms = flags.budget_ms;
  if (flags.strategy == "enum") cfg.force = StrategyKind::EnumerateSmall;
  if (flags.strategy == "vc") cfg.force = StrategyKind::VertexCoverNearN;
  if (flags.strategy == "bnb") cfg.force = StrategyKind::BranchAndBound;
  if (flags.strategy == "oracle") cfg.force = StrategyKind::Oracle;
  return cfg;
}

Graph load_instance(const InstanceFlags& flags) {
  if (flags.graph_path.empty() == flags.model_path.empty())
    throw PreconditionError("exactly one of --graph or --model is required");
  if (!flags.model_path.empty()) return model_to_graph(load_model(flags.model_path));
  Graph g = load_graph(flags.graph_path);
  if (flags.loops_free) g.set_all_eligible(true);
  return g;
}

void write_instance(const Graph& g, const std::string& out_path, const std::string& format) {
  const bool to_stdout = out_path.empty() || out_path == "-";
  if (format == "model") {
    if (to_stdout)
      save_model(std::cout, graph_to_model(g));
    else
      save_model(std::filesystem::path(out_path), graph_to_model(g));
    return;
  }
  if (g.eligible_count() != g.size())
    throw PreconditionError(
        "instance has ineligible vertices, which DIMACS output cannot express; use --format "
        "model");
  if (to_stdout)
    save_graph(std::cout, g);
  else
    save_graph(std::filesystem::path(out_path), g);
}

int cmd_eval(const InstanceFlags& inst, const EngineFlags& eng, const std::string& fn,
             bool want_witness) {
  const ThresholdExpr f = parse_threshold(fn);
  const Graph g = load_instance(inst);
  const EvalConfig cfg = to_config(eng);
  const Certificate cert = eval_ramsey(g, f, cfg);
  if (!cert.decided()) throw Error("budget exhausted before a decision was reached");
  const EvalStrategy strat = choose_strategy(g.size(), static_cast<std::size_t>(
                                                           eval_threshold(f, g.size())), cfg);
  std::cout << "RESULT " << (cert.holds() ? "true" : "false") << '\n';
  std::cout << "n " << strat.n << '\n';
  std::cout << "k " << strat.k << '\n';
  std::cout << "strategy " << to_string(cert.strategy) << '\n';
  std::cout << "stats subsets=" << cert.stats.subsets << " nodes=" << cert.stats.nodes
            << " branches=" << cert.stats.branches << '\n';
  if (want_witness && cert.witness) {
    std::cout << "witness";
    for (const auto v : *cert.witness) std::cout << ' ' << v;
    std::cout << '\n';
  }
  return cert.holds() ? 0 : 1;
}

int cmd_classify(const std::string& fn) {
  const ThresholdExpr f = parse_threshold(fn);
  const FunctionClass cls = classify(f);
  const Verdict verdict = dichotomy_verdict(cls);
  std::cout << "fn " << f.to_string() << '\n';
  std::cout << "case " << to_string(cls.case_) << '\n';
  std::cout << "certainty " << to_string(cls.certainty) << '\n';
  std::cout << "witness-c " << cls.witness_c << '\n';
  std::cout << "n0 " << cls.n0 << '\n';
  std::cout << "omega " << cls.omega_constant << '\n';
  std::cout << "horizon " << cls.horizon << '\n';
  std::cout << "poly-time " << (cls.poly_time ? "true" : "false") << '\n';
  std::cout << "tractable " << (verdict.tractable ? "true" : "false") << '\n';
  std::cout << "reason " << to_string(verdict.reason) << '\n';
  std::cout << "assumption " << to_string(verdict.assumption) << '\n';
  return 0;
}

int cmd_reduce(const ReductionOutput& out, const std::string& out_path,
               const std::string& format) {
  write_instance(out.graph, out_path, format);
  // Sidecar params: to stdout when the instance went to a file, appended
  // after it otherwise.
  std::ostream& os = std::cout;
  os << out.params_text();
  return 0;
}

int cmd_probe(const std::string& fn, std::size_t n, const EngineFlags& eng) {
  const ThresholdExpr f = parse_threshold(fn);
  const EvalConfig cfg = to_config(eng);
  const auto oracle = [&](const Graph& gi) {
    const Certificate c = eval_ramsey(gi, f, cfg);
    if (!c.decided()) throw Error("budget exhausted inside the probe oracle");
    return c.holds();
  };
  const auto recovered = probe_function(oracle, n);
  std::cout << "n " << n << '\n';
  if (recovered)
    std::cout << "recovered " << *recovered << '\n';
  else
    std::cout << "recovered > " << n << '\n';
  std::cout << "direct " << eval_threshold(f, n) << '\n';
  return 0;
}

int cmd_oracle_check(std::size_t max_n, std::optional<std::size_t> trials, std::uint64_t seed,
                     const EngineFlags& eng) {
  OracleCheckConfig cfg;
  cfg.max_n = max_n;
  if (trials) {
    cfg.trials_small = *trials;
    cfg.trials_large = *trials;
  }
  cfg.seed = seed;
  cfg.eval = to_config(eng);
  const OracleCheckReport report = run_oracle_check(cfg);
  std::cout << "checks " << report.checks << '\n';
  if (report.ok()) {
    std::cout << "oracle-check ok\n";
    return 0;
  }
  std::cout << "disagreements " << report.disagreements.size() << '\n';
  for (const auto& d : report.disagreements) {
    std::cout << "fn " << d.fn_source << '\n';
    std::cout << d.detail << '\n';
    std::cout << d.instance_dimacs;  // replayable instance
  }
  return 3;
}

int cmd_bench(const std::string& fn, const std::string& family, std::size_t n_min,
              std::size_t n_max, std::size_t n_step, double p, std::size_t clique_size,
              std::uint64_t seed, const std::string& out_path, const EngineFlags& eng) {
  const ThresholdExpr f = parse_threshold(fn);
  const EvalConfig cfg = to_config(eng);
  std::ofstream file;
  if (!out_path.empty() && out_path != "-") {
    file.open(out_path);
    if (!file) throw Error("cannot open " + out_path + " for writing");
  }
  std::ostream& os = file.is_open() ? file : std::cout;
  write_csv_header(os);
  for (std::size_t n = n_min; n <= n_max; n += n_step) {
    const std::uint64_t run_seed = mix_seed(seed, n, 0);
    Graph g(0);
    if (family == "complete") {
      g = Graph::complete(n);
    } else {
      std::mt19937_64 rng(run_seed);
      g = family == "gnp" ? gnp_graph(n, p, rng)
                          : planted_clique_graph(n, p, std::min(clique_size, n), rng);
    }
    const auto t0 = std::chrono::steady_clock::now();
    const Certificate cert = eval_ramsey(g, f, cfg);
    const auto t1 = std::chrono::steady_clock::now();
    BenchRecord rec;
    rec.fn_source = fn;
    rec.n = n;
    rec.k = eval_threshold(f, n);
    rec.strategy = choose_strategy(n, static_cast<std::size_t>(rec.k), cfg).kind;
    rec.outcome = cert.outcome;
    rec.wall_us = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count());
    rec.stats = cert.stats;
    rec.seed = run_seed;
    write_csv_row(os, rec);
    if (n_step == 0) break;
  }
  return 0;
}

int cmd_gen(const std::string& family, std::size_t n, double p, std::size_t clique_size,
            std::uint64_t seed, const std::string& format, const std::string& out_path) {
  std::mt19937_64 rng(seed);
  Graph g(0);
  if (family == "complete")
    g = Graph::complete(n);
  else if (family == "gnp")
    g = gnp_graph(n, p, rng);
  else
    g = planted_clique_graph(n, p, clique_size, rng);
  write_instance(g, out_path, format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clique-threshold quantifier toolkit"};
  app.require_subcommand(1);
  int rc = 0;

  // eval
  auto* eval = app.add_subcommand("eval", "decide one instance");
  static InstanceFlags eval_inst;
  static EngineFlags eval_eng;
  static std::string eval_fn;
  static bool eval_witness = false;
  add_instance_flags(eval, eval_inst);
  add_engine_flags(eval, eval_eng);
  eval->add_option("--fn", eval_fn, "threshold function in DSL text")->required();
  eval->add_flag("--witness", eval_witness, "print the witness set when the answer is true");
  eval->callback([&] { rc = cmd_eval(eval_inst, eval_eng, eval_fn, eval_witness); });

  // classify
  auto* cls = app.add_subcommand("classify", "asymptotic case and tractability verdict");
  static std::string cls_fn;
  cls->add_option("--fn", cls_fn, "threshold function in DSL text")->required();
  cls->callback([&] { rc = cmd_classify(cls_fn); });

  // reduce pad|sublinear|linear
  auto* reduce = app.add_subcommand("reduce", "instance transformations");
  reduce->require_subcommand(1);
  static InstanceFlags red_inst;
  static std::string red_fn, red_out, red_format = "graph";
  static std::uint64_t red_b = 0, red_k = 0, red_m = 0;

  auto add_reduce_common = [&](CLI::App* sub) {
    add_instance_flags(sub, red_inst);
    sub->add_option("--fn", red_fn, "threshold function in DSL text")->required();
    sub->add_option("--out", red_out, "output instance path (default stdout)");
    sub->add_option("--format", red_format, "graph|model output format")
        ->check(CLI::IsMember({"graph", "model"}));
  };
  auto* pad = reduce->add_subcommand("pad", "shift the bound b to b' = b + delta");
  add_reduce_common(pad);
  pad->add_option("--b", red_b, "input bound")->required();
  pad->callback(
      [&] { rc = cmd_reduce(pad_instance(load_instance(red_inst), red_b, parse_threshold(red_fn)), red_out, red_format); });
  auto* sub = reduce->add_subcommand("sublinear", "embed a k-clique question, sublinear f");
  add_reduce_common(sub);
  sub->add_option("--k", red_k, "target clique size")->required();
  sub->callback([&] {
    rc = cmd_reduce(embed_kclique_sublinear(load_instance(red_inst), red_k, parse_threshold(red_fn)),
                    red_out, red_format);
  });
  auto* lin = reduce->add_subcommand("linear", "embed an m-clique question, linear-gap f");
  add_reduce_common(lin);
  lin->add_option("--m", red_m, "target clique size")->required();
  lin->callback([&] {
    rc = cmd_reduce(embed_kclique_linear(load_instance(red_inst), red_m, parse_threshold(red_fn)),
                    red_out, red_format);
  });

  // probe
  auto* probe = app.add_subcommand("probe", "recover f(n) through the evaluator alone");
  static EngineFlags probe_eng;
  static std::string probe_fn;
  static std::size_t probe_n = 0;
  add_engine_flags(probe, probe_eng);
  probe->add_option("--fn", probe_fn, "threshold function in DSL text")->required();
  probe->add_option("--n", probe_n, "instance size")->required();
  probe->callback([&] { rc = cmd_probe(probe_fn, probe_n, probe_eng); });

  // oracle-check
  auto* check = app.add_subcommand("oracle-check", "seeded equivalence corpus");
  static EngineFlags check_eng;
  static std::size_t check_max_n = 12;
  static std::optional<std::size_t> check_trials;
  static std::uint64_t check_seed = 42;
  add_engine_flags(check, check_eng);
  check->add_option("--max-n", check_max_n, "largest instance size (default 12, cap 20)");
  check->add_option("--trials", check_trials, "instances per size (default 1000 small, 200 large)");
  check->add_option("--seed", check_seed, "corpus seed (default 42)");
  check->callback([&] { rc = cmd_oracle_check(check_max_n, check_trials, check_seed, check_eng); });

  // bench
  auto* bench = app.add_subcommand("bench", "timed evaluations as CSV");
  static EngineFlags bench_eng;
  static std::string bench_fn, bench_family = "complete", bench_out;
  static std::size_t bench_n_min = 1, bench_n_max = 0, bench_n_step = 1, bench_clique = 0;
  static double bench_p = 0.5;
  static std::uint64_t bench_seed = 0;
  add_engine_flags(bench, bench_eng);
  bench->add_option("--fn", bench_fn, "threshold function in DSL text")->required();
  bench->add_option("--family", bench_family, "complete|gnp|planted")
      ->check(CLI::IsMember({"complete", "gnp", "planted"}));
  bench->add_option("--n-min", bench_n_min, "sweep start (default 1)");
  bench->add_option("--n-max", bench_n_max, "sweep end")->required();
  bench->add_option("--n-step", bench_n_step, "sweep step (default 1)");
  bench->add_option("--p", bench_p, "edge probability for gnp/planted");
  bench->add_option("--clique-size", bench_clique, "planted clique size");
  bench->add_option("--seed", bench_seed, "base seed");
  bench->add_option("--out", bench_out, "CSV path (default stdout)");
  bench->callback([&] {
    rc = cmd_bench(bench_fn, bench_family, bench_n_min, bench_n_max, bench_n_step, bench_p,
                   bench_clique, bench_seed, bench_out, bench_eng);
  });

  // gen
  auto* gen = app.add_subcommand("gen", "write a seeded instance");
  static std::string gen_family, gen_format = "graph", gen_out;
  static std::size_t gen_n = 0, gen_clique = 0;
  static double gen_p = 0.5;
  static std::uint64_t gen_seed = 0;
  gen->add_option("--model", gen_family, "gnp|planted|complete instance family")
      ->required()
      ->check(CLI::IsMember({"gnp", "planted", "complete"}));
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--p", gen_p, "edge probability (default 0.5)");
  gen->add_option("--clique-size", gen_clique, "planted clique size");
  gen->add_option("--seed", gen_seed, "seed");
  gen->add_option("--format", gen_format, "graph|model output format")
      ->check(CLI::IsMember({"graph", "model"}));
  gen->add_option("--out", gen_out, "output path (default stdout)");
  gen->callback(
      [&] { rc = cmd_gen(gen_family, gen_n, gen_p, gen_clique, gen_seed, gen_format, gen_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // errors are exit 2; --help stays 0
  } catch (const ramsey::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return rc;
}

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fclp/asp.hpp"
#include "fclp/graphgen.hpp"
#include "fclp/jsonio.hpp"
#include "fclp/oracle.hpp"
#include "fclp/solver.hpp"
#include "fclp/syntax.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNoSolution = 2;
constexpr int kExitFuel = 3;

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void report(const std::vector<fclp::Diagnostic>& diags) {
  for (const auto& d : diags) std::cerr << fclp::to_string(d) << '\n';
}

unsigned long long env_seed() {
  if (const char* s = std::getenv("FCLP_SEED")) return std::strtoull(s, nullptr, 10);
  return 0;
}

std::string render_solution_text(const fclp::FactSet& facts) {
  std::string out;
  for (const auto& f : facts) {
    if (!out.empty()) out += ", ";
    out += fclp::to_string(f);
  }
  return out.empty() ? "(empty)" : out;
}

int run_check(const std::string& file) {
  auto text = read_file(file);
  if (!text) {
    std::cerr << "cannot read " << file << '\n';
    return kExitUsage;
  }
  auto loaded = fclp::load_program(*text);
  report(loaded.diagnostics);
  return loaded.program ? kExitOk : kExitUsage;
}

int run_solve(const std::string& file, size_t count, unsigned long long seed,
              long long fuel, const std::string& facts_file,
              const std::string& format) {
  auto text = read_file(file);
  if (!text) {
    std::cerr << "cannot read " << file << '\n';
    return kExitUsage;
  }
  auto loaded = fclp::load_program(*text);
  report(loaded.diagnostics);
  if (!loaded.program) return kExitUsage;
  fclp::Program program = std::move(*loaded.program);

  if (!facts_file.empty()) {
    auto facts_text = read_file(facts_file);
    if (!facts_text) {
      std::cerr << "cannot read " << facts_file << '\n';
      return kExitUsage;
    }
    try {
      for (const auto& f : fclp::facts_from_json_text(*facts_text)) {
        fclp::Rule r;
        r.head.pred = f.attr.pred;
        r.head.args = f.attr.args;
        r.head.values = {f.value};
        program.rules.push_back(std::move(r));
      }
    } catch (const fclp::Error& e) {
      std::cerr << facts_file << ": " << e.what() << '\n';
      return kExitUsage;
    }
  }

  fclp::SolveOptions options;
  options.seed = seed;
  options.fuel = fuel;
  fclp::Solver solver(program, options);
  fclp::EnumerateResult res = solver.enumerate(count);
  for (const auto& sol : res.solutions) {
    if (format == "json")
      std::cout << fclp::solution_to_json(sol).dump() << '\n';
    else
      std::cout << render_solution_text(sol) << '\n';
  }
  const char* status = res.fuel_exhausted ? "fuel-exhausted"
                       : res.exhausted    ? "exhausted"
                                          : "count-reached";
  std::cout << "status: " << status << '\n';
  if (!res.solutions.empty()) return kExitOk;
  return res.fuel_exhausted ? kExitFuel : kExitNoSolution;
}

int run_translate(const std::string& from, const std::string& in,
                  const std::string& out_path, bool permissive,
                  bool allow_nonground) {
  auto text = read_file(in);
  if (!text) {
    std::cerr << "cannot read " << in << '\n';
    return kExitUsage;
  }
  std::string result;
  if (from == "asp") {
    auto parsed = fclp::parse_asp(*text, allow_nonground);
    report(parsed.diagnostics);
    if (!parsed.program) return kExitUsage;
    result = fclp::asp_to_fclp(*parsed.program, permissive);
  } else if (from == "datalog") {
    auto translated = fclp::datalog_to_fclp(*text);
    report(translated.diagnostics);
    if (!translated.text) return kExitUsage;
    result = *translated.text;
  } else {
    std::cerr << "unknown translation source '" << from << "'\n";
    return kExitUsage;
  }
  if (out_path.empty()) {
    std::cout << result;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << out_path << '\n';
      return kExitUsage;
    }
    out << result;
  }
  return kExitOk;
}

const char* kSpanningTreeRules =
    "edge X Y :- edge Y X.\n"
    "root is? X :- edge X Y.\n"
    "parent X is { X } :- root is X.\n"
    "parent Y is? X :- edge X Y, parent X is Z.\n";

const char* kCanonicalRepsRules =
    "edge X Y :- edge Y X.\n"
    "representative X is? X :- node X.\n"
    "representative Y is { Z } :- edge X Y, representative X is Z.\n";

int run_bench(const std::string& suite, const std::string& family,
              const std::vector<int>& sizes, unsigned long long seed, int repeat,
              long long fuel) {
  const char* rules;
  bool with_nodes;
  if (suite == "spanning-tree") {
    rules = kSpanningTreeRules;
    with_nodes = false;
  } else if (suite == "canonical-reps") {
    rules = kCanonicalRepsRules;
    with_nodes = true;
  } else {
    std::cerr << "unknown suite '" << suite << "'\n";
    return kExitUsage;
  }
  if (std::find(fclp::graph_families.begin(), fclp::graph_families.end(), family) ==
      fclp::graph_families.end()) {
    std::cerr << "unknown graph family '" << family << "'\n";
    return kExitUsage;
  }

  std::cout << "family,size,nodes,edges,run,ms,backtracks,status\n";
  for (int size : sizes) {
    fclp::GraphInstance graph;
    try {
      graph = fclp::gen_graph(family, size, seed);
    } catch (const fclp::Error& e) {
      std::cerr << e.what() << '\n';
      return kExitUsage;
    }
    std::string text = std::string(rules) + fclp::graph_facts(graph, with_nodes);
    auto loaded = fclp::load_program(text);
    if (!loaded.program) {
      report(loaded.diagnostics);
      return kExitUsage;
    }
    for (int run = 0; run < repeat; ++run) {
      fclp::SolveOptions options;
      options.seed = seed + static_cast<unsigned long long>(run);
      options.fuel = fuel;
      fclp::Solver solver(*loaded.program, options);
      auto start = std::chrono::steady_clock::now();
      fclp::SolveResult res = solver.solve_one();
      auto stop = std::chrono::steady_clock::now();
      double ms = std::chrono::duration<double, std::milli>(stop - start).count();
      const char* status = res.status == fclp::SolveStatus::Solution ? "solution"
                           : res.status == fclp::SolveStatus::NoSolution
                               ? "no-solution"
                               : "fuel-exhausted";
      std::cout << family << ',' << size << ',' << graph.nodes << ','
                << graph.edges.size() << ',' << run << ',' << ms << ','
                << res.stats.backtracks << ',' << status << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-choice logic programming engine"};
  app.require_subcommand(1);

  std::string file;
  auto* check = app.add_subcommand("check", "parse and check a program");
  check->add_option("file", file)->required();

  size_t count = 1;
  unsigned long long seed = env_seed();
  long long fuel = 10'000'000;
  std::string facts_file;
  std::string format = "text";
  auto* solve = app.add_subcommand("solve", "enumerate solutions");
  solve->add_option("file", file)->required();
  solve->add_option("--count", count, "maximum number of solutions");
  solve->add_option("--seed", seed, "random seed (default: FCLP_SEED or 0)");
  solve->add_option("--fuel", fuel, "insertion budget");
  solve->add_option("--facts", facts_file, "JSON fact file merged into the program");
  solve->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string from, out_path;
  bool permissive = false, allow_nonground = false;
  auto* translate = app.add_subcommand("translate", "translate into the rule language");
  translate->add_option("--from", from)->required()->check(
      CLI::IsMember({"asp", "datalog"}));
  translate->add_option("input", file)->required();
  translate->add_option("output", out_path);
  translate->add_flag("--permissive", permissive,
                      "unconditional open rules in the ASP translation");
  translate->add_flag("--allow-nonground", allow_nonground);

  std::string suite, family = "sparse-random";
  std::vector<int> sizes;
  int repeat = 3;
  auto* bench = app.add_subcommand("bench", "time the graph benchmark suites");
  bench->add_option("--suite", suite)->required();
  bench->add_option("--family", family);
  bench->add_option("--sizes", sizes)->required()->delimiter(',');
  bench->add_option("--seed", seed);
  bench->add_option("--repeat", repeat);
  bench->add_option("--fuel", fuel);

  std::string gg_family;
  int gg_size = 0;
  bool gg_nodes = false;
  auto* gen = app.add_subcommand("gen-graph", "print a benchmark graph as facts");
  gen->add_option("family", gg_family)->required();
  gen->add_option("size", gg_size)->required();
  gen->add_option("--seed", seed);
  gen->add_flag("--with-nodes", gg_nodes);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*check) return run_check(file);
    if (*solve) return run_solve(file, count, seed, fuel, facts_file, format);
    if (*translate)
      return run_translate(from, file, out_path, permissive, allow_nonground);
    if (*bench) return run_bench(suite, family, sizes, seed, repeat, fuel);
    if (*gen) {
      std::cout << fclp::graph_facts(fclp::gen_graph(gg_family, gg_size, seed),
                                     gg_nodes);
      return kExitOk;
    }
  } catch (const fclp::Error& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

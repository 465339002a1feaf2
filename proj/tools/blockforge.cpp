// blockforge: build (l,m)-blocks, verify them, and run far-path queries.
//
// Exit codes: 0 pass, 1 bad input or I/O, 2 property violated,
// 3 budget or subset cap reached before a decision.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "blockforge/block.hpp"
#include "blockforge/brute_force.hpp"
#include "blockforge/distance.hpp"
#include "blockforge/document.hpp"
#include "blockforge/oracle.hpp"
#include "blockforge/report.hpp"
#include "blockforge/verify.hpp"

using namespace blockforge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitViolated = 2;
constexpr int kExitUndecided = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw std::runtime_error("cannot write " + path);
}

int exit_code(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return kExitOk;
    case CheckStatus::kFail:
      return kExitViolated;
    case CheckStatus::kUndecided:
      return kExitUndecided;
  }
  return kExitUndecided;
}

std::string show(const Distance& d) { return d ? std::to_string(*d) : "inf"; }

std::string show(std::span<const Vertex> vs) {
  std::string out = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(vs[i]);
  return out + "]";
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct BuildArgs {
  int ell = 1;
  int m = 1;
  bool degree3 = false;
  int depth = 0;
  std::string out;
};

int run_build(const BuildArgs& a) {
  const auto params = BlockParams::make(a.ell, a.m, a.degree3 ? Variant::kDegree3 : Variant::kStandard, a.depth);
  const Block b = build_block(params);
  write_file(a.out, serialize(b));
  std::cerr << "built (" << a.ell << "," << a.m << ") " << to_string(params.variant) << ": "
            << b.graph.vertex_count() << " vertices, " << b.graph.edge_count() << " edges\n";
  return kExitOk;
}

struct VerifyArgs {
  std::string check = "all";
  std::string in;
  std::string report = "-";
  int size_bound = -1;
  std::string mode = "exhaustive";
  std::uint64_t seed = 1;
  std::uint64_t trials = BlockerOptions{}.trials;
  std::uint64_t subset_cap = kDefaultSubsetCap;
  std::uint64_t budget = kDefaultSearchBudget;
  int workers = 1;
  bool witnesses = false;
};

int run_verify(const VerifyArgs& a) {
  const Block b = parse_block(read_file(a.in));
  VerifyOptions opt;
  opt.distances = a.check == "all" || a.check == "distances";
  opt.blockers = a.check == "all" || a.check == "blockers";
  opt.far_pairs = a.check == "all" || a.check == "far-pairs";
  if (a.size_bound >= 0) opt.size_bound = a.size_bound;
  opt.blocker_options.mode = a.mode == "sampled" ? BlockerMode::kSampled : BlockerMode::kExhaustive;
  opt.blocker_options.seed = a.seed;
  opt.blocker_options.trials = a.trials;
  opt.blocker_options.subset_cap = a.subset_cap;
  opt.blocker_options.record_witnesses = a.witnesses;
  opt.budget = a.budget;
  opt.workers = a.workers;

  Stopwatch clock;
  const auto v = verify_block(b, opt);
  write_file(a.report, format_document(verification_document(b, v, a.check)));

  if (v.distances) {
    std::cerr << "distances: " << to_string(v.distances->status) << " (min within S+T "
              << show(v.distances->min_within) << ", root gap " << show(v.distances->root_gap) << ")\n";
  }
  if (v.blockers) {
    std::cerr << "blockers: " << to_string(status_of(*v.blockers)) << " (" << to_string(v.blockers->verdict) << ", "
              << v.blockers->subsets_tested << " sets tested";
    if (v.blockers->covering) {
      std::cerr << ", covering X = " << show(v.blockers->covering->ids());
    }
    std::cerr << ")\n";
  }
  if (v.far_pairs) {
    std::cerr << "far-pairs: " << to_string(status_of(*v.far_pairs)) << " (" << to_string(v.far_pairs->outcome)
              << ", " << v.far_pairs->stats.nodes << " nodes)\n";
  }
  std::cerr << "overall: " << to_string(v.status) << " in " << clock.seconds() << " s\n";
  return exit_code(v.status);
}

struct SolveArgs {
  std::string in;
  int k = 2;
  int c = 3;
  bool exclude_root = false;
  bool counterexample = false;
  std::uint64_t budget = kDefaultSearchBudget;
  int workers = 1;
  std::string report;
};

int run_solve(const SolveArgs& a) {
  const Block b = parse_block(read_file(a.in));
  FarPathQuery q;
  if (a.counterexample) {
    const auto ce = counterexample_from_block(b);
    q.S = ce.S_prime;
    q.T = ce.T_prime;
  } else {
    q.S = b.S;
    q.T = b.T;
  }
  q.k = a.k;
  q.c = a.c;
  if (a.exclude_root) q.forbidden = VertexSet{b.root};
  q.budget = a.budget;

  Stopwatch clock;
  const auto cert = find_far_paths(b.graph, q, SearchOptions{a.workers});
  if (!a.report.empty()) {
    Document doc;
    doc["format_version"] = kFormatVersion;
    doc["report"] = "solve";
    doc["block"] = block_summary(b);
    for (auto& [key, value] : to_document(q, cert).items()) doc[key] = value;
    write_file(a.report, format_document(doc));
  }

  switch (cert.outcome) {
    case SearchOutcome::kWitness:
      std::cout << "witness: " << q.k << " paths, pairwise distance "
                << show(cert.witness->certified_min_pairwise_distance) << "\n";
      for (const auto& p : cert.witness->paths) std::cout << "  " << show(p) << "\n";
      break;
    case SearchOutcome::kExhaustedNoWitness:
      std::cout << "no witness (search exhausted)\n";
      break;
    case SearchOutcome::kBudgetExceeded:
      std::cout << "undecided: budget of " << q.budget << " nodes exceeded\n";
      break;
  }
  std::cerr << cert.stats.nodes << " nodes in " << clock.seconds() << " s\n";
  return cert.outcome == SearchOutcome::kBudgetExceeded ? kExitUndecided : kExitOk;
}

int run_export(const std::string& in, const std::string& dot) {
  write_file(dot, export_dot(parse_block(read_file(in))));
  return kExitOk;
}

int run_stats(const std::string& in) {
  const Block b = parse_block(read_file(in));
  const auto st = degree_stats(b.graph);
  std::cout << "block (" << b.params.ell << "," << b.params.m << ") " << to_string(b.params.variant)
            << ", tree depth " << b.params.tree_depth << "\n";
  std::cout << "vertices " << b.graph.vertex_count() << "\n";
  std::cout << "edges " << b.graph.edge_count() << "\n";
  std::cout << "root " << b.root << " degree " << b.graph.degree(b.root) << "\n";
  std::cout << "S " << show(b.S.ids()) << "\n";
  std::cout << "T " << show(b.T.ids()) << "\n";
  std::cout << "max degree " << st.max_degree << ", excluding root " << max_degree_excluding(b.graph, b.root) << "\n";
  std::cout << "degree histogram\n";
  for (auto [degree, count] : st.histogram) std::cout << "  " << degree << ": " << count << "\n";
  return kExitOk;
}

struct OracleArgs {
  std::uint64_t seed = 1;
  std::size_t count = 500;
  int max_vertices = kBruteForceMaxVertices;
  std::size_t power_count = 200;
};

int run_oracle(const OracleArgs& a) {
  Stopwatch clock;
  const auto far = run_oracle_corpus(a.seed, a.count, a.max_vertices);
  const auto power = run_power_law_corpus(a.seed, a.power_count);
  std::cout << "far paths: " << far.instances << " graphs, " << far.comparisons << " comparisons, "
            << far.witnesses << " with witness, " << far.menger_checks << " menger checks\n";
  std::cout << "graph powers: " << power.graphs << " graphs, " << power.pairs << " pairs\n";
  for (const auto& m : far.mismatches) std::cout << "mismatch: " << m << "\n";
  for (const auto& m : power.mismatches) std::cout << "mismatch: " << m << "\n";
  const std::size_t total = far.mismatches.size() + power.mismatches.size();
  std::cout << total << " mismatches\n";
  std::cerr << "oracle finished in " << clock.seconds() << " s\n";
  return total == 0 ? kExitOk : kExitViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Build and machine-check (l,m)-blocks"};
  app.require_subcommand(1, 1);

  BuildArgs build;
  auto* cmd_build = app.add_subcommand("build", "write a canonical block document");
  cmd_build->add_option("--ell", build.ell, "l >= 1")->required()->check(CLI::PositiveNumber);
  cmd_build->add_option("--m", build.m, "m >= 1")->required()->check(CLI::PositiveNumber);
  cmd_build->add_flag("--degree3", build.degree3, "max degree 3 outside the root");
  cmd_build->add_option("--depth", build.depth, "scaffold depth (default 2l+2)");
  cmd_build->add_option("--out", build.out, "output file, - for stdout")->required();

  VerifyArgs verify;
  auto* cmd_verify = app.add_subcommand("verify", "check the block properties");
  cmd_verify->add_option("check", verify.check, "distances | blockers | far-pairs | all")
      ->check(CLI::IsMember({"distances", "blockers", "far-pairs", "all"}));
  cmd_verify->add_option("--in", verify.in, "block document")->required();
  cmd_verify->add_option("--report", verify.report, "report file, - for stdout");
  cmd_verify->add_option("--size-bound", verify.size_bound, "largest |X| tested (default m-1)")
      ->check(CLI::NonNegativeNumber);
  cmd_verify->add_option("--mode", verify.mode, "blocker search mode")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  cmd_verify->add_option("--seed", verify.seed, "sampled mode seed");
  cmd_verify->add_option("--trials", verify.trials, "sampled mode random subsets");
  cmd_verify->add_option("--subset-cap", verify.subset_cap, "exhaustive mode refusal threshold");
  cmd_verify->add_option("--budget", verify.budget, "far-pair search node budget");
  cmd_verify->add_option("--workers", verify.workers, "worker threads")->check(CLI::PositiveNumber);
  cmd_verify->add_flag("--witnesses", verify.witnesses, "record an escape path for every X");

  SolveArgs solve;
  auto* cmd_solve = app.add_subcommand("solve", "decide whether k far paths exist");
  cmd_solve->add_option("--in", solve.in, "block document")->required();
  cmd_solve->add_option("--k", solve.k, "number of paths")->required()->check(CLI::PositiveNumber);
  cmd_solve->add_option("--c", solve.c, "pairwise distance")->required()->check(CLI::PositiveNumber);
  cmd_solve->add_flag("--exclude-root", solve.exclude_root, "paths may not use the root");
  cmd_solve->add_flag("--use-counterexample-endpoints", solve.counterexample, "use S+{r} and T+{r}");
  cmd_solve->add_option("--budget", solve.budget, "node budget");
  cmd_solve->add_option("--workers", solve.workers, "worker threads")->check(CLI::PositiveNumber);
  cmd_solve->add_option("--report", solve.report, "also write a report document");

  std::string export_in;
  std::string export_dot_path;
  auto* cmd_export = app.add_subcommand("export", "write Graphviz DOT");
  cmd_export->add_option("--in", export_in, "block document")->required();
  cmd_export->add_option("--dot", export_dot_path, "DOT output, - for stdout")->required();

  std::string stats_in;
  auto* cmd_stats = app.add_subcommand("stats", "print counts and the degree histogram");
  cmd_stats->add_option("--in", stats_in, "block document")->required();

  OracleArgs oracle;
  auto* cmd_oracle = app.add_subcommand("oracle", "cross-check the solver on random graphs");
  cmd_oracle->add_option("--seed", oracle.seed, "corpus seed");
  cmd_oracle->add_option("--count", oracle.count, "random graphs for the far-path check");
  cmd_oracle->add_option("--max-vertices", oracle.max_vertices, "largest graph")
      ->check(CLI::Range(4, kBruteForceMaxVertices));
  cmd_oracle->add_option("--power-count", oracle.power_count, "random graphs for the power check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*cmd_build) return run_build(build);
    if (*cmd_verify) return run_verify(verify);
    if (*cmd_solve) return run_solve(solve);
    if (*cmd_export) return run_export(export_in, export_dot_path);
    if (*cmd_stats) return run_stats(stats_in);
    if (*cmd_oracle) return run_oracle(oracle);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

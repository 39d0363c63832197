// drunkcop: generation, simulation, exact analysis, lemma checks and
// scaling tables for the cop-and-drunk game.

#include <chrono>
#include <cmath>
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "drunkcop/drunkcop.hpp"

#ifndef DRUNKCOP_VERSION
#define DRUNKCOP_VERSION "unknown"
#endif

namespace {

using nlohmann::json;
using namespace drunkcop;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFault = 3;

constexpr int kOptimalMaxOrder = 200;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Accepts 10000, 1e4 and 10^4.
std::int64_t parse_count(const std::string& text) {
  std::int64_t out = 0;
  if (auto caret = text.find('^'); caret != std::string::npos) {
    const double base = std::stod(text.substr(0, caret));
    const double exp = std::stod(text.substr(caret + 1));
    out = std::llround(std::pow(base, exp));
  } else if (text.find_first_of("eE.") != std::string::npos) {
    out = std::llround(std::stod(text));
  } else {
    std::size_t used = 0;
    out = std::stoll(text, &used);
    if (used != text.size()) throw UsageError("not a count: " + text);
  }
  if (out < 0) throw UsageError("negative count: " + text);
  return out;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct Manifest {
  std::string subcommand;
  json params = json::object();
  std::uint64_t seed = 0;
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

  json to_json() const {
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - started).count();
    return {{"subcommand", subcommand},
            {"params", params},
            {"seed", seed},
            {"version", DRUNKCOP_VERSION},
            {"duration_s", secs}};
  }
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

// A graph argument is a file when one exists at that path, otherwise an
// inline family spec such as "path:100".
struct ResolvedGraph {
  Graph graph;
  Vertex cop_start = 0;
  Vertex drunk_start = 0;
  std::string source;
};

ResolvedGraph resolve_graph(const std::string& arg, const std::vector<std::string>& extra) {
  std::string spec_text = arg;
  if (!extra.empty()) {
    spec_text += spec_text.find(':') == std::string::npos ? ":" : ",";
    for (std::size_t i = 0; i < extra.size(); ++i) spec_text += (i ? "," : "") + extra[i];
  }
  if (extra.empty() && std::filesystem::is_regular_file(arg)) {
    Graph g = read_graph(arg);
    const DistanceField field = bfs(g, 0);
    const Vertex far = static_cast<Vertex>(
        std::max_element(field.dist.begin(), field.dist.end()) - field.dist.begin());
    return {std::move(g), 0, far, arg};
  }
  const FamilySpec spec = FamilySpec::parse(spec_text);
  FamilyInstance inst = make_family(spec);
  return {std::move(inst.graph), inst.cop_start, inst.drunk_start, spec.to_string()};
}

// Splits the free arguments of a subcommand into plain positionals and
// key=value pairs that are not options of that subcommand.
struct FreeArgs {
  std::vector<std::string> positional;
  std::vector<std::string> params;
};

FreeArgs split_free(const std::vector<std::string>& args) {
  FreeArgs out;
  for (const auto& a : args) {
    const bool param = a.find('=') != std::string::npos && a.find(':') == std::string::npos;
    (param ? out.params : out.positional).push_back(a);
  }
  return out;
}

std::string option_name(std::string key) {
  for (char& ch : key) {
    if (ch == '_') ch = '-';
  }
  return "--" + key;
}

// Rewrites "trials=100" as "--trials 100" when the active subcommand knows
// that option; family parameters such as "n=100" are left in place.
std::vector<std::string> normalize_argv(int argc, char** argv,
                                        const std::map<std::string, std::set<std::string>>& known) {
  std::vector<std::string> out{argv[0]};
  const std::set<std::string>* opts = nullptr;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (!opts) {
      if (auto it = known.find(a); it != known.end()) opts = &it->second;
      out.push_back(a);
      continue;
    }
    const auto eq = a.find('=');
    if (a.rfind("-", 0) != 0 && eq != std::string::npos) {
      const std::string name = option_name(a.substr(0, eq));
      if (opts->count(name)) {
        out.push_back(name);
        out.push_back(a.substr(eq + 1));
        continue;
      }
    }
    out.push_back(a);
  }
  return out;
}

// ---- gen ---------------------------------------------------------------------

struct GenArgs {
  std::vector<std::string> args;
  std::string out;
};

int run_gen(const GenArgs& a) {
  Manifest m{"gen"};
  const FreeArgs free = split_free(a.args);
  if (free.positional.size() != 1) throw UsageError("gen needs exactly one family name");
  const ResolvedGraph rg = resolve_graph(free.positional[0], free.params);
  m.params = {{"family", rg.source}, {"out", a.out}};
  const bool as_json = std::filesystem::path(a.out).extension() == ".json";
  if (as_json) {
    json doc = json::parse(format_graph_json(rg.graph));
    doc["manifest"] = m.to_json();
    emit(doc.dump(2) + "\n", a.out);
  } else {
    emit("# manifest " + m.to_json().dump() + "\n" + format_edge_list(rg.graph), a.out);
  }
  if (!a.out.empty() && a.out != "-") {
    std::cerr << rg.source << ": " << rg.graph.order() << " vertices, "
              << rg.graph.edge_count() << " edges -> " << a.out << "\n";
  }
  return kExitPass;
}

// ---- simulate ----------------------------------------------------------------

struct SimulateArgs {
  std::vector<std::string> args;
  std::string policy;
  std::optional<int> cop, drunk;
  std::string trials = "10000";
  std::uint64_t seed = 1;
  int workers = 0;
  bool idle = false;
  std::string move_cap;
  std::string out, csv, trajectory;
};

int run_simulate(const SimulateArgs& a) {
  Manifest m{"simulate"};
  const FreeArgs free = split_free(a.args);
  if (free.positional.empty() || free.positional.size() > 4) {
    throw UsageError("simulate <graph> [policy] [cop] [drunk] [key=value...]");
  }
  std::string policy = a.policy;
  std::optional<int> cop = a.cop, drunk = a.drunk;
  if (free.positional.size() > 1) policy = free.positional[1];
  if (free.positional.size() > 2) cop = std::stoi(free.positional[2]);
  if (free.positional.size() > 3) drunk = std::stoi(free.positional[3]);
  if (policy.empty()) policy = "smart";

  const ResolvedGraph rg = resolve_graph(free.positional[0], free.params);
  const PolicySpec spec = PolicySpec::parse(policy);
  GameConfig cfg;
  cfg.cop_start = cop.value_or(rg.cop_start);
  cfg.drunk_start = drunk.value_or(rg.drunk_start);
  cfg.cop_may_idle = a.idle;
  if (!a.move_cap.empty()) cfg.move_cap = parse_count(a.move_cap);
  cfg.validate(rg.graph);
  const std::int64_t trials = parse_count(a.trials);
  if (trials < 1) throw UsageError("trials must be >= 1");
  const int workers = a.workers > 0 ? a.workers : default_worker_count();

  m.seed = a.seed;
  m.params = {{"graph", rg.source},       {"policy", spec.to_string()},
              {"cop", cfg.cop_start},     {"drunk", cfg.drunk_start},
              {"trials", trials},         {"idle", cfg.cop_may_idle},
              {"move_cap", cfg.move_cap}, {"workers", workers}};

  const auto outcomes = run_trials(rg.graph, spec, cfg, trials, a.seed, workers);
  const SimulationReport report = summarize(outcomes, a.seed);

  json doc;
  doc["manifest"] = m.to_json();
  doc["report"] = json::parse(report_to_json(report));
  emit(doc.dump(2) + "\n", a.out);

  if (!a.csv.empty()) {
    std::ostringstream os;
    os << "# manifest " << m.to_json().dump() << "\n";
    os << "trial,capture_time\n";
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      os << i << ',' << outcomes[i].capture_time << '\n';
    }
    emit(os.str(), a.csv);
  }
  if (!a.trajectory.empty()) {
    // Replays trial 0 with recording on; same seed, same game.
    GameConfig rec = cfg;
    rec.record_trajectory = true;
    PolicyFactory factory(rg.graph, spec);
    auto pol = factory.make();
    Rng rng(derive_seed(a.seed, 0));
    const TrialOutcome t0 = play_game(rg.graph, *pol, rec, rng);
    std::ostringstream os;
    os << "# manifest " << m.to_json().dump() << "\n";
    write_trajectory(os, t0);
    emit(os.str(), a.trajectory);
  }
  return kExitPass;
}

// ---- exact / optimal ---------------------------------------------------------

struct ExactArgs {
  std::vector<std::string> args;
  std::string policy;
  std::optional<int> cop, drunk;
  double tolerance = 1e-10;
  bool idle = false;
  std::string out;
};

int finish_table(Manifest& m, const ValueTable& table, std::optional<int> cop,
                 std::optional<int> drunk, const std::string& out) {
  m.params["iterations"] = table.iterations;
  m.params["residual"] = table.residual;
  if (cop.has_value() != drunk.has_value()) {
    throw UsageError("give both cop and drunk starts, or neither");
  }
  if (cop) {
    if (*cop < 0 || *cop >= table.order() || *drunk < 0 || *drunk >= table.order()) {
      throw UsageError("start vertex out of range");
    }
    const double v = table.at(*cop, *drunk);
    if (out.empty() || out == "-") {
      std::cout << fmt(v) << "\n";
    } else {
      json doc{{"manifest", m.to_json()}, {"cop", *cop}, {"drunk", *drunk}, {"value", v}};
      emit(doc.dump(2) + "\n", out);
    }
    return kExitPass;
  }
  emit("# manifest " + m.to_json().dump() + "\n" + table.to_csv(), out);
  return kExitPass;
}

int run_exact(const ExactArgs& a) {
  Manifest m{"exact"};
  const FreeArgs free = split_free(a.args);
  if (free.positional.empty() || free.positional.size() > 4) {
    throw UsageError("exact <graph> [policy] [cop] [drunk]");
  }
  std::string policy = a.policy.empty() ? "greedy:lex" : a.policy;
  std::optional<int> cop = a.cop, drunk = a.drunk;
  if (free.positional.size() > 1) policy = free.positional[1];
  if (free.positional.size() > 2) cop = std::stoi(free.positional[2]);
  if (free.positional.size() > 3) drunk = std::stoi(free.positional[3]);

  const ResolvedGraph rg = resolve_graph(free.positional[0], free.params);
  const PolicySpec spec = PolicySpec::parse(policy);
  SolverOptions opts;
  opts.tolerance = a.tolerance;
  opts.cop_may_idle = a.idle;
  if (spec.kind == PolicyKind::kOscillate) {
    if (!cop) throw UsageError("oscillate needs the cop start as its anchor");
    opts.oscillate_anchor = *cop;
  }
  m.params = {{"graph", rg.source}, {"policy", spec.to_string()}, {"tolerance", a.tolerance},
              {"idle", a.idle}};
  if (cop) m.params["cop"] = *cop;
  if (drunk) m.params["drunk"] = *drunk;
  const ValueTable table = exact_expected_capture(rg.graph, spec, opts);
  return finish_table(m, table, cop, drunk, a.out);
}

int run_optimal(const ExactArgs& a) {
  Manifest m{"optimal"};
  const FreeArgs free = split_free(a.args);
  if (free.positional.empty() || free.positional.size() > 3) {
    throw UsageError("optimal <graph> [cop] [drunk]");
  }
  std::optional<int> cop = a.cop, drunk = a.drunk;
  if (free.positional.size() > 1) cop = std::stoi(free.positional[1]);
  if (free.positional.size() > 2) drunk = std::stoi(free.positional[2]);
  const ResolvedGraph rg = resolve_graph(free.positional[0], free.params);
  if (rg.graph.order() > kOptimalMaxOrder) {
    throw UsageError("optimal is limited to graphs with at most " +
                     std::to_string(kOptimalMaxOrder) + " vertices");
  }
  SolverOptions opts;
  opts.tolerance = a.tolerance;
  opts.cop_may_idle = a.idle;
  m.params = {{"graph", rg.source}, {"tolerance", a.tolerance}, {"idle", a.idle}};
  if (cop) m.params["cop"] = *cop;
  if (drunk) m.params["drunk"] = *drunk;
  const ValueTable table = optimal_capture_values(rg.graph, opts);
  m.params["max_value"] = table.max_value();
  return finish_table(m, table, cop, drunk, a.out);
}

// ---- verify ------------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  SuiteOptions options;
  std::string out;
};

int run_verify(VerifyArgs a) {
  Manifest m{"verify"};
  if (a.options.workers <= 0) a.options.workers = default_worker_count();
  const auto& o = a.options;
  m.seed = o.seed;
  m.params = {{"suite", a.suite},
              {"max_n", o.max_n},
              {"t_max", o.t_max},
              {"random_graphs", o.random_graphs},
              {"random_max_n", o.random_max_n},
              {"random_t_max", o.random_t_max},
              {"workers", o.workers}};
  const auto reports = run_suite(a.suite, o);
  bool pass = true;
  json arr = json::array();
  for (const auto& r : reports) {
    pass = pass && r.pass;
    arr.push_back(json::parse(r.to_json()));
    std::cerr << (r.pass ? "PASS " : "FAIL ") << r.lemma << " [" << r.domain << "] cases="
              << r.cases << " worst_margin=" << fmt(r.worst_margin) << "\n";
  }
  json doc{{"manifest", m.to_json()}, {"pass", pass}, {"reports", arr}};
  emit(doc.dump(2) + "\n", a.out);
  return pass ? kExitPass : kExitFail;
}

// ---- bench -------------------------------------------------------------------

struct BenchArgs {
  std::string family;
  std::string sizes;
  std::string policies = "greedy:lex,smart";
  std::string trials = "2000";
  std::uint64_t seed = 1;
  int workers = 0;
  std::string out;
};

FamilySpec sized_family(const std::string& base, int size) {
  FamilySpec spec = FamilySpec::parse(base);
  if (spec.family == "projective_incidence") {
    spec.q = size;
  } else if (spec.family == "complete_bipartite") {
    spec.a = size / 2;
    spec.b = size - size / 2;
  } else {
    spec.n = size;
  }
  return spec;
}

int run_bench(const BenchArgs& a) {
  Manifest m{"bench"};
  std::vector<int> sizes;
  for (const auto& s : split_list(a.sizes)) sizes.push_back(static_cast<int>(parse_count(s)));
  const auto policies = split_list(a.policies);
  if (sizes.empty() || policies.empty()) throw UsageError("bench needs sizes and policies");
  for (const auto& p : policies) PolicySpec::parse(p);
  FamilySpec::parse(a.family);
  const std::int64_t trials = parse_count(a.trials);
  if (trials < 1) throw UsageError("trials must be >= 1");
  const int workers = a.workers > 0 ? a.workers : default_worker_count();
  m.seed = a.seed;
  m.params = {{"family", a.family}, {"sizes", sizes},     {"policies", policies},
              {"trials", trials},   {"workers", workers}};

  std::ostringstream rows;
  int failures = 0;
  for (int size : sizes) {
    for (const auto& p : policies) {
      try {
        const FamilySpec spec = sized_family(a.family, size);
        const FamilyInstance inst = make_family(spec);
        GameConfig cfg;
        cfg.cop_start = inst.cop_start;
        cfg.drunk_start = inst.drunk_start;
        const SimulationReport r =
            monte_carlo(inst.graph, PolicySpec::parse(p), cfg, trials, a.seed, workers);
        rows << spec.family << ',' << size << ',' << p << ',' << r.trials << ',' << fmt(r.mean)
             << ',' << fmt(r.std_error) << ',' << r.min << ',' << r.max << '\n';
        std::cerr << spec.family << " n=" << size << " " << p << ": mean " << r.mean << "\n";
      } catch (const std::exception& e) {
        ++failures;
        std::cerr << "cell " << a.family << " n=" << size << " " << p << " failed: " << e.what()
                  << "\n";
      }
    }
  }
  m.params["failed_cells"] = failures;
  emit("# manifest " + m.to_json().dump() + "\nfamily,n,policy,trials,mean,stderr,min,max\n" +
           rows.str(),
       a.out);
  if (failures) {
    std::cerr << failures << " of " << sizes.size() * policies.size() << " cells failed\n";
    return kExitFail;
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"drunkcop: a cop chasing a randomly walking drunk on graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", DRUNKCOP_VERSION);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph family and write it to a file");
  gen_cmd->add_option("args", gen.args, "family [key=value...] or inline spec like path:100")
      ->required();
  gen_cmd->add_option("-o,--out", gen.out, "output file (.json for structured), default stdout");

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo capture times");
  sim_cmd->add_option("args", sim.args, "graph [policy] [cop] [drunk] [family key=value...]")
      ->required();
  sim_cmd->add_option("--policy", sim.policy, "policy string (default smart)");
  sim_cmd->add_option("--cop", sim.cop, "cop start vertex");
  sim_cmd->add_option("--drunk", sim.drunk, "drunk start vertex");
  sim_cmd->add_option("--trials", sim.trials, "number of trials (10^4 and 1e4 accepted)");
  sim_cmd->add_option("--seed", sim.seed, "master seed");
  sim_cmd->add_option("--workers", sim.workers, "worker threads (default DRUNKCOP_WORKERS)");
  sim_cmd->add_flag("--idle", sim.idle, "let the cop stay in place");
  sim_cmd->add_option("--move-cap", sim.move_cap, "truncate trials after this many moves");
  sim_cmd->add_option("-o,--out", sim.out, "JSON report path, default stdout");
  sim_cmd->add_option("--csv", sim.csv, "per-trial CSV path");
  sim_cmd->add_option("--trajectory", sim.trajectory, "trajectory dump of trial 0");

  ExactArgs ex;
  auto* ex_cmd = app.add_subcommand("exact", "Exact expected capture times of a memoryless policy");
  ex_cmd->add_option("args", ex.args, "graph [policy] [cop] [drunk]")->required();
  ex_cmd->add_option("--policy", ex.policy, "policy string (default greedy:lex)");
  ex_cmd->add_option("--cop", ex.cop, "cop start vertex");
  ex_cmd->add_option("--drunk", ex.drunk, "drunk start vertex");
  ex_cmd->add_option("--tolerance", ex.tolerance, "sweep stopping tolerance");
  ex_cmd->add_flag("--idle", ex.idle, "let the cop stay in place");
  ex_cmd->add_option("-o,--out", ex.out, "output path, default stdout");

  ExactArgs opt;
  auto* opt_cmd = app.add_subcommand("optimal", "Optimal-cop expected capture times");
  opt_cmd->add_option("args", opt.args, "graph [cop] [drunk]")->required();
  opt_cmd->add_option("--cop", opt.cop, "cop start vertex");
  opt_cmd->add_option("--drunk", opt.drunk, "drunk start vertex");
  opt_cmd->add_option("--tolerance", opt.tolerance, "sweep stopping tolerance");
  opt_cmd->add_flag("--idle", opt.idle, "let the cop stay in place");
  opt_cmd->add_option("-o,--out", opt.out, "output path, default stdout");

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Run a lemma verification suite");
  ver_cmd->add_option("suite", ver.suite, "suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  ver_cmd->add_option("--max-n", ver.options.max_n, "exhaustive enumeration bound");
  ver_cmd->add_option("--t-max", ver.options.t_max, "walk horizon");
  ver_cmd->add_option("--random-graphs", ver.options.random_graphs, "random sample size");
  ver_cmd->add_option("--random-max-n", ver.options.random_max_n, "random sample order bound");
  ver_cmd->add_option("--random-t-max", ver.options.random_t_max, "random sample horizon");
  ver_cmd->add_option("--seed", ver.options.seed, "seed of the random sample");
  ver_cmd->add_option("--workers", ver.options.workers, "worker threads");
  ver_cmd->add_option("-o,--out", ver.out, "JSON path, default stdout");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Scaling table over sizes and policies");
  bench_cmd->add_option("family", bench.family, "family name or spec, e.g. ladder or lollipop:c=1")
      ->required();
  bench_cmd->add_option("--sizes", bench.sizes, "comma-separated sizes")->required();
  bench_cmd->add_option("--policies", bench.policies, "comma-separated policy strings");
  bench_cmd->add_option("--trials", bench.trials, "trials per cell");
  bench_cmd->add_option("--seed", bench.seed, "master seed");
  bench_cmd->add_option("--workers", bench.workers, "worker threads");
  bench_cmd->add_option("-o,--out", bench.out, "CSV path, default stdout");

  std::map<std::string, std::set<std::string>> known;
  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) {
    for (const auto* o : sub->get_options()) {
      for (const auto& ln : o->get_lnames()) known[sub->get_name()].insert("--" + ln);
    }
  }
  known["gen"].insert("--out");

  std::vector<std::string> args = normalize_argv(argc, argv, known);
  std::reverse(args.begin(), args.end());
  args.pop_back();

  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*sim_cmd) return run_simulate(sim);
    if (*ex_cmd) return run_exact(ex);
    if (*opt_cmd) return run_optimal(opt);
    if (*ver_cmd) return run_verify(ver);
    if (*bench_cmd) return run_bench(bench);
  } catch (const SolverError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == SolverErrorKind::kNoConvergence ? kExitFault : kExitUsage;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFault;
  }
  return kExitUsage;
}

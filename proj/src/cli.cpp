#include "pathpack/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "pathpack/generator.hpp"
#include "pathpack/io.hpp"
#include "pathpack/solve.hpp"

namespace pathpack {

namespace {

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case errc::too_many_paths:
    case errc::too_many_expansions:
    case errc::search_budget_exceeded:
    case errc::terminal_limit_exceeded:
      return 3;
    case errc::half_integer_gap_detected:
    case errc::common_solution_gap_detected:
      return 1;
    default:
      return 2;
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Instance load_instance(const std::string& path, int terminal_limit) {
  return resolve_instance(parse_network(slurp(path)), terminal_limit);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Theorem-violating instances are preserved for later study.
void write_falsifier(const std::string& dir, const std::string& tag,
                     const Instance& inst, const std::string& note,
                     std::ostream& err) {
  std::filesystem::create_directories(dir);
  std::string body = print_network(inst, false);
  std::string name =
      dir + "/falsifier_" + tag + "_" + std::to_string(fnv1a(body)) + ".net";
  std::ofstream out(name);
  out << "# " << note << "\n" << body;
  err << "falsifier written: " << name << "\n";
}

struct CommonOpts {
  size_t path_cap = 100000;
  size_t expansion_cap = 2000000;
  long long budget = 4000000;
  int terminal_limit = 16;
  std::string falsifier_dir = "falsifiers";

  SolverLimits limits() const {
    SolverLimits l;
    l.max_paths = path_cap;
    l.search_budget = budget;
    l.max_expansions = expansion_cap;
    return l;
  }
};

long long parse_mode(const std::string& mode) {
  // 0 encodes the LP; otherwise the denominator D of the weight grid
  if (mode == "lp") return 0;
  if (mode == "half") return 2;
  if (mode == "integer") return 1;
  if (mode.rfind("frac:", 0) == 0) {
    long long d = 0;
    try {
      d = std::stoll(mode.substr(5));
    } catch (...) {
      d = 0;
    }
    if (d <= 0) throw Error(errc::parse_error, "bad mode '" + mode + "'");
    return d;
  }
  throw Error(errc::parse_error, "bad mode '" + mode + "'");
}

int cmd_validate(const std::string& file, const CommonOpts& opts, std::ostream& out) {
  Instance inst = load_instance(file, opts.terminal_limit);
  KNetworkReport rep = validate_k_network(inst.net, inst.clutter, opts.terminal_limit);
  out << "anticliques " << (rep.anticliques_match ? "ok" : "mismatch") << "\n";
  out << "k-clutter " << (rep.clutter_ok ? "ok" : "violated") << "\n";
  out << "eulerian " << (rep.eulerian ? "ok" : "violated") << "\n";
  for (const auto& note : rep.notes) out << "note: " << note << "\n";
  if (rep.witness) {
    out << "witness:";
    for (const auto* m : {&rep.witness->a, &rep.witness->b, &rep.witness->c}) {
      out << " {";
      bool first = true;
      for (const auto& t : *m) {
        if (!first) out << " ";
        out << t;
        first = false;
      }
      out << "}";
    }
    out << "\n";
  }
  out << (rep.is_k_network() ? "K-network" : "not a K-network") << "\n";
  return rep.is_k_network() ? 0 : 1;
}

int cmd_solve(const std::string& file, const std::string& problem,
              const std::string& mode, bool simple_only, bool min_size,
              const CommonOpts& opts, std::ostream& out, std::ostream& err) {
  Instance inst = load_instance(file, opts.terminal_limit);
  Problem pr = problem == "s" ? Problem::S : Problem::W;
  long long scale = parse_mode(mode);
  SolveResult res;
  try {
    if (min_size && pr == Problem::W && scale == 2) {
      res = min_size_w_solution(inst.net, inst.clutter, opts.limits());
    } else if (min_size) {
      res = solve_min_size(inst.net, inst.clutter, pr, scale, simple_only,
                           opts.limits());
    } else if (scale == 0) {
      res = solve_fractional(inst.net, inst.clutter, pr, simple_only, opts.limits());
    } else {
      res = solve_scaled_integer(inst.net, inst.clutter, pr, scale, simple_only,
                                 opts.limits());
    }
  } catch (const Error& e) {
    if (e.code() == errc::half_integer_gap_detected ||
        e.code() == errc::common_solution_gap_detected) {
      write_falsifier(opts.falsifier_dir, "solve", inst, e.what(), err);
    }
    throw;
  }
  Solution sol;
  sol.problem = problem;
  sol.mode = res.mode;
  sol.value = res.value;
  sol.flow = res.flow;
  out << print_solution(sol);
  return 0;
}

int cmd_cuts(const std::string& file, const CommonOpts& opts, std::ostream& out) {
  Instance inst = load_instance(file, opts.terminal_limit);
  auto print_entry = [&](const std::set<NodeId>& A) {
    LambdaResult l = lambda(inst.net, A);
    Rat b = beta(inst.net, A);
    out << "A:";
    for (const auto& t : A) out << " " << t;
    out << " | lambda " << l.value << " | beta " << b.str() << " | X:";
    for (const auto& n : l.cut.node_set) out << " " << n;
    out << "\n";
  };
  for (const auto& t : inst.net.terminals()) print_entry({t});
  for (const auto& m : inst.clutter.members)
    if (m.size() > 1) print_entry(m);
  return 0;
}

int cmd_duality(const std::string& file, const CommonOpts& opts, std::ostream& out,
                std::ostream& err) {
  Instance inst = load_instance(file, opts.terminal_limit);
  Instance simple = inst;
  if (!atoms(inst.clutter, inst.net.terminals()).simple) {
    CompressedInstance comp = compress_atoms(inst.net, inst.clutter);
    simple.net = comp.net;
    simple.clutter = comp.clutter;
    out << "atoms compressed\n";
  }
  DualReport rep = verify_maxmin(simple.net, simple.clutter, opts.limits());
  out << "theta " << rep.primal_theta.str() << "\n";
  out << "expansions " << rep.expansions_checked << "\n";
  out << "min-dual " << rep.min_dual.str() << "\n";
  for (const auto& [t, block] : rep.best.blocks) {
    out << "expansion " << t << " :";
    for (const auto& n : block) out << " " << n;
    out << "\n";
  }
  if (rep.equality && rep.weak_duality_ok) {
    out << "equality at " << rep.primal_theta.str() << "\n";
    return 0;
  }
  out << "INEQUALITY: theta " << rep.primal_theta.str() << " min-dual "
      << rep.min_dual.str() << "\n";
  write_falsifier(opts.falsifier_dir, "duality", simple,
                  "max-min equality failed: theta " + rep.primal_theta.str() +
                      " min-dual " + rep.min_dual.str(),
                  err);
  return 1;
}

int cmd_gen(std::uint64_t seed, int nodes, int terminals, bool non_eulerian,
            std::ostream& out) {
  GenParams params;
  params.nodes = nodes;
  params.terminals = terminals;
  params.eulerian = !non_eulerian;
  Instance inst = random_k_network(seed, params);
  out << "# gen seed=" << seed << " nodes=" << nodes << " terminals=" << terminals
      << (non_eulerian ? " non-eulerian" : "") << "\n";
  out << print_network(inst, false);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact fractional path packing toolkit"};
  app.require_subcommand(1);

  CommonOpts opts;
  if (const char* env = std::getenv("PATHPACK_SEARCH_BUDGET")) {
    try {
      opts.budget = std::stoll(env);
    } catch (...) {
    }
  }
  app.add_option("--path-cap", opts.path_cap, "T-path enumeration cap");
  app.add_option("--expansion-cap", opts.expansion_cap, "expansion enumeration cap");
  app.add_option("--budget", opts.budget, "branch-and-bound node budget");
  app.add_option("--terminal-limit", opts.terminal_limit,
                 "anticlique enumeration terminal limit");
  app.add_option("--falsifier-dir", opts.falsifier_dir,
                 "directory for theorem-violating instances");

  std::string file, problem = "s", mode = "lp";
  bool simple_only = false, min_size = false, non_eulerian = false;
  std::uint64_t seed = 1;
  int nodes = 6, terminals = 4;

  CLI::App* validate = app.add_subcommand("validate", "check the K-network conditions");
  validate->add_option("file", file)->required();

  CLI::App* solve = app.add_subcommand("solve", "solve the S- or W-problem");
  solve->add_option("--problem", problem, "s or w")
      ->check(CLI::IsMember({"s", "w"}));
  solve->add_option("--mode", mode, "lp | half | integer | frac:D");
  solve->add_flag("--simple-only", simple_only, "restrict to simple paths");
  solve->add_flag("--min-size", min_size, "lexicographic least-size solve");
  solve->add_option("file", file)->required();

  CLI::App* duality = app.add_subcommand("duality", "verify the max-min theorem");
  duality->add_option("file", file)->required();

  CLI::App* cuts = app.add_subcommand("cuts", "lambda and beta tables");
  cuts->add_option("file", file)->required();

  CLI::App* gen = app.add_subcommand("gen", "generate a random K-network");
  gen->add_option("--seed", seed)->required();
  gen->add_option("--nodes", nodes);
  gen->add_option("--terminals", terminals);
  gen->add_flag("--non-eulerian", non_eulerian);

  std::vector<const char*> argv;
  argv.push_back("pathpack");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse((int)argv.size(), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(file, opts, out);
    if (solve->parsed())
      return cmd_solve(file, problem, mode, simple_only, min_size, opts, out, err);
    if (duality->parsed()) return cmd_duality(file, opts, out, err);
    if (cuts->parsed()) return cmd_cuts(file, opts, out);
    if (gen->parsed()) return cmd_gen(seed, nodes, terminals, non_eulerian, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace pathpack

// tdsolve: exact treedepth of a PACE .gr graph, written as a .tree file.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "treedepth/pace_io.hpp"
#include "treedepth/solver.hpp"
#include "treedepth/upper_bound.hpp"

namespace {

void print_stats(const treedepth::SolveResult& r) {
  const auto& s = r.stats;
  std::cerr << "treedepth=" << r.treedepth << "\n"
            << "lower_bound=" << r.lower_bound << "\n"
            << "optimal=" << (r.optimal ? 1 : 0) << "\n"
            << "reduced_vertices=" << r.reduced_vertices << "\n"
            << "nodes=" << s.nodes << "\n"
            << "separators=" << s.separators_enumerated << "\n"
            << "memo_hits=" << s.memo_hits << "\n"
            << "subset_hits=" << s.subset_hits << "\n"
            << "iso_hits=" << s.iso_hits << "\n"
            << "bound_prunes=" << s.bound_prunes << "\n"
            << "special_k1=" << s.special_k1 << "\n"
            << "special_k2=" << s.special_k2 << "\n"
            << "inherited_families=" << s.inherited_families << "\n"
            << "budget_aborts=" << s.budget_aborts << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact treedepth solver"};
  std::string input;
  bool verify_output = true;
  bool ub_only = false;
  bool no_preprocess = false;
  bool stats = false;
  std::size_t budget = 2'000'000;
  unsigned long long seed = 0;
  app.add_option("input", input, "graph in .gr format (stdin when omitted)");
  app.add_flag("--verify,!--no-verify", verify_output, "re-check the certificate before emitting (default on)");
  app.add_flag("--ub-only", ub_only, "print the heuristic upper bound only");
  app.add_flag("--no-preprocess", no_preprocess, "disable reduction rules");
  app.add_option("--budget", budget, "separator family budget")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "reserved; the solver is deterministic");
  app.add_flag("--stats", stats, "key=value statistics on stderr");
  CLI11_PARSE(app, argc, argv);

  treedepth::PaceInstance inst;
  try {
    if (input.empty()) {
      inst = treedepth::parse_gr(std::cin);
    } else {
      inst = treedepth::read_gr_file(input);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  treedepth::Graph g = inst.graph();
  if (ub_only) {
    auto ub = treedepth::compute_upper_bound(g);
    std::cout << treedepth::emit_tree(ub.decomposition);
    return 0;
  }

  treedepth::SolverOptions options;
  options.verify = verify_output;
  options.preprocess = !no_preprocess;
  options.separator_budget = budget;
  treedepth::SolveResult result;
  try {
    result = treedepth::solve(g, options);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cout << treedepth::emit_tree(result.decomposition);
  if (stats) print_stats(result);
  if (!result.optimal) {
    std::cerr << "warning: budget exhausted, depth " << result.treedepth << " is an upper bound (lower bound "
              << result.lower_bound << ")\n";
    return 2;
  }
  return 0;
}

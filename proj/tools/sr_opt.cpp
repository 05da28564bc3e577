#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "srmatch/errors.hpp"
#include "srmatch/gen.hpp"
#include "srmatch/io.hpp"
#include "srmatch/irving.hpp"
#include "srmatch/mco.hpp"
#include "srmatch/optimize.hpp"
#include "srmatch/oracle.hpp"
#include "srmatch/poset.hpp"
#include "srmatch/types.hpp"

namespace {

using namespace srmatch;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("ParseError", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ValidationError("ParseError", "cannot write " + path);
  out << text;
}

/* peek at the header word to decide between an sr instance and a poset file */
std::string header_word(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (ls >> tok && tok[0] != '#') return tok;
  }
  return "";
}

MirrorPoset load_poset(const std::string& path) {
  std::string text = read_file(path);
  std::string word = header_word(text);
  if (word == "mp") return parse_mirror_poset(text);
  if (word == "sr") {
    Instance inst = parse_instance(text);
    RotationUniverse u = discover_rotations(inst);
    return reduced_poset(u).poset;
  }
  throw ValidationError("ParseError", "expected an 'sr' or 'mp' header in " + path);
}

void print_matching_text(const Matching& m) {
  for (auto [a, b] : m.pairs()) std::cout << a << ' ' << b << "\n";
}

int report_unsolvable(const std::string& report) {
  if (report == "json")
    std::cout << "{\"status\":\"unsolvable\"}\n";
  else
    std::cout << "unsolvable\n";
  return 1;
}

CostFunction load_costs(const Instance& inst, const std::string& cost_path) {
  if (cost_path.empty()) return egalitarian_costs(inst);
  CostFunction c = parse_costs(read_file(cost_path));
  validate_costs(inst, c);
  return c;
}

void print_orientation_text(int k, const Orientation& o) {
  std::cout << "k " << k << "\n";
  std::cout << "base";
  for (const std::string& name : element_names(o.neg)) std::cout << ' ' << name;
  std::cout << "\n";
  for (auto [a, b] : crossing_edges(o))
    std::cout << "crossing " << element_name(a) << ' ' << element_name(b) << "\n";
}

void print_orientation_json(int k, const Orientation& o) {
  nlohmann::json j;
  j["k"] = k;
  j["base"] = element_names(o.neg);
  j["crossings"] = nlohmann::json::array();
  for (auto [a, b] : crossing_edges(o)) j["crossings"].push_back({element_name(a), element_name(b)});
  std::cout << j.dump() << "\n";
}

struct Options {
  std::string path;
  std::string report = "text";
  std::string cost_path;
  std::string dot_path;
  std::string encoding = "hardsoft";
  std::string graph;
  int kmax = 16;
  int n = 0;
  uint64_t seed = 0;
  int sweep = 0;
  int count = 0;
  bool solvable = false;
  bool emit_2sat = false;
  int exit_code = 0;
};

void run_solve(Options& opt) {
  Instance inst = parse_instance(read_file(opt.path));
  std::optional<Matching> m = solve(inst);
  if (!m) {
    opt.exit_code = report_unsolvable(opt.report);
    return;
  }
  if (opt.report == "json")
    std::cout << matching_json(*m) << "\n";
  else
    print_matching_text(*m);
}

void run_rotations(Options& opt) {
  Instance inst = parse_instance(read_file(opt.path));
  RotationUniverse u = discover_rotations(inst);
  if (!opt.dot_path.empty()) {
    /* dot to stdout replaces the report; dot to a file accompanies it */
    write_output(opt.dot_path, poset_dot(reduced_poset(u).poset));
    if (opt.dot_path == "-") return;
  }
  std::cout << rotations_json(u) << "\n";
}

void run_optimal(Options& opt) {
  Instance inst = parse_instance(read_file(opt.path));
  CostFunction c = load_costs(inst, opt.cost_path);
  std::optional<OptimalResult> res = optimal_stable_matching(inst, c, opt.kmax);
  if (!res) {
    opt.exit_code = report_unsolvable(opt.report);
    return;
  }
  if (opt.report == "json") {
    std::cout << optimal_json(*res) << "\n";
  } else {
    std::cout << "cost " << res->cost << "\n";
    std::cout << "k " << res->k << "\n";
    std::cout << "intervals " << res->maximal_count << "\n";
    print_matching_text(res->matching);
  }
}

McoEncoding encoding_of(const std::string& name) {
  return name == "replicated" ? McoEncoding::Replicated : McoEncoding::HardSoft;
}

void run_mco_sweep(Options& opt) {
  if (opt.n <= 0) throw ValidationError("ParseError", "--sweep needs --n <agents>");
  std::map<int, int> histogram;
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < opt.sweep; ++i) {
    uint64_t seed = opt.seed + (uint64_t)i;
    Instance inst = gen_solvable_sr(seed, opt.n);
    RotationUniverse u = discover_rotations(inst);
    ReducedPoset rp = reduced_poset(u);
    McoResult res = min_crossing_orientation(rp.poset, opt.kmax, encoding_of(opt.encoding));
    ++histogram[res.crossings];
    if (opt.report == "json")
      rows.push_back({{"seed", seed}, {"pairs", rp.poset.n_pairs}, {"k", res.crossings}});
    else
      std::cout << "seed " << seed << " pairs " << rp.poset.n_pairs << " k " << res.crossings << "\n";
  }
  if (opt.report == "json") {
    nlohmann::json j;
    j["sweep"] = rows;
    for (auto [k, count] : histogram) j["histogram"][std::to_string(k)] = count;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "histogram";
    for (auto [k, count] : histogram) std::cout << ' ' << k << ':' << count;
    std::cout << "\n";
  }
}

void run_mco(Options& opt) {
  if (opt.sweep > 0) {
    run_mco_sweep(opt);
    return;
  }
  MirrorPoset p = load_poset(opt.path);
  if (opt.emit_2sat) {
    TwoSatInstance ts = encoding_of(opt.encoding) == McoEncoding::Replicated
                            ? to_almost_2sat_replicated(p, opt.kmax)
                            : to_almost_2sat(p);
    ts.budget = opt.kmax;
    std::cout << twosat_dimacs(ts);
    return;
  }
  McoResult res = min_crossing_orientation(p, opt.kmax, encoding_of(opt.encoding));
  if (opt.report == "json")
    print_orientation_json(res.crossings, res.orientation);
  else
    print_orientation_text(res.crossings, res.orientation);
}

void run_oracle_solve(Options& opt) {
  Instance inst = parse_instance(read_file(opt.path));
  std::vector<Matching> all = all_stable_matchings_bruteforce(inst);
  if (all.empty()) {
    opt.exit_code = report_unsolvable(opt.report);
    return;
  }
  if (opt.report == "json") {
    nlohmann::json j = nlohmann::json::parse(matching_json(all.front()));
    j["count"] = all.size();
    std::cout << j.dump() << "\n";
  } else {
    print_matching_text(all.front());
  }
}

void run_oracle_optimal(Options& opt) {
  Instance inst = parse_instance(read_file(opt.path));
  CostFunction c = load_costs(inst, opt.cost_path);
  auto res = optimal_bruteforce(inst, c);
  if (!res) {
    opt.exit_code = report_unsolvable(opt.report);
    return;
  }
  if (opt.report == "json") {
    nlohmann::json j;
    j["status"] = "ok";
    j["pairs"] = res->first.pairs();
    j["cost"] = res->second;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "cost " << res->second << "\n";
    print_matching_text(res->first);
  }
}

void run_oracle_mco(Options& opt) {
  MirrorPoset p = load_poset(opt.path);
  auto [k, o] = mco_bruteforce(p);
  if (opt.report == "json")
    print_orientation_json(k, o);
  else
    print_orientation_text(k, o);
}

void run_gen_sr(Options& opt) {
  Instance inst = opt.solvable ? gen_solvable_sr(opt.seed, opt.n) : gen_random_sr(opt.seed, opt.n);
  std::cout << format_instance(inst);
}

void run_gen_costs(Options& opt) {
  Instance inst = parse_instance(read_file(opt.path));
  std::cout << format_costs(gen_random_costs(opt.seed, inst));
}

void run_gen_sm(Options& opt) { std::cout << format_sm(gen_random_sm(opt.seed, opt.n)); }

void run_gen_gadget(Options& opt) {
  std::cout << format_mirror_poset(mvc_gadget_poset(named_graph(opt.graph)));
}

void add_report(CLI::App* cmd, Options& opt) {
  cmd->add_option("--report", opt.report, "output format")
      ->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"optimal stable matchings for the stable roommates problem"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* solve_cmd = app.add_subcommand("solve", "find one stable matching or report unsolvable");
  solve_cmd->add_option("instance", opt.path, "sr instance file")->required();
  add_report(solve_cmd, opt);
  solve_cmd->callback([&] { run_solve(opt); });

  CLI::App* rot_cmd = app.add_subcommand("rotations", "rotation structure of an instance as json");
  rot_cmd->add_option("instance", opt.path, "sr instance file")->required();
  rot_cmd->add_option("--dot", opt.dot_path, "write the reduced poset in dot format ('-' = stdout)");
  rot_cmd->callback([&] { run_rotations(opt); });

  CLI::App* opt_cmd = app.add_subcommand("optimal", "minimum-cost stable matching");
  opt_cmd->add_option("instance", opt.path, "sr instance file")->required();
  opt_cmd->add_option("--cost", opt.cost_path, "cost file (default: egalitarian)");
  opt_cmd->add_option("--kmax", opt.kmax, "largest crossing budget to try");
  std::string optimal_report = "json";  // the other subcommands default to text
  opt_cmd->add_option("--report", optimal_report, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  opt_cmd->callback([&] {
    opt.report = optimal_report;
    run_optimal(opt);
  });

  CLI::App* mco_cmd = app.add_subcommand("mco", "minimum-crossing orientation of a mirror poset");
  mco_cmd->add_option("input", opt.path, "mirror poset file or sr instance");
  mco_cmd->add_option("--kmax", opt.kmax, "largest crossing budget to try");
  mco_cmd->add_option("--encoding", opt.encoding, "2-sat encoding")
      ->check(CLI::IsMember({"hardsoft", "replicated"}));
  mco_cmd->add_flag("--emit-2sat", opt.emit_2sat, "print the 2-sat encoding instead of solving");
  mco_cmd->add_option("--sweep", opt.sweep, "generate this many solvable instances and report k");
  mco_cmd->add_option("--n", opt.n, "agent count for --sweep");
  mco_cmd->add_option("--seed", opt.seed, "first seed for --sweep");
  add_report(mco_cmd, opt);
  mco_cmd->callback([&] {
    if (opt.sweep <= 0 && opt.path.empty())
      throw CLI::RequiredError("input");
    run_mco(opt);
  });

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force reference implementations");
  oracle_cmd->require_subcommand(1);
  CLI::App* os = oracle_cmd->add_subcommand("solve", "enumerate stable matchings, print the first");
  os->add_option("instance", opt.path)->required();
  add_report(os, opt);
  os->callback([&] { run_oracle_solve(opt); });
  CLI::App* oo = oracle_cmd->add_subcommand("optimal", "exhaustive minimum-cost stable matching");
  oo->add_option("instance", opt.path)->required();
  oo->add_option("--cost", opt.cost_path, "cost file (default: egalitarian)");
  add_report(oo, opt);
  oo->callback([&] { run_oracle_optimal(opt); });
  CLI::App* om = oracle_cmd->add_subcommand("mco", "exhaustive minimum-crossing orientation");
  om->add_option("input", opt.path)->required();
  add_report(om, opt);
  om->callback([&] { run_oracle_mco(opt); });

  CLI::App* gen_cmd = app.add_subcommand("gen", "seeded generators");
  gen_cmd->require_subcommand(1);
  CLI::App* gsr = gen_cmd->add_subcommand("sr", "random roommates instance");
  gsr->add_option("--n", opt.n, "agent count")->required();
  gsr->add_option("--seed", opt.seed, "seed");
  gsr->add_flag("--solvable", opt.solvable, "retry seeds until solvable");
  gsr->callback([&] { run_gen_sr(opt); });
  CLI::App* gc = gen_cmd->add_subcommand("costs", "random preference-consistent costs");
  gc->add_option("instance", opt.path)->required();
  gc->add_option("--seed", opt.seed, "seed");
  gc->callback([&] { run_gen_costs(opt); });
  CLI::App* gsm = gen_cmd->add_subcommand("sm", "random marriage instance");
  gsm->add_option("--n", opt.n, "couple count")->required();
  gsm->add_option("--seed", opt.seed, "seed");
  gsm->callback([&] { run_gen_sm(opt); });
  CLI::App* gg = gen_cmd->add_subcommand("gadget", "vertex-cover mirror poset of a cubic graph");
  gg->add_option("--graph", opt.graph, "k4, k33, cube, or petersen")->required();
  gg->callback([&] { run_gen_gadget(opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const srmatch::ValidationError& e) {
    if (e.kind() == "Unsolvable") {
      std::cerr << e.what() << "\n";
      return 1;
    }
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const srmatch::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return opt.exit_code;
}

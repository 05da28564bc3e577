#include <pybind11/pybind11.h>

#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"
#include "srmatch/errors.hpp"
#include "srmatch/gen.hpp"
#include "srmatch/io.hpp"
#include "srmatch/irving.hpp"
#include "srmatch/mco.hpp"
#include "srmatch/optimize.hpp"
#include "srmatch/types.hpp"

namespace py = pybind11;
using namespace srmatch;

namespace {

/* first word of the first line that is not blank or a comment */
std::string header_word(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    size_t at = line.find_first_not_of(" \t\r");
    if (at == std::string::npos || line[at] == '#') continue;
    std::istringstream row(line);
    std::string word;
    row >> word;
    return word;
  }
  return "";
}

MirrorPoset poset_of(const std::string& text) {
  std::string word = header_word(text);
  if (word == "mp") return parse_mirror_poset(text);
  if (word == "sr") {
    Instance inst = parse_instance(text);
    RotationUniverse u = discover_rotations(inst);
    return reduced_poset(u).poset;
  }
  throw ValidationError("ParseError", "expected an 'sr' or 'mp' header");
}

CostFunction costs_of(const Instance& inst, const std::string& cost_text) {
  if (cost_text.empty()) return egalitarian_costs(inst);
  CostFunction c = parse_costs(cost_text);
  validate_costs(inst, c);
  return c;
}

std::string solve_json(const std::string& instance_text) {
  Instance inst = parse_instance(instance_text);
  std::optional<Matching> m = solve(inst);
  if (!m) return R"({"status":"unsolvable"})";
  return matching_json(*m);
}

std::string rotations_json_of(const std::string& instance_text) {
  Instance inst = parse_instance(instance_text);
  return rotations_json(discover_rotations(inst));
}

std::string optimal_json_of(const std::string& instance_text, const std::string& cost_text, int kmax) {
  Instance inst = parse_instance(instance_text);
  CostFunction c = costs_of(inst, cost_text);
  std::optional<OptimalResult> res = optimal_stable_matching(inst, c, kmax);
  if (!res) return R"({"status":"unsolvable"})";
  return optimal_json(*res);
}

std::string mco_json_of(const std::string& text, int kmax, const std::string& encoding) {
  MirrorPoset p = poset_of(text);
  McoEncoding enc = encoding == "replicated" ? McoEncoding::Replicated : McoEncoding::HardSoft;
  McoResult res = min_crossing_orientation(p, kmax, enc);
  nlohmann::json j;
  j["k"] = res.crossings;
  j["base"] = element_names(res.orientation.neg);
  j["crossings"] = nlohmann::json::array();
  for (auto [a, b] : crossing_edges(res.orientation))
    j["crossings"].push_back({element_name(a), element_name(b)});
  return j.dump();
}

std::string gen_sr_text(uint64_t seed, int n, bool solvable) {
  Instance inst = solvable ? gen_solvable_sr(seed, n) : gen_random_sr(seed, n);
  return format_instance(inst);
}

std::string gen_costs_text(uint64_t seed, const std::string& instance_text) {
  Instance inst = parse_instance(instance_text);
  return format_costs(gen_random_costs(seed, inst));
}

}  // namespace

PYBIND11_MODULE(_srmatch, m) {
  m.doc() = "optimal stable roommates matchings; strings in, JSON strings out";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

  m.def("solve_json", &solve_json, py::arg("instance"),
        "stable matching of an 'sr' instance, or status unsolvable");
  m.def("rotations_json", &rotations_json_of, py::arg("instance"),
        "rotation universe of an 'sr' instance: rotations, order, fixed pairs");
  m.def("optimal_json", &optimal_json_of, py::arg("instance"), py::arg("costs") = std::string(),
        py::arg("kmax") = 16,
        "minimum-cost stable matching; empty costs means egalitarian");
  m.def("mco_json", &mco_json_of, py::arg("text"), py::arg("kmax") = 16,
        py::arg("encoding") = std::string("hardsoft"),
        "minimum-crossing orientation of an 'mp' poset or the reduced poset of an 'sr' instance");
  m.def("gen_sr", &gen_sr_text, py::arg("seed"), py::arg("n"), py::arg("solvable") = false,
        "random roommates instance in 'sr' text form");
  m.def("gen_costs", &gen_costs_text, py::arg("seed"), py::arg("instance"),
        "random preference-increasing cost table in 'cost' text form");
}

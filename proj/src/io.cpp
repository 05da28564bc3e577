#include "srmatch/io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "srmatch/errors.hpp"

namespace srmatch {

namespace {

struct Line {
  int number = 0;  // 1-based position in the original text
  std::string text;
};

std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    size_t start = raw.find_first_not_of(" \t\r");
    if (start == std::string::npos || raw[start] == '#') continue;
    size_t end = raw.find_last_not_of(" \t\r");
    out.push_back({number, raw.substr(start, end - start + 1)});
  }
  return out;
}

[[noreturn]] void parse_fail(const Line& line, const std::string& why) {
  throw ValidationError("ParseError", "line " + std::to_string(line.number) + ": " + why);
}

bool to_int(const std::string& tok, long long& out) {
  if (tok.empty()) return false;
  size_t pos = 0;
  try {
    out = std::stoll(tok, &pos);
  } catch (...) {
    return false;
  }
  return pos == tok.size();
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

/* header "<word> <count>"; returns the count */
int parse_header(const std::vector<Line>& lines, const std::string& word) {
  if (lines.empty())
    throw ValidationError("ParseError", "line 1: expected '" + word + " <count>' header");
  auto toks = tokens(lines[0].text);
  long long n = 0;
  if (toks.size() != 2 || toks[0] != word || !to_int(toks[1], n) || n <= 0)
    parse_fail(lines[0], "expected '" + word + " <count>' header");
  return (int)n;
}

/* "<name>: <v1> <v2> ..." -> (name, values); the colon may touch the name */
std::pair<std::string, std::vector<long long>> split_list_line(const Line& line) {
  size_t colon = line.text.find(':');
  if (colon == std::string::npos) parse_fail(line, "expected '<id>: <list>'");
  auto head = tokens(line.text.substr(0, colon));
  if (head.size() != 1) parse_fail(line, "expected a single id before ':'");
  std::vector<long long> values;
  for (const std::string& t : tokens(line.text.substr(colon + 1))) {
    long long v = 0;
    if (!to_int(t, v)) parse_fail(line, "'" + t + "' is not an integer");
    values.push_back(v);
  }
  return {head[0], values};
}

void check_list(const Line& line, int owner, int n, const std::vector<long long>& values) {
  std::vector<char> seen(n + 1, 0);
  for (long long v : values) {
    if (v == owner)
      throw ValidationError("SelfReference", "line " + std::to_string(line.number) + ": agent " +
                                                 std::to_string(owner) + " lists itself");
    if (v < 1 || v > n) parse_fail(line, "agent id " + std::to_string(v) + " out of range");
    if (seen[v])
      throw ValidationError("DuplicateEntry", "line " + std::to_string(line.number) + ": agent " +
                                                  std::to_string(v) + " listed twice");
    seen[v] = 1;
  }
  if ((int)values.size() != n - 1)
    for (int v = 1; v <= n; ++v)
      if (v != owner && !seen[v])
        throw ValidationError("MissingAgent", "line " + std::to_string(line.number) + ": list omits agent " +
                                                  std::to_string(v));
}

}  // namespace

Instance parse_instance(const std::string& text) {
  auto lines = content_lines(text);
  int n = parse_header(lines, "sr");
  if (n % 2 != 0)
    throw ValidationError("OddAgentCount",
                          "line " + std::to_string(lines[0].number) + ": agent count " +
                              std::to_string(n) + " is odd");
  std::vector<std::vector<int>> pref(n);
  std::vector<char> defined(n + 1, 0);
  for (size_t i = 1; i < lines.size(); ++i) {
    auto [name, values] = split_list_line(lines[i]);
    long long a = 0;
    if (!to_int(name, a) || a < 1 || a > n) parse_fail(lines[i], "agent id '" + name + "' out of range");
    if (defined[a])
      throw ValidationError("DuplicateEntry", "line " + std::to_string(lines[i].number) + ": agent " +
                                                  std::to_string(a) + " defined twice");
    defined[a] = 1;
    check_list(lines[i], (int)a, n, values);
    pref[a - 1].assign(values.begin(), values.end());
  }
  for (int a = 1; a <= n; ++a)
    if (!defined[a])
      throw ValidationError("MissingAgent", "agent " + std::to_string(a) + " has no preference line");
  return Instance::from_prefs(n, std::move(pref));
}

std::string format_instance(const Instance& inst) {
  std::ostringstream out;
  out << "sr " << inst.n << "\n";
  for (int a = 1; a <= inst.n; ++a) {
    out << a << ":";
    for (int b : inst.pref[a - 1]) out << ' ' << b;
    out << "\n";
  }
  return out.str();
}

CostFunction parse_costs(const std::string& text) {
  auto lines = content_lines(text);
  int n = parse_header(lines, "cost");
  CostFunction c;
  c.n = n;
  c.cost.assign(n, std::vector<long long>(n, 0));
  std::vector<std::vector<char>> seen(n, std::vector<char>(n, 0));
  for (size_t i = 1; i < lines.size(); ++i) {
    auto toks = tokens(lines[i].text);
    long long a = 0, b = 0, v = 0;
    if (toks.size() != 3 || !to_int(toks[0], a) || !to_int(toks[1], b) || !to_int(toks[2], v))
      parse_fail(lines[i], "expected '<a> <b> <cost>'");
    if (a < 1 || a > n || b < 1 || b > n || a == b) parse_fail(lines[i], "bad agent pair");
    if (seen[a - 1][b - 1])
      throw ValidationError("DuplicateEntry", "line " + std::to_string(lines[i].number) + ": pair " +
                                                  std::to_string(a) + " " + std::to_string(b) +
                                                  " given twice");
    seen[a - 1][b - 1] = 1;
    c.cost[a - 1][b - 1] = v;
  }
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      if (a != b && !seen[a - 1][b - 1])
        throw ValidationError("MissingAgent", "pair " + std::to_string(a) + " " + std::to_string(b) +
                                                  " has no cost line");
  return c;
}

std::string format_costs(const CostFunction& c) {
  std::ostringstream out;
  out << "cost " << c.n << "\n";
  for (int a = 1; a <= c.n; ++a)
    for (int b = 1; b <= c.n; ++b)
      if (a != b) out << a << ' ' << b << ' ' << c.cost[a - 1][b - 1] << "\n";
  return out.str();
}

SMInstance parse_sm(const std::string& text) {
  auto lines = content_lines(text);
  int n = parse_header(lines, "sm");
  SMInstance sm;
  sm.n = n;
  sm.men.assign(n, {});
  sm.women.assign(n, {});
  std::vector<char> seen_m(n + 1, 0), seen_w(n + 1, 0);
  for (size_t i = 1; i < lines.size(); ++i) {
    auto [name, values] = split_list_line(lines[i]);
    if (name.size() < 2 || (name[0] != 'm' && name[0] != 'w'))
      parse_fail(lines[i], "expected 'm<i>:' or 'w<j>:'");
    long long id = 0;
    if (!to_int(name.substr(1), id) || id < 1 || id > n)
      parse_fail(lines[i], "id '" + name + "' out of range");
    std::vector<char>& seen = name[0] == 'm' ? seen_m : seen_w;
    if (seen[id])
      throw ValidationError("DuplicateEntry",
                            "line " + std::to_string(lines[i].number) + ": " + name + " defined twice");
    seen[id] = 1;
    /* opposite-side lists rank every id 1..n, so owner 0 disables the self check */
    check_list(lines[i], 0, n, values);
    if ((int)values.size() != n) parse_fail(lines[i], "list must rank all " + std::to_string(n) + " ids");
    auto& dst = (name[0] == 'm' ? sm.men : sm.women)[id - 1];
    dst.assign(values.begin(), values.end());
  }
  for (int i = 1; i <= n; ++i) {
    if (!seen_m[i]) throw ValidationError("MissingAgent", "m" + std::to_string(i) + " has no line");
    if (!seen_w[i]) throw ValidationError("MissingAgent", "w" + std::to_string(i) + " has no line");
  }
  return sm;
}

std::string format_sm(const SMInstance& sm) {
  std::ostringstream out;
  out << "sm " << sm.n << "\n";
  for (int i = 1; i <= sm.n; ++i) {
    out << 'm' << i << ':';
    for (int w : sm.men[i - 1]) out << ' ' << w;
    out << "\n";
  }
  for (int j = 1; j <= sm.n; ++j) {
    out << 'w' << j << ':';
    for (int m : sm.women[j - 1]) out << ' ' << m;
    out << "\n";
  }
  return out.str();
}

namespace {

int parse_element(const Line& line, const std::string& tok, int k) {
  long long v = 0;
  if (!to_int(tok, v) || v == 0 || v > k || v < -k)
    parse_fail(line, "element '" + tok + "' out of range");
  return v > 0 ? 2 * ((int)v - 1) : 2 * ((int)-v - 1) + 1;
}

}  // namespace

MirrorPoset parse_mirror_poset(const std::string& text) {
  auto lines = content_lines(text);
  int k = parse_header(lines, "mp");
  std::vector<std::pair<int, int>> lt;
  for (size_t i = 1; i < lines.size(); ++i) {
    auto toks = tokens(lines[i].text);
    if (toks.size() != 3 || toks[1] != "<") parse_fail(lines[i], "expected '<a> < <b>'");
    int a = parse_element(lines[i], toks[0], k);
    int b = parse_element(lines[i], toks[2], k);
    lt.push_back({a, b});
    lt.push_back({MirrorPoset::dual(b), MirrorPoset::dual(a)});
  }
  return check_mirror(k, lt);
}

std::string element_name(int e) {
  return e % 2 == 0 ? std::to_string(e / 2 + 1) : "-" + std::to_string(e / 2 + 1);
}

std::vector<std::string> element_names(const Bits& s) {
  std::vector<std::string> out;
  for (int e : s.elements()) out.push_back(element_name(e));
  return out;
}

std::string format_mirror_poset(const MirrorPoset& p) {
  std::ostringstream out;
  out << "mp " << p.n_pairs << "\n";
  for (auto [a, b] : hasse(p)) out << element_name(a) << " < " << element_name(b) << "\n";
  return out.str();
}

std::string matching_json(const Matching& m) {
  nlohmann::json j;
  j["status"] = "ok";
  j["pairs"] = m.pairs();
  return j.dump();
}

std::string rotations_json(const RotationUniverse& u) {
  nlohmann::json j;
  j["rotations"] = nlohmann::json::array();
  for (int r = 0; r < (int)u.rotations.size(); ++r) {
    const RotationInfo& info = u.rotations[r];
    nlohmann::json jr;
    jr["id"] = r;
    jr["cycle"] = info.rotation.cycle;
    jr["kind"] = info.kind == RotationKind::Singular ? "singular" : "nonsingular";
    if (info.dual >= 0)
      jr["dual"] = info.dual;
    else
      jr["dual"] = nullptr;
    j["rotations"].push_back(jr);
  }
  j["order"] = nlohmann::json::array();
  int m = (int)u.rotations.size();
  for (int s = 0; s < m; ++s)
    for (int r = 0; r < m; ++r)
      if (u.lt(s, r)) j["order"].push_back({s, r});
  j["fixed_pairs"] = u.fixed_pairs;
  return j.dump();
}

std::string poset_json(const MirrorPoset& p) {
  nlohmann::json j;
  j["n_pairs"] = p.n_pairs;
  std::vector<std::string> names;
  for (int e = 0; e < 2 * p.n_pairs; ++e) names.push_back(element_name(e));
  j["elements"] = names;
  j["cover"] = nlohmann::json::array();
  for (auto [a, b] : hasse(p)) j["cover"].push_back({element_name(a), element_name(b)});
  return j.dump();
}

std::string orientation_json(const Orientation& o) {
  nlohmann::json j;
  j["base"] = element_names(o.neg);
  auto cross = crossing_edges(o);
  j["crossings"] = nlohmann::json::array();
  for (auto [a, b] : cross) j["crossings"].push_back({element_name(a), element_name(b)});
  j["crossing_count"] = cross.size();
  return j.dump();
}

std::string optimal_json(const OptimalResult& r) {
  nlohmann::json j;
  j["status"] = "ok";
  j["pairs"] = r.matching.pairs();
  j["cost"] = r.cost;
  j["k"] = r.k;
  j["maximal_count"] = r.maximal_count;
  j["per_interval"] = nlohmann::json::array();
  for (const IntervalReport& ir : r.per_interval)
    j["per_interval"].push_back({{"maximal", element_names(ir.maximal)}, {"cost", ir.cost}});
  return j.dump();
}

namespace {

std::string dot_id(int e) { return "e" + std::to_string(e); }

}  // namespace

std::string poset_dot(const MirrorPoset& p) {
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n";
  for (int e = 0; e < 2 * p.n_pairs; ++e)
    out << "  " << dot_id(e) << " [label=\"" << element_name(e) << "\"];\n";
  for (auto [a, b] : hasse(p)) out << "  " << dot_id(a) << " -> " << dot_id(b) << ";\n";
  out << "}\n";
  return out.str();
}

std::string orientation_dot(const Orientation& o) {
  std::ostringstream out;
  out << "digraph orientation {\n  rankdir=BT;\n";
  for (int e = 0; e < 2 * o.base.n_pairs; ++e) {
    out << "  " << dot_id(e) << " [label=\"" << element_name(e) << "\"";
    if (o.neg.test(e)) out << ", style=filled, fillcolor=lightgray";
    out << "];\n";
  }
  std::set<std::pair<int, int>> cross;
  for (auto e : crossing_edges(o)) cross.insert(e);
  for (auto [a, b] : hasse(o.base)) {
    out << "  " << dot_id(a) << " -> " << dot_id(b);
    if (cross.count({a, b})) out << " [color=red, penwidth=2]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string semilattice_dot(const Orientation& o, int cap_pairs) {
  std::vector<Bits> verts = complete_closed_subsets(o.base, cap_pairs);
  std::map<Bits, int> index;
  for (int i = 0; i < (int)verts.size(); ++i) index[verts[i]] = i;
  std::ostringstream out;
  out << "digraph semilattice {\n  rankdir=BT;\n";
  for (int i = 0; i < (int)verts.size(); ++i) {
    out << "  s" << i << " [label=\"{";
    auto names = element_names(verts[i]);
    for (size_t t = 0; t < names.size(); ++t) out << (t ? "," : "") << names[t];
    out << "}\"";
    if (verts[i] == o.neg) out << ", style=filled, fillcolor=lightgray";
    out << "];\n";
  }
  MedianGraph g = median_graph(o.base, cap_pairs);
  for (auto [a, b] : g.edges) {
    int lo = semilattice_leq(o, g.vertices[a], g.vertices[b]) ? a : b;
    int hi = lo == a ? b : a;
    out << "  s" << index[g.vertices[lo]] << " -> s" << index[g.vertices[hi]] << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string twosat_dimacs(const TwoSatInstance& inst) {
  std::ostringstream out;
  out << "c vars " << inst.n_vars << " hard " << inst.hard.size() << " soft " << inst.soft.size()
      << " budget " << inst.budget << "\n";
  out << "p cnf " << inst.n_vars << ' ' << inst.hard.size() + inst.soft.size() << "\n";
  for (const Clause& c : inst.hard) out << "h " << c.a << ' ' << c.b << " 0\n";
  for (const Clause& c : inst.soft) out << "s " << c.a << ' ' << c.b << " 0\n";
  return out.str();
}

}  // namespace srmatch

#pragma once

#include <string>
#include <vector>

#include "srmatch/irving.hpp"
#include "srmatch/mco.hpp"
#include "srmatch/optimize.hpp"
#include "srmatch/poset.hpp"
#include "srmatch/twosat.hpp"
#include "srmatch/types.hpp"

namespace srmatch {

/* text formats; '#' begins a comment line and blank lines are skipped;
   parse errors name the offending 1-based line */

Instance parse_instance(const std::string& text);   // "sr <N>" then "<a>: <p1> <p2> ..."
std::string format_instance(const Instance& inst);

CostFunction parse_costs(const std::string& text);  // "cost <N>" then "<a> <b> <value>"
std::string format_costs(const CostFunction& c);

SMInstance parse_sm(const std::string& text);       // "sm <n>" then "m<i>: ..." / "w<j>: ..."
std::string format_sm(const SMInstance& sm);

/* "mp <k>" then cover lines "<a> < <b>" over elements 1..k and -1..-k,
   where -i names the dual of i; mirrored relations are added automatically */
MirrorPoset parse_mirror_poset(const std::string& text);
std::string format_mirror_poset(const MirrorPoset& p);

std::string element_name(int e);                    // even e -> "i", odd e -> "-i"
std::vector<std::string> element_names(const Bits& s);

std::string matching_json(const Matching& m);
std::string rotations_json(const RotationUniverse& u);
std::string poset_json(const MirrorPoset& p);
std::string orientation_json(const Orientation& o);
std::string optimal_json(const OptimalResult& r);

std::string poset_dot(const MirrorPoset& p);
std::string orientation_dot(const Orientation& o);  // base filled, crossing edges highlighted
std::string semilattice_dot(const Orientation& o, int cap_pairs = 20);

std::string twosat_dimacs(const TwoSatInstance& inst);

}  // namespace srmatch

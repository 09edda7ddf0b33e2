#pragma once

#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "oig/arrangement.hpp"
#include "oig/axioms.hpp"
#include "oig/complexified.hpp"
#include "oig/counting.hpp"
#include "oig/orient.hpp"
#include "oig/point_config.hpp"
#include "oig/rco.hpp"
#include "oig/topes.hpp"
#include "oig/topology.hpp"

namespace oig {

using nlohmann::json;

// {"ground": ["x", ...], "feasible": [[], ["x"], ...]} with subsets listed in
// canonical label order
json to_json(const set_system& sys);
set_system set_system_from_json(const json& j);

// {"system": <set-system>, "covectors": ["+1-", ...]}
json bundle_json(const set_system& sys, const std::vector<std::string>& covs);
json bundle_json(const oriented_system& o);
std::pair<set_system, std::vector<std::string>> bundle_from_json(const json& j);

json report_json(const axiom_report& rep, const set_system& sys);
json report_json(const orientation_report& rep, const flat_lattice& lat);

json lattice_json(const flat_lattice& lat);
std::string lattice_dot(const flat_lattice& lat);

// {"signs": "+1-", "support_xi": ["x", ...]}
json covector_json(const oriented_system& o, int i);

// {"d": 2, "forms": [[[-3,1],[1,1]], ...]} with rationals as [num, den]
json to_json(const rational_arrangement& arr);
rational_arrangement arrangement_from_json(const json& j);

// {"d": 2, "points": [[[0,1],[0,1]], ...], "labels": ["x", ...]}
json to_json(const point_configuration& pts);
point_configuration points_from_json(const json& j);

// {"d": 2, "vectors": [...], "labels": [...]} for vector configurations
std::pair<std::vector<qvec>, std::vector<std::string>> vectors_from_json(const json& j);

std::string poset_dot(const finite_poset& p, const std::string& name = "poset");
std::string tope_graph_dot(const oriented_system& o, const tope_graph_t& g);

json complex_json(const simplicial_complex& c);  // facet list
json homology_json(const homology_report& rep);

json rco_json(const finite_poset& p, const rco_node& node);

}  // namespace oig

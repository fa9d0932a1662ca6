#pragma once

#include <json.hpp>

#include "model.hpp"
#include "proof.hpp"

namespace morpho {

// Insertion-ordered JSON keeps output key order stable across runs.
using json = nlohmann::ordered_json;

// Loaders reject unknown fields so a typo in an input file fails loudly
// instead of silently meaning something else.

json ground_to_json(const Ground& g);
Ground ground_from_json(const json& j);

// Subobject files mirror the ground shape minus redundancy: sets use
// "elements", graphs "vertices"/"edges" (edges as endpoint pairs),
// hypergraphs name the kept hyperedges, complexes list kept faces.
json sub_to_json(const Lattice& lat, const Sub& d);
Sub sub_from_json(const Lattice& lat, const json& j);

json se_to_json(const Lattice& lat, const StructuringElement& b);
StructuringElement se_from_json(const Lattice& lat, const json& j);

// Two model forms: {"kripke": {worlds, relation, valuation}} or
// {"ground", "forget", "se", "valuation"}. Saving always uses the ground
// form. "unchecked": true admits non-covering structuring elements.
Model model_from_json(const json& j);
json model_to_json(const Model& m);

Derivation proof_from_json(const json& j);
json proof_to_json(const Derivation& d);

json law_report_to_json(const Lattice& lat, const LawReport& r);
json comparison_to_json(const Lattice& lat, const MethodComparison& c);

// Graphs and hypergraphs only; hyperedges become subgraph clusters. With a
// baseline, parts of the baseline missing from the result render dashed.
std::string to_dot(const Lattice& lat, const Sub& result, const Sub* baseline = nullptr);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);
std::string dump_json(const json& j);  // 2-space indent, trailing newline

}  // namespace morpho

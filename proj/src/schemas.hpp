#pragma once

#include <map>
#include <optional>
#include <vector>

#include "formula.hpp"

namespace morpho {

// An axiom schema: a formula over metavariables, or a pair of them when the
// schema is a bi-implication. Bi-implications match either direction as well
// as the conjunction of both.
struct Schema {
  std::string id;
  bool iff = false;
  Formula lhs, rhs;  // the schema is lhs -> rhs (plus the converse when iff)
  bool theorem = false;  // registered shape that must be proved, not asserted
};

const std::vector<Schema>& schema_registry();
const Schema* find_schema(const std::string& id);  // null when unknown

// Schema ids validated by an axiom suite for a profile, and the ids a proof
// may cite as axioms under that profile. Profiles: base, s4, b, s5, classical.
std::vector<std::string> profile_schemas(const std::string& profile);
bool axiom_allowed(const std::string& id, const std::string& profile);

using Substitution = std::map<std::string, Formula>;

// Pattern match (metavariables only on the schema side). Returns the unique
// substitution when `f` instantiates the schema. Theorem-kind entries never
// match as axioms. Throws UnknownSchema for unregistered ids.
std::optional<Substitution> match_axiom(const std::string& id, const Formula& f);

Formula substitute(const Formula& pattern, const Substitution& s);

// The directions of a schema as plain implications (one for ->, two for <->).
std::vector<Formula> schema_directions(const Schema& s);

}  // namespace morpho

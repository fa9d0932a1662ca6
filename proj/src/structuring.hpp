#pragma once

#include <map>
#include <string>
#include <vector>

#include "lattice.hpp"

namespace morpho {

// A structuring element: total map from the carrier of the ground object to
// substructures. Builtins remember their name, which is what makes the
// closed-form operators applicable.
struct StructuringElement {
  std::map<std::string, Sub> table;
  std::string builtin;  // empty for user-supplied tables
  bool claims_cover = false;
};

// Names accepted by builtin_se. The relation builtin additionally needs the
// pair table, passed separately.
inline constexpr const char* kBuiltinRelation = "relation";
inline constexpr const char* kBuiltinClosedNeighborhood = "closed-neighborhood";
inline constexpr const char* kBuiltinEdgeNeighborhood = "edge-neighborhood";
inline constexpr const char* kBuiltinHyperedgeStar = "hyperedge-star";
inline constexpr const char* kBuiltinHyperedgeOverlap = "hyperedge-overlap";
inline constexpr const char* kBuiltinStarClosure = "star-closure";

StructuringElement builtin_se(const Lattice& lat, const std::string& name,
                              const std::vector<std::pair<std::string, std::string>>& pairs = {});

StructuringElement se_from_table(const Lattice& lat, std::map<std::string, Sub> table);

// Checks the table is total over carrier(top) and every image lives in `lat`.
void se_validate(const Lattice& lat, const StructuringElement& b);

const Sub& se_apply(const Lattice& lat, const StructuringElement& b, const std::string& x);

StructuringElement se_full(const Lattice& lat);
StructuringElement se_empty(const Lattice& lat);

// sgt: x ↦ the atom at x. Identity for ⋆ on the left always; on the right
// only where atoms carry the whole neighborhood (see README notes).
StructuringElement se_identity(const Lattice& lat);

bool se_leq(const Lattice& lat, const StructuringElement& a, const StructuringElement& b);
StructuringElement se_sup(const Lattice& lat, const std::vector<StructuringElement>& bs);
StructuringElement se_inf(const Lattice& lat, const std::vector<StructuringElement>& bs);

// (a ⋆ b)(x) = ⋁{b(y) | y ∈ U(a(x))}
StructuringElement se_compose(const Lattice& lat, const StructuringElement& a,
                              const StructuringElement& b);

// Powerset transpose: x ∈ b̌(y) ⟺ y ∈ b(x).
StructuringElement se_transpose(const Lattice& lat, const StructuringElement& b);

// Does d embed into the sup of b over its own carrier?
bool covers(const Lattice& lat, const StructuringElement& b, const Sub& d);

// Exact, enumeration-free cover test. Edge-forget lattices are covered only
// when the ground is empty: any vertex-only substructure has empty carrier,
// so the covering sup collapses to bottom.
bool is_covered(const Lattice& lat, const StructuringElement& b);

}  // namespace morpho

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "core.hpp"

namespace morpho {

// Canonical token for an edge: "(u,v)" with u <= v when undirected.
std::string edge_token(const std::string& u, const std::string& v, bool directed);

// Canonical token for a face: "{a,b,c}" with members sorted.
std::string face_token(const IdSet& members);

// A ground object: the fixed top structure whose substructures form the
// lattice. One type covers all four kinds; unused components stay empty.
struct Ground {
  StructureKind kind = StructureKind::Set;
  bool directed = false;

  IdSet vertices;                                            // or set elements
  std::map<std::string, std::pair<std::string, std::string>> edges;  // token -> endpoints
  std::map<std::string, IdSet> hyperedges;                   // name -> members
  std::map<std::string, IdSet> faces;                        // token -> members

  // Throws InvalidGround on malformed input (dangling endpoints, faces not
  // closed downward, missing singleton faces, ids containing reserved
  // characters). When close_faces is set, the face family is completed
  // downward instead of rejected.
  void validate(bool close_faces = false);

  std::uint64_t serial() const;  // content hash used for GroundMismatch checks

  const IdSet& secondary_members(const std::string& token) const;
  std::vector<std::string> secondary_tokens() const;
};

// Ids appear inside edge/face tokens and JSON keys, so a few characters are
// reserved to keep every token unambiguous.
void check_id(const std::string& id);

const char* kind_name(StructureKind k);
const char* mode_name(ForgetMode m);
StructureKind kind_from_name(const std::string& name);  // BadInput on unknown
ForgetMode mode_from_name(const std::string& name);

}  // namespace morpho

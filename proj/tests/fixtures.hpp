#pragma once

#include <memory>

#include "model.hpp"

// The recurring grounds: the 5-element line of integers, the 4- and 6-vertex
// paths, the 4-vertex/3-hyperedge hypergraph, the full triangle complex, and
// the 2-world reflexive Kripke frame.
namespace fx {

using namespace morpho;

inline Ground set_line() {
  Ground g;
  g.kind = StructureKind::Set;
  g.vertices = {"0", "1", "2", "3", "4"};
  g.validate();
  return g;
}

// b(x) = {x-1, x, x+1} clipped to the ground, as relation pairs.
inline std::vector<std::pair<std::string, std::string>> line_pairs() {
  std::vector<std::pair<std::string, std::string>> p;
  for (int x = 0; x <= 4; ++x)
    for (int y = x - 1; y <= x + 1; ++y)
      if (y >= 0 && y <= 4) p.emplace_back(std::to_string(x), std::to_string(y));
  return p;
}

inline Ground path4() {
  Ground g;
  g.kind = StructureKind::Graph;
  g.vertices = {"a", "b", "c", "d"};
  g.edges[edge_token("a", "b", false)] = {"a", "b"};
  g.edges[edge_token("b", "c", false)] = {"b", "c"};
  g.edges[edge_token("c", "d", false)] = {"c", "d"};
  g.validate();
  return g;
}

inline Ground path6() {
  Ground g;
  g.kind = StructureKind::Graph;
  g.vertices = {"u", "z", "x", "y", "w", "s"};
  auto link = [&g](const std::string& p, const std::string& q) {
    g.edges[edge_token(p, q, false)] = {p, q};
  };
  link("u", "z");
  link("z", "x");
  link("x", "y");
  link("y", "w");
  link("w", "s");
  g.validate();
  return g;
}

inline Ground hyp() {
  Ground g;
  g.kind = StructureKind::Hypergraph;
  g.vertices = {"1", "2", "3", "4"};
  g.hyperedges["e1"] = {"1", "2"};
  g.hyperedges["e2"] = {"2", "3"};
  g.hyperedges["e3"] = {"3", "4"};
  g.validate();
  return g;
}

inline Ground triangle() {
  Ground g;
  g.kind = StructureKind::Complex;
  g.vertices = {"A", "B", "C"};
  for (const IdSet& f : std::vector<IdSet>{{"A"}, {"B"}, {"C"}, {"A", "B"}, {"A", "C"},
                                           {"B", "C"}, {"A", "B", "C"}})
    g.faces[face_token(f)] = f;
  g.validate();
  return g;
}

inline std::shared_ptr<Lattice> lat_of(Ground g, ForgetMode m) {
  return std::make_shared<Lattice>(std::move(g), m);
}

// Every fixture lattice together with the builtin structuring element the
// closed forms expect on it.
struct Instance {
  std::string name;
  std::shared_ptr<Lattice> lat;
  StructuringElement b;
};

inline std::vector<Instance> builtin_instances() {
  std::vector<Instance> out;
  auto add = [&out](const std::string& name, std::shared_ptr<Lattice> lat,
                    const std::string& builtin,
                    const std::vector<std::pair<std::string, std::string>>& pairs = {}) {
    StructuringElement b = builtin_se(*lat, builtin, pairs);
    out.push_back({name, std::move(lat), std::move(b)});
  };
  add("set-line", lat_of(set_line(), ForgetMode::Element), kBuiltinRelation, line_pairs());
  add("path4-vertex", lat_of(path4(), ForgetMode::Vertex), kBuiltinClosedNeighborhood);
  add("path4-edge", lat_of(path4(), ForgetMode::Edge), kBuiltinEdgeNeighborhood);
  add("hyp-vertex", lat_of(hyp(), ForgetMode::Vertex), kBuiltinHyperedgeStar);
  add("hyp-hyperedge", lat_of(hyp(), ForgetMode::Hyperedge), kBuiltinHyperedgeOverlap);
  add("triangle-vertex", lat_of(triangle(), ForgetMode::Vertex), kBuiltinStarClosure);
  return out;
}

inline Model kripke_fixture(bool unchecked = false) {
  return kripke_to_model({"q0", "q1"},
                         {{"q0", "q0"}, {"q0", "q1"}, {"q1", "q1"}},
                         {{"p", {"q1"}}}, unchecked);
}

}  // namespace fx

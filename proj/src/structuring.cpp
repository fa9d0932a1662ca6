#include "structuring.hpp"

namespace morpho {

void se_validate(const Lattice& lat, const StructuringElement& b) {
  IdSet domain = lat.carrier_of_top();
  if (b.table.size() != domain.size())
    fail(Errc::BadInput, "structuring element must be total over the carrier of the ground");
  for (const auto& [x, img] : b.table) {
    if (!domain.count(x))
      fail(Errc::UnknownElement, "structuring element defined at unknown element " + x);
    lat.check_same_ground(img);
  }
}

const Sub& se_apply(const Lattice& lat, const StructuringElement& b, const std::string& x) {
  auto it = b.table.find(x);
  if (it == b.table.end()) fail(Errc::UnknownElement, "structuring element undefined at " + x);
  (void)lat;
  return it->second;
}

StructuringElement se_from_table(const Lattice& lat, std::map<std::string, Sub> table) {
  StructuringElement b{std::move(table), "", false};
  se_validate(lat, b);
  return b;
}

StructuringElement se_full(const Lattice& lat) {
  StructuringElement b;
  for (const auto& x : lat.carrier_of_top()) b.table[x] = lat.top();
  return b;
}

StructuringElement se_empty(const Lattice& lat) {
  StructuringElement b;
  for (const auto& x : lat.carrier_of_top()) b.table[x] = lat.bottom();
  return b;
}

StructuringElement se_identity(const Lattice& lat) {
  StructuringElement b;
  for (const auto& x : lat.carrier_of_top()) b.table[x] = lat.atom_of(x);
  return b;
}

bool se_leq(const Lattice& lat, const StructuringElement& a, const StructuringElement& b) {
  for (const auto& x : lat.carrier_of_top())
    if (!lat.leq(se_apply(lat, a, x), se_apply(lat, b, x))) return false;
  return true;
}

StructuringElement se_sup(const Lattice& lat, const std::vector<StructuringElement>& bs) {
  StructuringElement r;
  for (const auto& x : lat.carrier_of_top()) {
    std::vector<Sub> imgs;
    for (const auto& b : bs) imgs.push_back(se_apply(lat, b, x));
    r.table[x] = lat.sup(imgs);
  }
  return r;
}

StructuringElement se_inf(const Lattice& lat, const std::vector<StructuringElement>& bs) {
  StructuringElement r;
  for (const auto& x : lat.carrier_of_top()) {
    std::vector<Sub> imgs;
    for (const auto& b : bs) imgs.push_back(se_apply(lat, b, x));
    r.table[x] = lat.inf(imgs);
  }
  return r;
}

StructuringElement se_compose(const Lattice& lat, const StructuringElement& a,
                              const StructuringElement& b) {
  StructuringElement r;
  for (const auto& x : lat.carrier_of_top()) {
    std::vector<Sub> imgs;
    for (const auto& y : lat.carrier(se_apply(lat, a, x))) imgs.push_back(se_apply(lat, b, y));
    r.table[x] = lat.sup(imgs);
  }
  return r;
}

StructuringElement se_transpose(const Lattice& lat, const StructuringElement& b) {
  if (lat.kind() != StructureKind::Set)
    fail(Errc::UnsupportedStructure, "transpose is defined for powerset lattices only");
  StructuringElement r;
  for (const auto& x : lat.ground().vertices) r.table[x] = lat.bottom();
  for (const auto& [y, img] : b.table)
    for (const auto& x : img.prim) r.table[x].prim.insert(y);
  return r;
}

bool covers(const Lattice& lat, const StructuringElement& b, const Sub& d) {
  std::vector<Sub> imgs;
  for (const auto& v : lat.carrier(d)) imgs.push_back(se_apply(lat, b, v));
  return lat.leq(d, lat.sup(imgs));
}

bool is_covered(const Lattice& lat, const StructuringElement& b) {
  se_validate(lat, b);
  const Ground& g = lat.ground();

  if (lat.mode() == ForgetMode::Edge || lat.mode() == ForgetMode::Hyperedge)
    return g.vertices.empty();

  // Vertex-like carriers. A substructure is the sup of (a) the least
  // substructure at each of its carrier elements and (b) its secondary
  // components together with their endpoints. Covering all of those generators
  // is both necessary (each is a substructure) and sufficient (sup is
  // monotone), so the quantifier over all objects reduces to these
  // element-wise checks.
  for (const auto& v : g.vertices)
    if (!se_apply(lat, b, v).prim.count(v)) return false;

  switch (g.kind) {
    case StructureKind::Set:
      return true;
    case StructureKind::Graph:
      for (const auto& [t, e] : g.edges) {
        if (!se_apply(lat, b, e.first).sec.count(t) && !se_apply(lat, b, e.second).sec.count(t))
          return false;
      }
      return true;
    case StructureKind::Hypergraph:
      for (const auto& [n, members] : g.hyperedges) {
        bool hit = false;
        for (const auto& v : members)
          if (se_apply(lat, b, v).sec.count(n)) {
            hit = true;
            break;
          }
        if (!hit) return false;
      }
      return true;
    case StructureKind::Complex:
      for (const auto& [t, members] : g.faces) {
        bool hit = false;
        for (const auto& v : members)
          if (se_apply(lat, b, v).sec.count(t)) {
            hit = true;
            break;
          }
        if (!hit) return false;
      }
      return true;
  }
  return false;
}

namespace {

StructuringElement relation_se(const Lattice& lat,
                               const std::vector<std::pair<std::string, std::string>>& pairs) {
  if (lat.kind() != StructureKind::Set)
    fail(Errc::IncompatibleMode, "relation structuring elements live on set grounds");
  StructuringElement b;
  for (const auto& x : lat.ground().vertices) b.table[x] = lat.bottom();
  for (const auto& [x, y] : pairs) {
    if (!lat.ground().vertices.count(x)) fail(Errc::UnknownElement, "unknown element " + x);
    if (!lat.ground().vertices.count(y)) fail(Errc::UnknownElement, "unknown element " + y);
    b.table[x].prim.insert(y);
  }
  return b;
}

StructuringElement closed_neighborhood_se(const Lattice& lat) {
  StructuringElement b;
  const Ground& g = lat.ground();
  for (const auto& x : g.vertices) {
    IdSet verts{x}, edges;
    for (const auto& [t, e] : g.edges) {
      if (e.first == x || e.second == x) {
        edges.insert(t);
        verts.insert(e.first);
        verts.insert(e.second);
      }
    }
    b.table[x] = Sub{std::move(verts), std::move(edges), lat.serial()};
  }
  return b;
}

StructuringElement edge_neighborhood_se(const Lattice& lat) {
  StructuringElement b;
  const Ground& g = lat.ground();
  for (const auto& [t0, e0] : g.edges) {
    IdSet verts, edges;
    for (const auto& [t, e] : g.edges) {
      if (e.first == e0.first || e.second == e0.first || e.first == e0.second ||
          e.second == e0.second) {
        edges.insert(t);
        verts.insert(e.first);
        verts.insert(e.second);
      }
    }
    b.table[t0] = Sub{std::move(verts), std::move(edges), lat.serial()};
  }
  return b;
}

StructuringElement hyperedge_star_se(const Lattice& lat) {
  StructuringElement b;
  const Ground& g = lat.ground();
  for (const auto& x : g.vertices) {
    IdSet verts, names;
    for (const auto& [n, members] : g.hyperedges) {
      if (members.count(x)) {
        names.insert(n);
        verts.insert(members.begin(), members.end());
      }
    }
    b.table[x] = Sub{std::move(verts), std::move(names), lat.serial()};
  }
  return b;
}

StructuringElement hyperedge_overlap_se(const Lattice& lat) {
  StructuringElement b;
  const Ground& g = lat.ground();
  for (const auto& [n0, members0] : g.hyperedges) {
    IdSet verts, names;
    for (const auto& [n, members] : g.hyperedges) {
      if (!set_inter(members, members0).empty()) {
        names.insert(n);
        verts.insert(members.begin(), members.end());
      }
    }
    b.table[n0] = Sub{std::move(verts), std::move(names), lat.serial()};
  }
  return b;
}

StructuringElement star_closure_se(const Lattice& lat) {
  StructuringElement b;
  const Ground& g = lat.ground();
  for (const auto& x : g.vertices) {
    IdSet verts;
    for (const auto& [t, members] : g.faces)
      if (members.count(x)) verts.insert(members.begin(), members.end());
    // Faces contained in some face through x; closed downward by construction.
    IdSet faces;
    for (const auto& [t, members] : g.faces) {
      for (const auto& [t2, members2] : g.faces) {
        if (members2.count(x) && subset(members, members2)) {
          faces.insert(t);
          break;
        }
      }
    }
    b.table[x] = Sub{std::move(verts), std::move(faces), lat.serial()};
  }
  return b;
}

}  // namespace

StructuringElement builtin_se(const Lattice& lat, const std::string& name,
                              const std::vector<std::pair<std::string, std::string>>& pairs) {
  auto require = [&](StructureKind k, ForgetMode m) {
    if (lat.kind() != k || lat.mode() != m)
      fail(Errc::IncompatibleMode, name + " does not fit this structure and forget mode");
  };
  StructuringElement b;
  if (name == kBuiltinRelation) {
    require(StructureKind::Set, ForgetMode::Element);
    b = relation_se(lat, pairs);
  } else if (name == kBuiltinClosedNeighborhood) {
    require(StructureKind::Graph, ForgetMode::Vertex);
    b = closed_neighborhood_se(lat);
  } else if (name == kBuiltinEdgeNeighborhood) {
    require(StructureKind::Graph, ForgetMode::Edge);
    b = edge_neighborhood_se(lat);
  } else if (name == kBuiltinHyperedgeStar) {
    require(StructureKind::Hypergraph, ForgetMode::Vertex);
    b = hyperedge_star_se(lat);
  } else if (name == kBuiltinHyperedgeOverlap) {
    require(StructureKind::Hypergraph, ForgetMode::Hyperedge);
    b = hyperedge_overlap_se(lat);
  } else if (name == kBuiltinStarClosure) {
    require(StructureKind::Complex, ForgetMode::Vertex);
    b = star_closure_se(lat);
  } else {
    fail(Errc::UnknownName, "unknown builtin structuring element '" + name + "'");
  }
  b.builtin = name;
  se_validate(lat, b);
  return b;
}

}  // namespace morpho

#include "lattice.hpp"

#include <algorithm>

namespace morpho {

namespace {

bool mode_fits(StructureKind k, ForgetMode m) {
  switch (k) {
    case StructureKind::Set: return m == ForgetMode::Element;
    case StructureKind::Graph: return m == ForgetMode::Vertex || m == ForgetMode::Edge;
    case StructureKind::Hypergraph: return m == ForgetMode::Vertex || m == ForgetMode::Hyperedge;
    case StructureKind::Complex: return m == ForgetMode::Vertex;
  }
  return false;
}

// Faces ordered by size then token, so every one-smaller subface of faces[i]
// appears before index i. Both the ideal enumeration and the closure checks
// rely on this.
std::vector<std::string> faces_by_size(const Ground& g) {
  std::vector<std::string> order;
  for (const auto& [t, m] : g.faces) order.push_back(t);
  std::stable_sort(order.begin(), order.end(), [&g](const std::string& a, const std::string& b) {
    return g.faces.at(a).size() < g.faces.at(b).size();
  });
  return order;
}

}  // namespace

Lattice::Lattice(Ground g, ForgetMode mode, std::uint64_t enum_bound)
    : ground_(std::move(g)), mode_(mode), bound_(enum_bound) {
  ground_.validate();
  if (!mode_fits(ground_.kind, mode_))
    fail(Errc::UnsupportedForgetMode, "forget mode not available for this structure");
  serial_ = ground_.serial() ^ (static_cast<std::uint64_t>(mode_) << 1);
  for (const auto& v : ground_.vertices) prim_list_.push_back(v);
  for (auto& t : ground_.secondary_tokens()) sec_list_.push_back(t);
}

void Lattice::check_same_ground(const Sub& d) const {
  if (d.ground_serial != serial_)
    fail(Errc::GroundMismatch, "substructure belongs to a different ground or forget mode");
}

bool Lattice::sec_valid_in(const std::string& token, const IdSet& prim) const {
  switch (ground_.kind) {
    case StructureKind::Set:
      return false;
    case StructureKind::Graph: {
      const auto& e = ground_.edges.at(token);
      return prim.count(e.first) && prim.count(e.second);
    }
    case StructureKind::Hypergraph:
    case StructureKind::Complex:
      return subset(ground_.secondary_members(token), prim);
  }
  return false;
}

IdSet Lattice::induced_sec(const IdSet& prim) const {
  IdSet out;
  for (const auto& t : sec_list_)
    if (sec_valid_in(t, prim)) out.insert(t);
  return out;
}

IdSet Lattice::derive_prim_for_complex(const IdSet& faces) const {
  IdSet verts;
  for (const auto& t : faces)
    for (const auto& v : ground_.faces.at(t)) verts.insert(v);
  return verts;
}

Sub Lattice::make_sub(IdSet prim, IdSet sec) const {
  for (const auto& v : prim)
    if (!ground_.vertices.count(v))
      fail(Errc::NotASubobject, "element " + v + " is not in the ground");
  switch (ground_.kind) {
    case StructureKind::Set:
      if (!sec.empty()) fail(Errc::NotASubobject, "set subobjects carry no secondary part");
      break;
    case StructureKind::Graph:
      for (const auto& t : sec) {
        auto it = ground_.edges.find(t);
        if (it == ground_.edges.end()) fail(Errc::NotASubobject, "unknown edge " + t);
        if (!prim.count(it->second.first) || !prim.count(it->second.second))
          fail(Errc::NotASubobject, "edge " + t + " lacks an endpoint");
      }
      break;
    case StructureKind::Hypergraph:
      for (const auto& n : sec) {
        auto it = ground_.hyperedges.find(n);
        if (it == ground_.hyperedges.end()) fail(Errc::NotASubobject, "unknown hyperedge " + n);
        if (!subset(it->second, prim))
          fail(Errc::NotASubobject, "hyperedge " + n + " is not contained in the kept vertices");
      }
      break;
    case StructureKind::Complex: {
      for (const auto& t : sec) {
        auto it = ground_.faces.find(t);
        if (it == ground_.faces.end()) fail(Errc::NotASubobject, "unknown face " + t);
        if (it->second.size() > 1) {
          for (const auto& drop : it->second) {
            IdSet g;
            for (const auto& m : it->second)
              if (m != drop) g.insert(m);
            if (!sec.count(face_token(g)))
              fail(Errc::NotASubobject, "faces not closed downward: " + t + " lacks " + face_token(g));
          }
        }
      }
      IdSet derived = derive_prim_for_complex(sec);
      if (prim != derived)
        fail(Errc::NotASubobject,
             "complex vertices must be exactly those carried by the kept faces");
      break;
    }
  }
  return Sub{std::move(prim), std::move(sec), serial_};
}

Sub Lattice::top() const {
  IdSet sec;
  for (const auto& t : sec_list_) sec.insert(t);
  return Sub{ground_.vertices, std::move(sec), serial_};
}

Sub Lattice::bottom() const { return Sub{{}, {}, serial_}; }

bool Lattice::leq(const Sub& a, const Sub& b) const {
  check_same_ground(a);
  check_same_ground(b);
  return subset(a.prim, b.prim) && subset(a.sec, b.sec);
}

Sub Lattice::sup(const std::vector<Sub>& family) const {
  Sub r = bottom();
  for (const auto& d : family) {
    check_same_ground(d);
    r.prim.insert(d.prim.begin(), d.prim.end());
    r.sec.insert(d.sec.begin(), d.sec.end());
  }
  return r;
}

Sub Lattice::inf(const std::vector<Sub>& family) const {
  if (family.empty()) return top();
  Sub r = family.front();
  check_same_ground(r);
  for (size_t i = 1; i < family.size(); ++i) {
    check_same_ground(family[i]);
    r.prim = set_inter(r.prim, family[i].prim);
    r.sec = set_inter(r.sec, family[i].sec);
  }
  return r;
}

const IdSet& Lattice::carrier(const Sub& d) const {
  check_same_ground(d);
  return (mode_ == ForgetMode::Element || mode_ == ForgetMode::Vertex) ? d.prim : d.sec;
}

IdSet Lattice::carrier_of_top() const {
  if (mode_ == ForgetMode::Element || mode_ == ForgetMode::Vertex) return ground_.vertices;
  IdSet out;
  for (const auto& t : sec_list_) out.insert(t);
  return out;
}

Sub Lattice::atom_of(const std::string& x) const {
  switch (mode_) {
    case ForgetMode::Element:
    case ForgetMode::Vertex: {
      if (!ground_.vertices.count(x)) fail(Errc::UnknownElement, "unknown element " + x);
      if (ground_.kind == StructureKind::Complex) return Sub{{x}, {face_token({x})}, serial_};
      return Sub{{x}, {}, serial_};
    }
    case ForgetMode::Edge: {
      auto it = ground_.edges.find(x);
      if (it == ground_.edges.end()) fail(Errc::UnknownElement, "unknown edge " + x);
      return Sub{{it->second.first, it->second.second}, {x}, serial_};
    }
    case ForgetMode::Hyperedge: {
      auto it = ground_.hyperedges.find(x);
      if (it == ground_.hyperedges.end()) fail(Errc::UnknownElement, "unknown hyperedge " + x);
      return Sub{it->second, {x}, serial_};
    }
  }
  fail(Errc::NoAtoms, "no atoms for this mode");
}

Sub Lattice::co_restrict(const IdSet& keep) const {
  switch (mode_) {
    case ForgetMode::Element:
      return Sub{set_inter(keep, ground_.vertices), {}, serial_};
    case ForgetMode::Vertex: {
      IdSet prim = set_inter(keep, ground_.vertices);
      return Sub{prim, induced_sec(prim), serial_};
    }
    case ForgetMode::Edge:
    case ForgetMode::Hyperedge: {
      IdSet sec;
      for (const auto& t : sec_list_)
        if (keep.count(t)) sec.insert(t);
      return Sub{ground_.vertices, std::move(sec), serial_};
    }
  }
  fail(Errc::UnsupportedForgetMode, "co_restrict");
}

Sub Lattice::exponential(const Sub& d, const Sub& c) const {
  check_same_ground(d);
  check_same_ground(c);
  IdSet prim = set_union(set_minus(ground_.vertices, c.prim), d.prim);
  IdSet sec;
  if (ground_.kind == StructureKind::Complex) {
    // Largest downward-closed face family inside {f | f ∉ c or f ∈ d}; a face
    // qualifies only if all its one-smaller subfaces do, so work upward by
    // size.
    IdSet qual;
    for (const auto& t : faces_by_size(ground_)) {
      if (c.sec.count(t) && !d.sec.count(t)) continue;
      const auto& members = ground_.faces.at(t);
      bool ok = true;
      if (members.size() > 1) {
        for (const auto& drop : members) {
          IdSet g;
          for (const auto& m : members)
            if (m != drop) g.insert(m);
          if (!qual.count(face_token(g))) {
            ok = false;
            break;
          }
        }
      }
      if (ok) qual.insert(t);
    }
    sec = std::move(qual);
    prim = derive_prim_for_complex(sec);
  } else {
    for (const auto& t : sec_list_)
      if (sec_valid_in(t, prim) && (!c.sec.count(t) || d.sec.count(t))) sec.insert(t);
  }
  return Sub{std::move(prim), std::move(sec), serial_};
}

Sub Lattice::complement(const Sub& d) const { return exponential(bottom(), d); }

bool Lattice::is_boolean() const {
  if (ground_.kind == StructureKind::Set) return true;  // d ∪ (S ∖ d) = S
  bool boolean = true;
  const Sub t = top();
  for_each([&](const Sub& d) {
    if (!boolean) return;
    if (sup2(d, complement(d)) != t) boolean = false;
  });
  return boolean;
}

void Lattice::for_each(const std::function<void(const Sub&)>& fn) const {
  std::uint64_t yielded = 0;
  auto yield = [&](Sub s) {
    if (++yielded > bound_)
      fail(Errc::TooLarge, "more than " + std::to_string(bound_) + " subobjects");
    fn(s);
  };

  if (ground_.kind == StructureKind::Complex) {
    // Depth-first over faces in ascending-size order; a face may be included
    // only when all its one-smaller subfaces already are. Exactly the
    // downward-closed families are produced.
    auto order = faces_by_size(ground_);
    IdSet chosen;
    std::function<void(size_t)> rec = [&](size_t i) {
      if (i == order.size()) {
        yield(Sub{derive_prim_for_complex(chosen), chosen, serial_});
        return;
      }
      rec(i + 1);  // exclude order[i]
      const auto& members = ground_.faces.at(order[i]);
      bool can = true;
      if (members.size() > 1) {
        for (const auto& drop : members) {
          IdSet g;
          for (const auto& m : members)
            if (m != drop) g.insert(m);
          if (!chosen.count(face_token(g))) {
            can = false;
            break;
          }
        }
      }
      if (can) {
        chosen.insert(order[i]);
        rec(i + 1);
        chosen.erase(order[i]);
      }
    };
    rec(0);
    return;
  }

  if (prim_list_.size() > 62) fail(Errc::TooLarge, "ground too large to enumerate");
  for (std::uint64_t pm = 0; pm < (1ull << prim_list_.size()); ++pm) {
    IdSet prim;
    for (size_t i = 0; i < prim_list_.size(); ++i)
      if (pm & (1ull << i)) prim.insert(prim_list_[i]);
    std::vector<std::string> eligible;
    for (const auto& t : sec_list_)
      if (sec_valid_in(t, prim)) eligible.push_back(t);
    if (eligible.size() > 62) fail(Errc::TooLarge, "ground too large to enumerate");
    for (std::uint64_t sm = 0; sm < (1ull << eligible.size()); ++sm) {
      IdSet sec;
      for (size_t i = 0; i < eligible.size(); ++i)
        if (sm & (1ull << i)) sec.insert(eligible[i]);
      yield(Sub{prim, std::move(sec), serial_});
    }
  }
}

std::vector<Sub> Lattice::enumerate() const {
  std::vector<Sub> out;
  for_each([&out](const Sub& s) { out.push_back(s); });
  return out;
}

Sub Lattice::random_sub(std::mt19937_64& rng) const {
  auto coin = [&rng]() { return (rng() & 1u) != 0; };
  if (ground_.kind == StructureKind::Complex) {
    IdSet sec;
    for (const auto& t : faces_by_size(ground_)) {
      const auto& members = ground_.faces.at(t);
      bool closed = true;
      if (members.size() > 1) {
        for (const auto& drop : members) {
          IdSet g;
          for (const auto& m : members)
            if (m != drop) g.insert(m);
          if (!sec.count(face_token(g))) {
            closed = false;
            break;
          }
        }
      }
      bool flip = coin();  // always consume one flip per face, keeps streams aligned
      if (closed && flip) sec.insert(t);
    }
    return Sub{derive_prim_for_complex(sec), std::move(sec), serial_};
  }
  IdSet prim;
  for (const auto& v : prim_list_)
    if (coin()) prim.insert(v);
  IdSet sec;
  for (const auto& t : sec_list_) {
    bool flip = coin();
    if (flip && sec_valid_in(t, prim)) sec.insert(t);
  }
  return Sub{std::move(prim), std::move(sec), serial_};
}

}  // namespace morpho

#include "ground.hpp"

#include <algorithm>

namespace morpho {

void check_id(const std::string& id) {
  if (id.empty()) fail(Errc::InvalidGround, "empty id");
  for (char ch : id) {
    if (ch == ',' || ch == '(' || ch == ')' || ch == '{' || ch == '}' ||
        static_cast<unsigned char>(ch) <= 0x20)
      fail(Errc::InvalidGround, "id '" + id + "' contains a reserved character");
  }
}

std::string edge_token(const std::string& u, const std::string& v, bool directed) {
  if (!directed && v < u) return "(" + v + "," + u + ")";
  return "(" + u + "," + v + ")";
}

std::string face_token(const IdSet& members) {
  std::string t = "{";
  bool first = true;
  for (const auto& m : members) {
    if (!first) t += ",";
    t += m;
    first = false;
  }
  return t + "}";
}

namespace {

// Nonempty proper-subset faces, one cardinality down, generated lazily during
// closure checks. Enumerating all subsets of a face would be exponential in
// its size; one level is enough because closure is checked for every face.
std::vector<IdSet> shrink_by_one(const IdSet& face) {
  std::vector<IdSet> out;
  if (face.size() <= 1) return out;
  for (const auto& drop : face) {
    IdSet g;
    for (const auto& m : face)
      if (m != drop) g.insert(m);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

void Ground::validate(bool close_faces) {
  for (const auto& v : vertices) check_id(v);

  switch (kind) {
    case StructureKind::Set:
      if (!edges.empty() || !hyperedges.empty() || !faces.empty())
        fail(Errc::InvalidGround, "a set ground carries no edges, hyperedges or faces");
      break;

    case StructureKind::Graph: {
      std::map<std::string, std::pair<std::string, std::string>> canon;
      for (const auto& [tok, e] : edges) {
        if (!vertices.count(e.first) || !vertices.count(e.second))
          fail(Errc::InvalidGround, "edge " + tok + " has an endpoint outside the vertex set");
        std::string want = edge_token(e.first, e.second, directed);
        auto ins = canon.emplace(want, directed ? e : std::pair{std::min(e.first, e.second),
                                                               std::max(e.first, e.second)});
        if (!ins.second) fail(Errc::InvalidGround, "duplicate edge " + want);
      }
      edges = std::move(canon);
      break;
    }

    case StructureKind::Hypergraph:
      for (const auto& [name, members] : hyperedges) {
        check_id(name);
        if (members.empty()) fail(Errc::InvalidGround, "hyperedge " + name + " is empty");
        for (const auto& m : members)
          if (!vertices.count(m))
            fail(Errc::InvalidGround, "hyperedge " + name + " contains unknown vertex " + m);
      }
      break;

    case StructureKind::Complex: {
      std::map<std::string, IdSet> canon;
      for (const auto& [tok, members] : faces) {
        if (members.empty()) fail(Errc::InvalidGround, "empty face");
        for (const auto& m : members)
          if (!vertices.count(m))
            fail(Errc::InvalidGround, "face " + face_token(members) + " contains unknown vertex " + m);
        canon[face_token(members)] = members;
      }
      if (close_faces) {
        // Downward completion: repeatedly add the one-smaller subfaces.
        std::vector<IdSet> todo;
        for (const auto& [tok, members] : canon) todo.push_back(members);
        while (!todo.empty()) {
          IdSet f = std::move(todo.back());
          todo.pop_back();
          for (auto& g : shrink_by_one(f))
            if (canon.emplace(face_token(g), g).second) todo.push_back(g);
        }
        for (const auto& v : vertices) canon.emplace(face_token({v}), IdSet{v});
      }
      for (const auto& [tok, members] : canon) {
        for (auto& g : shrink_by_one(members))
          if (!canon.count(face_token(g)))
            fail(Errc::InvalidGround,
                 "face family not closed downward: " + tok + " lacks " + face_token(g));
      }
      for (const auto& v : vertices)
        if (!canon.count(face_token({v})))
          fail(Errc::InvalidGround, "vertex " + v + " has no singleton face");
      faces = std::move(canon);
      break;
    }
  }
}

std::uint64_t Ground::serial() const {
  // FNV-1a over a canonical rendering; collisions would only blunt the
  // GroundMismatch diagnostic, never correctness of results.
  std::uint64_t h = 1469598103934665603ull;
  auto eat = [&h](const std::string& s) {
    for (char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
  };
  eat(std::to_string(static_cast<int>(kind)));
  eat(directed ? "d" : "u");
  for (const auto& v : vertices) eat(v);
  eat("|");
  for (const auto& [t, e] : edges) eat(t);
  for (const auto& [n, m] : hyperedges) {
    eat(n);
    for (const auto& x : m) eat(x);
  }
  for (const auto& [t, m] : faces) eat(t);
  return h;
}

const IdSet& Ground::secondary_members(const std::string& token) const {
  if (kind == StructureKind::Hypergraph) {
    auto it = hyperedges.find(token);
    if (it == hyperedges.end()) fail(Errc::UnknownElement, "unknown hyperedge " + token);
    return it->second;
  }
  if (kind == StructureKind::Complex) {
    auto it = faces.find(token);
    if (it == faces.end()) fail(Errc::UnknownElement, "unknown face " + token);
    return it->second;
  }
  fail(Errc::UnsupportedStructure, "secondary_members: not a hypergraph or complex");
}

std::vector<std::string> Ground::secondary_tokens() const {
  std::vector<std::string> out;
  switch (kind) {
    case StructureKind::Set:
      break;
    case StructureKind::Graph:
      for (const auto& [t, e] : edges) out.push_back(t);
      break;
    case StructureKind::Hypergraph:
      for (const auto& [n, m] : hyperedges) out.push_back(n);
      break;
    case StructureKind::Complex:
      for (const auto& [t, m] : faces) out.push_back(t);
      break;
  }
  return out;
}

const char* kind_name(StructureKind k) {
  switch (k) {
    case StructureKind::Set: return "set";
    case StructureKind::Graph: return "graph";
    case StructureKind::Hypergraph: return "hypergraph";
    case StructureKind::Complex: return "complex";
  }
  return "unknown";
}

const char* mode_name(ForgetMode m) {
  switch (m) {
    case ForgetMode::Element: return "element";
    case ForgetMode::Vertex: return "vertex";
    case ForgetMode::Edge: return "edge";
    case ForgetMode::Hyperedge: return "hyperedge";
  }
  return "unknown";
}

StructureKind kind_from_name(const std::string& name) {
  if (name == "set") return StructureKind::Set;
  if (name == "graph") return StructureKind::Graph;
  if (name == "hypergraph") return StructureKind::Hypergraph;
  if (name == "complex") return StructureKind::Complex;
  fail(Errc::BadInput, "unknown structure kind '" + name + "'");
}

ForgetMode mode_from_name(const std::string& name) {
  if (name == "element") return ForgetMode::Element;
  if (name == "vertex") return ForgetMode::Vertex;
  if (name == "edge") return ForgetMode::Edge;
  if (name == "hyperedge") return ForgetMode::Hyperedge;
  fail(Errc::BadInput, "unknown forget mode '" + name + "'");
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::Ok: return "Ok";
    case Errc::GroundMismatch: return "GroundMismatch";
    case Errc::TooLarge: return "TooLarge";
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::UnknownName: return "UnknownName";
    case Errc::IncompatibleMode: return "IncompatibleMode";
    case Errc::NoClosedForm: return "NoClosedForm";
    case Errc::NotASubobject: return "NotASubobject";
    case Errc::InvalidGround: return "InvalidGround";
    case Errc::UnsupportedForgetMode: return "UnsupportedForgetMode";
    case Errc::NoAtoms: return "NoAtoms";
    case Errc::UnsupportedStructure: return "UnsupportedStructure";
    case Errc::UnknownProposition: return "UnknownProposition";
    case Errc::NotCovered: return "NotCovered";
    case Errc::UnknownWorld: return "UnknownWorld";
    case Errc::UnknownSchema: return "UnknownSchema";
    case Errc::InvalidStep: return "InvalidStep";
    case Errc::PreconditionUnmet: return "PreconditionUnmet";
    case Errc::ParseError: return "ParseError";
    case Errc::BadInput: return "BadInput";
  }
  return "Unknown";
}

}  // namespace morpho

#include "io.hpp"

#include <fstream>
#include <sstream>

namespace morpho {

namespace {

void expect_object(const json& j, const std::string& what) {
  if (!j.is_object()) fail(Errc::BadInput, what + " must be a JSON object");
}

void expect_fields(const json& j, const std::vector<std::string>& allowed,
                   const std::string& what) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const auto& a : allowed)
      if (key == a) {
        ok = true;
        break;
      }
    if (!ok) fail(Errc::BadInput, what + ": unknown field \"" + key + "\"");
  }
}

const json& require(const json& j, const std::string& key, const std::string& what) {
  auto it = j.find(key);
  if (it == j.end()) fail(Errc::BadInput, what + ": missing field \"" + key + "\"");
  return *it;
}

std::string as_string(const json& j, const std::string& what) {
  if (!j.is_string()) fail(Errc::BadInput, what + " must be a string");
  return j.get<std::string>();
}

IdSet id_array(const json& j, const std::string& what) {
  if (!j.is_array()) fail(Errc::BadInput, what + " must be an array of ids");
  IdSet out;
  for (const auto& x : j) out.insert(as_string(x, what + " entry"));
  return out;
}

std::vector<std::pair<std::string, std::string>> pair_array(const json& j,
                                                            const std::string& what) {
  if (!j.is_array()) fail(Errc::BadInput, what + " must be an array of pairs");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2)
      fail(Errc::BadInput, what + " entries must be two-element arrays");
    out.emplace_back(as_string(p[0], what), as_string(p[1], what));
  }
  return out;
}

json ids_json(const IdSet& ids) {
  json a = json::array();
  for (const auto& x : ids) a.push_back(x);
  return a;
}

}  // namespace

json ground_to_json(const Ground& g) {
  json j;
  j["type"] = kind_name(g.kind);
  switch (g.kind) {
    case StructureKind::Set:
      j["elements"] = ids_json(g.vertices);
      break;
    case StructureKind::Graph: {
      j["directed"] = g.directed;
      j["vertices"] = ids_json(g.vertices);
      json edges = json::array();
      for (const auto& [tok, e] : g.edges) edges.push_back({e.first, e.second});
      j["edges"] = std::move(edges);
      break;
    }
    case StructureKind::Hypergraph: {
      j["vertices"] = ids_json(g.vertices);
      json hs = json::object();
      for (const auto& [name, members] : g.hyperedges) hs[name] = ids_json(members);
      j["hyperedges"] = std::move(hs);
      break;
    }
    case StructureKind::Complex: {
      j["vertices"] = ids_json(g.vertices);
      json faces = json::array();
      for (const auto& [tok, members] : g.faces) faces.push_back(ids_json(members));
      j["faces"] = std::move(faces);
      break;
    }
  }
  return j;
}

Ground ground_from_json(const json& j) {
  expect_object(j, "ground");
  Ground g;
  g.kind = kind_from_name(as_string(require(j, "type", "ground"), "ground type"));
  switch (g.kind) {
    case StructureKind::Set:
      expect_fields(j, {"type", "elements"}, "set ground");
      g.vertices = id_array(require(j, "elements", "set ground"), "elements");
      break;
    case StructureKind::Graph: {
      expect_fields(j, {"type", "directed", "vertices", "edges"}, "graph ground");
      if (auto it = j.find("directed"); it != j.end()) {
        if (!it->is_boolean()) fail(Errc::BadInput, "\"directed\" must be a boolean");
        g.directed = it->get<bool>();
      }
      g.vertices = id_array(require(j, "vertices", "graph ground"), "vertices");
      for (const auto& [u, v] : pair_array(require(j, "edges", "graph ground"), "edges"))
        g.edges[edge_token(u, v, g.directed)] = {u, v};
      break;
    }
    case StructureKind::Hypergraph: {
      expect_fields(j, {"type", "vertices", "hyperedges"}, "hypergraph ground");
      g.vertices = id_array(require(j, "vertices", "hypergraph ground"), "vertices");
      const json& hs = require(j, "hyperedges", "hypergraph ground");
      expect_object(hs, "\"hyperedges\"");
      for (const auto& [name, members] : hs.items())
        g.hyperedges[name] = id_array(members, "hyperedge " + name);
      break;
    }
    case StructureKind::Complex: {
      expect_fields(j, {"type", "vertices", "faces"}, "complex ground");
      g.vertices = id_array(require(j, "vertices", "complex ground"), "vertices");
      const json& fs = require(j, "faces", "complex ground");
      if (!fs.is_array()) fail(Errc::BadInput, "\"faces\" must be an array");
      for (const auto& f : fs) {
        IdSet members = id_array(f, "face");
        g.faces[face_token(members)] = members;
      }
      break;
    }
  }
  g.validate();
  return g;
}

json sub_to_json(const Lattice& lat, const Sub& d) {
  lat.check_same_ground(d);
  json j;
  switch (lat.kind()) {
    case StructureKind::Set:
      j["elements"] = ids_json(d.prim);
      break;
    case StructureKind::Graph: {
      j["vertices"] = ids_json(d.prim);
      json edges = json::array();
      for (const auto& tok : d.sec) {
        const auto& e = lat.ground().edges.at(tok);
        edges.push_back({e.first, e.second});
      }
      j["edges"] = std::move(edges);
      break;
    }
    case StructureKind::Hypergraph:
      j["vertices"] = ids_json(d.prim);
      j["hyperedges"] = ids_json(d.sec);
      break;
    case StructureKind::Complex: {
      j["vertices"] = ids_json(d.prim);
      json faces = json::array();
      for (const auto& tok : d.sec) faces.push_back(ids_json(lat.ground().secondary_members(tok)));
      j["faces"] = std::move(faces);
      break;
    }
  }
  return j;
}

Sub sub_from_json(const Lattice& lat, const json& j) {
  expect_object(j, "subobject");
  IdSet prim, sec;
  switch (lat.kind()) {
    case StructureKind::Set:
      expect_fields(j, {"elements"}, "set subobject");
      prim = id_array(require(j, "elements", "set subobject"), "elements");
      break;
    case StructureKind::Graph:
      expect_fields(j, {"vertices", "edges"}, "graph subobject");
      prim = id_array(require(j, "vertices", "graph subobject"), "vertices");
      for (const auto& [u, v] : pair_array(require(j, "edges", "graph subobject"), "edges"))
        sec.insert(edge_token(u, v, lat.ground().directed));
      break;
    case StructureKind::Hypergraph:
      expect_fields(j, {"vertices", "hyperedges"}, "hypergraph subobject");
      prim = id_array(require(j, "vertices", "hypergraph subobject"), "vertices");
      sec = id_array(require(j, "hyperedges", "hypergraph subobject"), "hyperedges");
      break;
    case StructureKind::Complex: {
      expect_fields(j, {"vertices", "faces"}, "complex subobject");
      prim = id_array(require(j, "vertices", "complex subobject"), "vertices");
      const json& fs = require(j, "faces", "complex subobject");
      if (!fs.is_array()) fail(Errc::BadInput, "\"faces\" must be an array");
      for (const auto& f : fs) sec.insert(face_token(id_array(f, "face")));
      break;
    }
  }
  return lat.make_sub(std::move(prim), std::move(sec));
}

json se_to_json(const Lattice& lat, const StructuringElement& b) {
  json j;
  if (b.builtin == kBuiltinRelation) {
    j["kind"] = "relation";
    json pairs = json::array();
    for (const auto& [x, image] : b.table)
      for (const auto& y : image.prim) pairs.push_back({x, y});
    j["pairs"] = std::move(pairs);
  } else if (!b.builtin.empty()) {
    j["kind"] = "builtin";
    j["name"] = b.builtin;
  } else {
    j["kind"] = "table";
    json map = json::object();
    for (const auto& [x, image] : b.table) map[x] = sub_to_json(lat, image);
    j["map"] = std::move(map);
  }
  return j;
}

StructuringElement se_from_json(const Lattice& lat, const json& j) {
  expect_object(j, "structuring element");
  std::string kind = as_string(require(j, "kind", "structuring element"), "\"kind\"");
  if (kind == "builtin") {
    expect_fields(j, {"kind", "name"}, "builtin structuring element");
    return builtin_se(lat, as_string(require(j, "name", "builtin structuring element"), "\"name\""));
  }
  if (kind == "relation") {
    expect_fields(j, {"kind", "pairs"}, "relation structuring element");
    return builtin_se(lat, kBuiltinRelation,
                      pair_array(require(j, "pairs", "relation structuring element"), "pairs"));
  }
  if (kind == "table") {
    expect_fields(j, {"kind", "map"}, "table structuring element");
    const json& map = require(j, "map", "table structuring element");
    expect_object(map, "\"map\"");
    std::map<std::string, Sub> table;
    for (const auto& [x, sub] : map.items()) table.emplace(x, sub_from_json(lat, sub));
    return se_from_table(lat, std::move(table));
  }
  fail(Errc::BadInput, "structuring element kind must be builtin, relation or table");
}

Model model_from_json(const json& j) {
  expect_object(j, "model");
  bool unchecked = false;
  if (auto it = j.find("unchecked"); it != j.end()) {
    if (!it->is_boolean()) fail(Errc::BadInput, "\"unchecked\" must be a boolean");
    unchecked = it->get<bool>();
  }

  if (j.contains("kripke")) {
    expect_fields(j, {"kripke", "unchecked"}, "model");
    const json& k = j["kripke"];
    expect_object(k, "\"kripke\"");
    expect_fields(k, {"worlds", "relation", "valuation"}, "kripke model");
    IdSet worlds = id_array(require(k, "worlds", "kripke model"), "worlds");
    auto relation = pair_array(require(k, "relation", "kripke model"), "relation");
    std::map<std::string, IdSet> valuation;
    const json& val = require(k, "valuation", "kripke model");
    expect_object(val, "\"valuation\"");
    for (const auto& [name, ws] : val.items())
      valuation[name] = id_array(ws, "valuation of " + name);
    return kripke_to_model(worlds, relation, valuation, unchecked);
  }

  expect_fields(j, {"ground", "forget", "se", "valuation", "unchecked"}, "model");
  Ground g = ground_from_json(require(j, "ground", "model"));
  ForgetMode mode = mode_from_name(as_string(require(j, "forget", "model"), "\"forget\""));
  auto lat = std::make_shared<Lattice>(std::move(g), mode);
  StructuringElement b = se_from_json(*lat, require(j, "se", "model"));
  std::map<std::string, Sub> valuation;
  const json& val = require(j, "valuation", "model");
  expect_object(val, "\"valuation\"");
  for (const auto& [name, sub] : val.items())
    valuation.emplace(name, sub_from_json(*lat, sub));
  return make_model(std::move(lat), std::move(b), std::move(valuation), unchecked);
}

json model_to_json(const Model& m) {
  json j;
  j["ground"] = ground_to_json(m.lat->ground());
  j["forget"] = mode_name(m.lat->mode());
  j["se"] = se_to_json(*m.lat, m.b);
  json val = json::object();
  for (const auto& [name, sub] : m.valuation) val[name] = sub_to_json(*m.lat, sub);
  j["valuation"] = std::move(val);
  if (!is_covered(*m.lat, m.b)) j["unchecked"] = true;
  return j;
}

Derivation proof_from_json(const json& j) {
  expect_object(j, "proof");
  expect_fields(j, {"profile", "premises", "lines"}, "proof");
  Derivation d;
  if (auto it = j.find("profile"); it != j.end())
    d.profile = as_string(*it, "\"profile\"");
  const json& prem = require(j, "premises", "proof");
  if (!prem.is_array()) fail(Errc::BadInput, "\"premises\" must be an array");
  for (const auto& p : prem) d.premises.push_back(parse_formula(as_string(p, "premise")));
  const json& lines = require(j, "lines", "proof");
  if (!lines.is_array()) fail(Errc::BadInput, "\"lines\" must be an array");
  for (const auto& lj : lines) {
    expect_object(lj, "proof line");
    expect_fields(lj, {"formula", "rule", "args", "schema"}, "proof line");
    ProofLine ln;
    ln.formula = parse_formula(as_string(require(lj, "formula", "proof line"), "\"formula\""));
    ln.rule = as_string(require(lj, "rule", "proof line"), "\"rule\"");
    if (auto it = lj.find("args"); it != lj.end()) {
      if (!it->is_array()) fail(Errc::BadInput, "\"args\" must be an array");
      for (const auto& a : *it) {
        if (!a.is_number_integer()) fail(Errc::BadInput, "\"args\" entries must be integers");
        ln.args.push_back(a.get<long>());
      }
    }
    if (auto it = lj.find("schema"); it != lj.end()) ln.schema = as_string(*it, "\"schema\"");
    d.lines.push_back(std::move(ln));
  }
  return d;
}

json proof_to_json(const Derivation& d) {
  json j;
  j["profile"] = d.profile;
  json prem = json::array();
  for (const auto& p : d.premises) prem.push_back(print_formula(p));
  j["premises"] = std::move(prem);
  json lines = json::array();
  for (const auto& ln : d.lines) {
    json lj;
    lj["formula"] = print_formula(ln.formula);
    lj["rule"] = ln.rule;
    json args = json::array();
    for (long a : ln.args) args.push_back(a);
    lj["args"] = std::move(args);
    if (!ln.schema.empty()) lj["schema"] = ln.schema;
    lines.push_back(std::move(lj));
  }
  j["lines"] = std::move(lines);
  return j;
}

json law_report_to_json(const Lattice& lat, const LawReport& r) {
  json j;
  j["law"] = r.law;
  j["instance"] = r.instance;
  j["status"] = r.status;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["sampler"] = r.sampler;
  if (!r.note.empty()) j["note"] = r.note;
  if (!r.witness.empty()) {
    json w = json::array();
    for (const auto& [name, sub] : r.witness) {
      json item;
      item["name"] = name;
      item["value"] = sub_to_json(lat, sub);
      w.push_back(std::move(item));
    }
    j["witness"] = std::move(w);
  }
  return j;
}

json comparison_to_json(const Lattice& lat, const MethodComparison& c) {
  json j;
  j["object"] = sub_to_json(lat, c.object);
  auto results = [&](const std::vector<std::pair<std::string, Sub>>& rs) {
    json a = json::array();
    for (const auto& [method, sub] : rs) {
      json item;
      item["method"] = method;
      item["result"] = sub_to_json(lat, sub);
      a.push_back(std::move(item));
    }
    return a;
  };
  auto reasons = [&](const std::vector<std::pair<std::string, std::string>>& rs) {
    json a = json::array();
    for (const auto& [method, why] : rs) {
      json item;
      item["method"] = method;
      item["reason"] = why;
      a.push_back(std::move(item));
    }
    return a;
  };
  j["erosions"] = results(c.erosions);
  j["erosions_na"] = reasons(c.erosions_na);
  j["dilations"] = results(c.dilations);
  j["dilations_na"] = reasons(c.dilations_na);
  j["all_agree"] = c.all_agree;
  return j;
}

std::string to_dot(const Lattice& lat, const Sub& result, const Sub* baseline) {
  lat.check_same_ground(result);
  if (baseline) lat.check_same_ground(*baseline);
  const Ground& g = lat.ground();
  if (g.kind != StructureKind::Graph && g.kind != StructureKind::Hypergraph)
    fail(Errc::BadInput, "DOT export supports graphs and hypergraphs");

  auto quoted = [](const std::string& s) { return "\"" + s + "\""; };
  std::ostringstream out;
  const bool digraph = g.kind == StructureKind::Graph && g.directed;
  out << (digraph ? "digraph" : "graph") << " morpho {\n";

  IdSet verts = result.prim;
  IdSet secs = result.sec;
  if (baseline) {
    verts = set_union(verts, baseline->prim);
    secs = set_union(secs, baseline->sec);
  }
  auto dashed = [&](bool kept) { return kept ? "" : " [style=dashed]"; };

  if (g.kind == StructureKind::Graph) {
    for (const auto& v : verts)
      out << "  " << quoted(v) << dashed(result.prim.count(v)) << ";\n";
    const char* arrow = digraph ? " -> " : " -- ";
    for (const auto& tok : secs) {
      const auto& e = g.edges.at(tok);
      out << "  " << quoted(e.first) << arrow << quoted(e.second)
          << dashed(result.sec.count(tok)) << ";\n";
    }
  } else {
    for (const auto& v : verts)
      out << "  " << quoted(v) << dashed(result.prim.count(v)) << ";\n";
    for (const auto& name : secs) {
      out << "  subgraph " << quoted("cluster_" + name) << " {\n";
      out << "    label=" << quoted(name) << ";\n";
      if (!result.sec.count(name)) out << "    style=dashed;\n";
      for (const auto& m : g.hyperedges.at(name)) out << "    " << quoted(m) << ";\n";
      out << "  }\n";
    }
  }
  out << "}\n";
  return out.str();
}

json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::BadInput, "cannot open " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) fail(Errc::BadInput, path + " is not valid JSON");
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::BadInput, "cannot write " + path);
  out << dump_json(j);
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace morpho

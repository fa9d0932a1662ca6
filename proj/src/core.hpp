#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>

namespace morpho {

enum class StructureKind { Set, Graph, Hypergraph, Complex };

// Which component the carrier functor U extracts.
enum class ForgetMode { Element, Vertex, Edge, Hyperedge };

enum class Errc {
  Ok = 0,
  GroundMismatch,
  TooLarge,
  UnknownElement,
  UnknownName,
  IncompatibleMode,
  NoClosedForm,
  NotASubobject,
  InvalidGround,
  UnsupportedForgetMode,
  NoAtoms,
  UnsupportedStructure,
  UnknownProposition,
  NotCovered,
  UnknownWorld,
  UnknownSchema,
  InvalidStep,
  PreconditionUnmet,
  ParseError,
  BadInput,
};

const char* errc_name(Errc c);

struct Error : std::runtime_error {
  Errc code;
  Error(Errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

using IdSet = std::set<std::string>;

// A substructure value. `prim` holds vertices (or set elements), `sec` holds
// edge ids, hyperedge names or face tokens, depending on the ground's kind.
// Both components are canonical, so equality is structural equality.
struct Sub {
  IdSet prim;
  IdSet sec;
  std::uint64_t ground_serial = 0;

  friend bool operator==(const Sub&, const Sub&) = default;
  friend auto operator<=>(const Sub&, const Sub&) = default;
};

inline bool subset(const IdSet& a, const IdSet& b) {
  for (const auto& x : a)
    if (!b.count(x)) return false;
  return true;
}

inline IdSet set_union(const IdSet& a, const IdSet& b) {
  IdSet r = a;
  r.insert(b.begin(), b.end());
  return r;
}

inline IdSet set_inter(const IdSet& a, const IdSet& b) {
  IdSet r;
  for (const auto& x : a)
    if (b.count(x)) r.insert(x);
  return r;
}

inline IdSet set_minus(const IdSet& a, const IdSet& b) {
  IdSet r;
  for (const auto& x : a)
    if (!b.count(x)) r.insert(x);
  return r;
}

}  // namespace morpho

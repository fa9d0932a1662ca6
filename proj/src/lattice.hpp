#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "ground.hpp"

namespace morpho {

constexpr std::uint64_t kDefaultEnumBound = 1u << 20;

// A finite complete lattice of substructures of one ground object, with the
// carrier functor picked by the forget mode. All operations are pure; Sub
// values from different grounds are rejected via their serial.
class Lattice {
 public:
  Lattice(Ground g, ForgetMode mode, std::uint64_t enum_bound = kDefaultEnumBound);

  const Ground& ground() const { return ground_; }
  ForgetMode mode() const { return mode_; }
  StructureKind kind() const { return ground_.kind; }
  std::uint64_t serial() const { return serial_; }
  std::uint64_t enum_bound() const { return bound_; }

  // Builds and validates a substructure from raw components. For complexes the
  // primary part must equal the vertices induced by the kept faces.
  Sub make_sub(IdSet prim, IdSet sec) const;

  Sub top() const;
  Sub bottom() const;

  bool leq(const Sub& a, const Sub& b) const;
  Sub sup(const std::vector<Sub>& family) const;
  Sub inf(const std::vector<Sub>& family) const;
  Sub sup2(const Sub& a, const Sub& b) const { return sup({a, b}); }
  Sub inf2(const Sub& a, const Sub& b) const { return inf({a, b}); }

  // The carrier U(d): prim for vertex/element modes, sec for edge modes.
  const IdSet& carrier(const Sub& d) const;
  IdSet carrier_of_top() const;

  // Least substructure whose carrier is {x}.
  Sub atom_of(const std::string& x) const;

  // Largest substructure whose carrier is contained in `keep`. This is what
  // makes erosion exact without enumerating the lattice.
  Sub co_restrict(const IdSet& keep) const;

  // Heyting exponential d^c = sup{e | e ∧ c ≤ d} and the derived complement.
  Sub exponential(const Sub& d, const Sub& c) const;
  Sub complement(const Sub& d) const;
  bool is_boolean() const;

  // Every substructure, deterministic order, bounded by enum_bound (TooLarge).
  std::vector<Sub> enumerate() const;
  void for_each(const std::function<void(const Sub&)>& fn) const;

  // Seeded sampling: independent coin flips per component, then closure
  // repair (edges need endpoints, hyperedges their members, faces their
  // subfaces).
  Sub random_sub(std::mt19937_64& rng) const;

  void check_same_ground(const Sub& d) const;

 private:
  Ground ground_;
  ForgetMode mode_;
  std::uint64_t serial_;
  std::uint64_t bound_;

  std::vector<std::string> prim_list_;  // sorted
  std::vector<std::string> sec_list_;   // sorted tokens

  bool sec_valid_in(const std::string& token, const IdSet& prim) const;
  IdSet induced_sec(const IdSet& prim) const;
  IdSet derive_prim_for_complex(const IdSet& faces) const;
};

}  // namespace morpho

#pragma once

#include <vector>

#include "schemas.hpp"

namespace morpho {

// One line of a Hilbert-style derivation. Rules:
//   axiom        schema id in `schema`, no args
//   premise      args = [k], the k-th premise
//   mp           args = [i, j]: line i the antecedent, line j the implication
//   nec          args = [i], line i premise-free; concludes [] of it
//   mono-box     args = [i], line i an implication x -> y; concludes []x -> []y
//   mono-dia     likewise with <>
struct ProofLine {
  Formula formula;
  std::string rule;
  std::vector<long> args;
  std::string schema;
};

struct Derivation {
  std::vector<Formula> premises;
  std::vector<ProofLine> lines;
  std::string profile = "base";
};

// Classification of an accepted derivation:
//   theorem   conclusion independent of the premises; valid in every model
//   local     premises used, mono only on premise-free lines; certifies
//             premise-conjunction -> conclusion as a theorem
//   global    mono applied to a premise-dependent line; certifies that models
//             validating every premise validate the conclusion
struct ProofResult {
  bool ok = false;
  long failed_line = -1;
  std::string reason;
  std::string classification;
  Formula conclusion;
};

// Never throws for semantic defects (wrong formula, bad reference, unknown
// schema); those come back as rejections with the offending line. Throws only
// for unusable input such as an unknown profile or a null formula.
ProofResult check_derivation(const Derivation& d);

}  // namespace morpho

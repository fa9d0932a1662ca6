#pragma once

#include <memory>

#include "formula.hpp"
#include "morphology.hpp"

namespace morpho {

// A model: lattice + structuring element + valuation. Box evaluates to
// erosion, diamond to dilation, implication to the Heyting exponential.
struct Model {
  std::shared_ptr<const Lattice> lat;
  StructuringElement b;
  std::map<std::string, Sub> valuation;
};

// Rejects non-covered structuring elements unless `unchecked`; the
// anti-extensivity axioms are unsound without cover.
Model make_model(std::shared_ptr<const Lattice> lat, StructuringElement b,
                 std::map<std::string, Sub> valuation, bool unchecked = false);

// Standard Kripke presentation: powerset lattice over the worlds, b(q) = set
// of R-successors of q. Cover means exactly that R is reflexive.
Model kripke_to_model(const IdSet& worlds,
                      const std::vector<std::pair<std::string, std::string>>& relation,
                      const std::map<std::string, IdSet>& valuation, bool unchecked = false);

Sub eval(const Model& m, const Formula& f);
bool satisfies(const Model& m, const Formula& f);

// Finite restriction of semantic entailment: every listed model that
// satisfies all premises must satisfy the conclusion.
bool entails_on_models(const std::vector<Model>& models, const std::vector<Formula>& premises,
                       const Formula& conclusion);

// Axiom-suite validation. Schema metavariables are instantiated with the
// atoms p and q in every combination, then checked over all (or sampled)
// valuations of those atoms.
struct SuiteOptions {
  std::uint64_t exhaustive_limit = 1u << 22;  // max valuation pairs before sampling
  std::uint64_t samples = 400;                // sampled fallback size
  std::uint64_t seed = 0;
};

std::vector<LawReport> validate_axiom_suite(const Model& m, const std::string& profile,
                                            const SuiteOptions& opt = {});

}  // namespace morpho

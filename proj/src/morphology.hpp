#pragma once

#include <optional>

#include "structuring.hpp"

namespace morpho {

// --- normative operators -----------------------------------------------------

// δ[b](d): sup of b over the carrier of d (equal to the definitional inf,
// which the tests re-check by enumeration).
Sub dilate(const Lattice& lat, const StructuringElement& b, const Sub& d);

// ε[b](d): largest substructure all of whose carrier elements v satisfy
// b(v) ≤ d. Exact in every mode, no enumeration.
Sub erode_generic(const Lattice& lat, const StructuringElement& b, const Sub& d);

Sub opening(const Lattice& lat, const StructuringElement& b, const Sub& d);
Sub closing(const Lattice& lat, const StructuringElement& b, const Sub& d);

// --- alternative methods -----------------------------------------------------

// Alternative erosion: seeds with atoms of the passing carrier elements of d,
// then adds b(v) only when every element of b(v)'s carrier also passes.
// Under-approximates the generic erosion on some graph instances; exposed as
// its own method so the divergence stays observable.
Sub erode_paper_algorithm(const Lattice& lat, const StructuringElement& b, const Sub& d);

// Per-structure formula operators. Available for set grounds with any SE and
// otherwise only for the matching builtin; NoClosedForm when absent. Some of
// these deliberately disagree with the generic operators; compare_methods
// reports where.
Sub erode_closed_form(const Lattice& lat, const StructuringElement& b, const Sub& d);
Sub dilate_closed_form(const Lattice& lat, const StructuringElement& b, const Sub& d);
bool has_closed_form(const Lattice& lat, const StructuringElement& b);

// --- law harness -------------------------------------------------------------

struct Sampler {
  bool exhaustive = true;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

struct LawReport {
  std::string law;
  std::string instance;  // human-readable descriptor of lattice/SE under test
  std::string status;    // "holds" | "falsified" | "precondition-unmet"
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::string sampler;  // "exhaustive" | "random"
  std::string note;
  std::vector<std::pair<std::string, Sub>> witness;  // nonempty iff falsified

  bool holds() const { return status == "holds"; }
  bool falsified() const { return status == "falsified"; }
};

const std::vector<std::string>& law_ids();

LawReport check_law(const Lattice& lat, const StructuringElement& b, const std::string& law,
                    const Sampler& sampler);

// --- divergence detection ----------------------------------------------------

struct MethodComparison {
  Sub object;
  // method name -> result; methods that do not apply get a reason instead.
  std::vector<std::pair<std::string, Sub>> erosions;
  std::vector<std::pair<std::string, std::string>> erosions_na;
  std::vector<std::pair<std::string, Sub>> dilations;
  std::vector<std::pair<std::string, std::string>> dilations_na;
  bool all_agree = true;
};

MethodComparison compare_methods(const Lattice& lat, const StructuringElement& b, const Sub& d);

}  // namespace morpho

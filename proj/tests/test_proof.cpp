#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "io.hpp"
#include "proof.hpp"
#include "schemas.hpp"

using namespace morpho;

#ifndef MORPHO_PROOF_DIR
#error "MORPHO_PROOF_DIR must point at the bundled derivations"
#endif

namespace {

Derivation load_proof(const std::string& name) {
  return proof_from_json(load_json_file(std::string(MORPHO_PROOF_DIR) + "/" + name));
}

ProofLine axiom_line(const std::string& formula, const std::string& schema) {
  return ProofLine{parse_formula(formula), "axiom", {}, schema};
}

}  // namespace

TEST_CASE("bundled derivations are accepted with their classifications") {
  {
    Derivation d = load_proof("kripke_schema.json");
    ProofResult r = check_derivation(d);
    REQUIRE(r.ok);
    CHECK(r.failed_line == -1);
    CHECK(r.classification == "theorem");
    CHECK(print_formula(r.conclusion) == "[](p -> q) -> []p -> []q");
  }
  {
    Derivation d = load_proof("adjunction_rule.json");
    ProofResult r = check_derivation(d);
    REQUIRE(r.ok);
    CHECK(r.classification == "global");
    CHECK(print_formula(r.conclusion) == "<>p -> q");
  }
}

TEST_CASE("the bundled conclusions are instances of the registered shapes") {
  const Schema* k = find_schema("kripke-k");
  REQUIRE(k != nullptr);
  CHECK(k->theorem);
  Substitution s{{"A", f_prop("p")}, {"B", f_prop("q")}};
  Formula expect = f_implies(substitute(k->lhs, s), substitute(k->rhs, s));
  CHECK(formula_eq(check_derivation(load_proof("kripke_schema.json")).conclusion, expect));

  const Schema* adj = find_schema("adjunction");
  REQUIRE(adj != nullptr);
  CHECK(adj->theorem);
}

TEST_CASE("classification tracks premise use and modal rules") {
  SUBCASE("axioms alone give a theorem") {
    Derivation d;
    d.lines.push_back(axiom_line("p -> q -> p", "pl-k"));
    ProofResult r = check_derivation(d);
    REQUIRE(r.ok);
    CHECK(r.classification == "theorem");
  }
  SUBCASE("propositional reasoning from premises is local") {
    Derivation d;
    d.premises = {parse_formula("p"), parse_formula("p -> q")};
    d.lines.push_back({parse_formula("p"), "premise", {0}, ""});
    d.lines.push_back({parse_formula("p -> q"), "premise", {1}, ""});
    d.lines.push_back({parse_formula("q"), "mp", {0, 1}, ""});
    ProofResult r = check_derivation(d);
    REQUIRE(r.ok);
    CHECK(r.classification == "local");
    CHECK(print_formula(r.conclusion) == "q");
  }
  SUBCASE("a modal rule on a premise makes the result global") {
    Derivation d;
    d.premises = {parse_formula("p -> q")};
    d.lines.push_back({parse_formula("p -> q"), "premise", {0}, ""});
    d.lines.push_back({parse_formula("[]p -> []q"), "mono-box", {0}, ""});
    ProofResult r = check_derivation(d);
    REQUIRE(r.ok);
    CHECK(r.classification == "global");
  }
  SUBCASE("a tainted side line does not taint an independent conclusion") {
    Derivation d;
    d.premises = {parse_formula("p -> q")};
    d.lines.push_back({parse_formula("p -> q"), "premise", {0}, ""});
    d.lines.push_back({parse_formula("<>p -> <>q"), "mono-dia", {0}, ""});
    d.lines.push_back(axiom_line("p -> q -> p", "pl-k"));
    ProofResult r = check_derivation(d);
    REQUIRE(r.ok);
    CHECK(r.classification == "theorem");
  }
}

TEST_CASE("nec distributes box over proved lines only") {
  Derivation d;
  d.lines.push_back(axiom_line("p -> q -> p", "pl-k"));
  d.lines.push_back({parse_formula("[](p -> q -> p)"), "nec", {0}, ""});
  ProofResult r = check_derivation(d);
  REQUIRE(r.ok);
  CHECK(r.classification == "theorem");

  Derivation bad;
  bad.premises = {parse_formula("p")};
  bad.lines.push_back({parse_formula("p"), "premise", {0}, ""});
  bad.lines.push_back({parse_formula("[]p"), "nec", {0}, ""});
  ProofResult br = check_derivation(bad);
  CHECK_FALSE(br.ok);
  CHECK(br.failed_line == 1);
  CHECK(br.reason == "nec applies only to premise-free lines");
}

TEST_CASE("semantic defects are rejections, not exceptions") {
  auto rejected_at = [](const Derivation& d, long line, const std::string& fragment) {
    ProofResult r = check_derivation(d);
    CHECK_FALSE(r.ok);
    CHECK(r.failed_line == line);
    CHECK(r.reason.find(fragment) != std::string::npos);
    return !r.ok;
  };

  SUBCASE("empty derivation") {
    ProofResult r = check_derivation(Derivation{});
    CHECK_FALSE(r.ok);
    CHECK(r.failed_line == -1);
    CHECK(r.reason == "empty derivation");
  }
  SUBCASE("unknown rule") {
    Derivation d;
    d.lines.push_back({parse_formula("p"), "guess", {}, ""});
    rejected_at(d, 0, "unknown rule");
  }
  SUBCASE("argument arity") {
    Derivation d;
    d.lines.push_back({parse_formula("p -> q -> p"), "axiom", {0}, "pl-k"});
    rejected_at(d, 0, "takes 0 argument(s)");
    Derivation e;
    e.lines.push_back(axiom_line("p -> q -> p", "pl-k"));
    e.lines.push_back({parse_formula("[](p -> q -> p)"), "nec", {0, 0}, ""});
    rejected_at(e, 1, "takes 1 argument(s)");
  }
  SUBCASE("unknown schema") {
    Derivation d;
    d.lines.push_back(axiom_line("p -> p", "pl-frob"));
    rejected_at(d, 0, "unknown schema 'pl-frob'");
  }
  SUBCASE("registered shapes cannot be cited as axioms") {
    Derivation d;
    d.lines.push_back(axiom_line("[](p -> q) -> ([]p -> []q)", "kripke-k"));
    rejected_at(d, 0, "provable shape");
    Derivation e;
    e.lines.push_back(axiom_line("(p -> []q) -> (<>p -> q)", "adjunction"));
    rejected_at(e, 0, "provable shape");
  }
  SUBCASE("profile gates the axiom set") {
    Derivation d;
    d.lines.push_back(axiom_line("![]p -> <>!p", "duality"));
    rejected_at(d, 0, "not available in profile base");
    d.profile = "classical";
    CHECK(check_derivation(d).ok);

    Derivation e;
    e.profile = "s4";
    e.lines.push_back(axiom_line("<>p -> []<>p", "s5"));
    rejected_at(e, 0, "not available in profile s4");
    e.profile = "s5";
    CHECK(check_derivation(e).ok);
  }
  SUBCASE("formula must instantiate the schema") {
    Derivation d;
    d.lines.push_back(axiom_line("p -> q", "pl-k"));
    rejected_at(d, 0, "does not instantiate");
    // Consistent binding: A must map to the same formula at both occurrences.
    Derivation e;
    e.lines.push_back(axiom_line("p -> q -> q", "pl-k"));
    rejected_at(e, 0, "does not instantiate");
  }
  SUBCASE("premise references") {
    Derivation d;
    d.premises = {parse_formula("p")};
    d.lines.push_back({parse_formula("p"), "premise", {1}, ""});
    rejected_at(d, 0, "premise index 1 is out of range");
    Derivation e;
    e.premises = {parse_formula("p")};
    e.lines.push_back({parse_formula("q"), "premise", {0}, ""});
    rejected_at(e, 0, "differs from premise 0");
  }
  SUBCASE("line references stay strictly backward") {
    Derivation d;
    d.lines.push_back(axiom_line("p -> q -> p", "pl-k"));
    d.lines.push_back({parse_formula("[](p -> q -> p)"), "nec", {1}, ""});
    rejected_at(d, 1, "reference to line 1 is out of range");
    d.lines[1].args = {-1};
    rejected_at(d, 1, "reference to line -1 is out of range");
    d.lines[1].args = {7};
    rejected_at(d, 1, "reference to line 7 is out of range");
  }
  SUBCASE("modus ponens shape checks") {
    Derivation d;
    d.premises = {parse_formula("p"), parse_formula("q")};
    d.lines.push_back({parse_formula("p"), "premise", {0}, ""});
    d.lines.push_back({parse_formula("q"), "premise", {1}, ""});
    d.lines.push_back({parse_formula("q"), "mp", {0, 1}, ""});
    rejected_at(d, 2, "line 1 is not an implication");

    Derivation e;
    e.premises = {parse_formula("q"), parse_formula("p -> r")};
    e.lines.push_back({parse_formula("q"), "premise", {0}, ""});
    e.lines.push_back({parse_formula("p -> r"), "premise", {1}, ""});
    e.lines.push_back({parse_formula("r"), "mp", {0, 1}, ""});
    rejected_at(e, 2, "antecedent of line 1 does not match line 0");

    Derivation f;
    f.premises = {parse_formula("p"), parse_formula("p -> r")};
    f.lines.push_back({parse_formula("p"), "premise", {0}, ""});
    f.lines.push_back({parse_formula("p -> r"), "premise", {1}, ""});
    f.lines.push_back({parse_formula("q"), "mp", {0, 1}, ""});
    rejected_at(f, 2, "not the consequent of line 1");
  }
  SUBCASE("nec and mono image shapes") {
    Derivation d;
    d.lines.push_back(axiom_line("p -> q -> p", "pl-k"));
    d.lines.push_back({parse_formula("<>(p -> q -> p)"), "nec", {0}, ""});
    rejected_at(d, 1, "formula is not [] of line 0");

    Derivation e;
    e.premises = {parse_formula("p")};
    e.lines.push_back({parse_formula("p"), "premise", {0}, ""});
    e.lines.push_back({parse_formula("[]p -> []p"), "mono-box", {0}, ""});
    rejected_at(e, 1, "line 0 is not an implication");

    Derivation f;
    f.premises = {parse_formula("p -> q")};
    f.lines.push_back({parse_formula("p -> q"), "premise", {0}, ""});
    f.lines.push_back({parse_formula("[]p -> <>q"), "mono-box", {0}, ""});
    rejected_at(f, 1, "not the []-image of line 0");
    f.lines[1].rule = "mono-dia";
    rejected_at(f, 1, "not the <>-image of line 0");
  }
}

TEST_CASE("unusable input throws instead of rejecting") {
  Derivation d;
  d.profile = "zzz";
  d.lines.push_back(axiom_line("p -> q -> p", "pl-k"));
  try {
    check_derivation(d);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::UnknownName);
  }

  Derivation null_formula;
  null_formula.lines.push_back({nullptr, "axiom", {}, "pl-k"});
  CHECK_THROWS_AS(check_derivation(null_formula), Error);

  Derivation null_premise;
  null_premise.premises = {nullptr};
  null_premise.lines.push_back(axiom_line("p -> q -> p", "pl-k"));
  CHECK_THROWS_AS(check_derivation(null_premise), Error);
}

TEST_CASE("every single-line mutation of the bundled proofs is rejected") {
  int mutations = 0;
  auto expect_rejected = [&](const Derivation& d, const std::string& what) {
    CAPTURE(what);
    CHECK_FALSE(check_derivation(d).ok);
    ++mutations;
  };

  for (const char* name : {"kripke_schema.json", "adjunction_rule.json"}) {
    const Derivation base = load_proof(name);
    const std::string tag = std::string(name) + ": ";

    for (size_t i = 0; i < base.lines.size(); ++i) {
      const ProofLine& ln = base.lines[i];

      // Shift every argument; the cited line no longer fits the rule.
      for (size_t a = 0; a < ln.args.size(); ++a) {
        Derivation d = base;
        d.lines[i].args[a] += 1;
        expect_rejected(d, tag + "line " + std::to_string(i) + " arg +1");
        d = base;
        d.lines[i].args[a] = static_cast<long>(base.lines.size()) + 3;
        expect_rejected(d, tag + "line " + std::to_string(i) + " arg oob");
      }

      // Rename the rule; arity or shape breaks.
      {
        Derivation d = base;
        d.lines[i].rule = ln.rule == "mp" ? "nec" : "mp";
        expect_rejected(d, tag + "line " + std::to_string(i) + " rule rename");
      }

      // Point axiom lines at a different schema.
      if (ln.rule == "axiom") {
        Derivation d = base;
        d.lines[i].schema = ln.schema == "pl-or-left" ? "pl-or-right" : "pl-or-left";
        expect_rejected(d, tag + "line " + std::to_string(i) + " schema swap");
      }

      // Replace the formula with a neighbor's; the justification no longer
      // derives it.
      if (i + 1 < base.lines.size()) {
        Derivation d = base;
        d.lines[i].formula = base.lines[i + 1].formula;
        expect_rejected(d, tag + "line " + std::to_string(i) + " formula swap");
      }
    }

    if (!base.premises.empty()) {
      Derivation d = base;
      d.premises.clear();
      expect_rejected(d, tag + "premises dropped");
    }
  }
  CHECK(mutations >= 50);
  MESSAGE("mutations tried: ", mutations);
}

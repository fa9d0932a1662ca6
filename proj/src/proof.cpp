#include "proof.hpp"

namespace morpho {

ProofResult check_derivation(const Derivation& d) {
  profile_schemas(d.profile);  // throws on unknown profile
  for (const auto& p : d.premises)
    if (!p) fail(Errc::BadInput, "null premise");

  ProofResult res;
  if (d.lines.empty()) {
    res.reason = "empty derivation";
    return res;
  }

  std::vector<bool> depends(d.lines.size(), false);
  std::vector<bool> tainted(d.lines.size(), false);

  for (size_t n = 0; n < d.lines.size(); ++n) {
    const ProofLine& ln = d.lines[n];
    auto reject = [&](const std::string& why) {
      res.failed_line = static_cast<long>(n);
      res.reason = why;
    };
    if (!ln.formula) fail(Errc::BadInput, "null formula on line " + std::to_string(n));

    auto line_ref = [&](long i) -> const ProofLine* {
      if (i < 0 || static_cast<size_t>(i) >= n) {
        reject("reference to line " + std::to_string(i) + " is out of range");
        return nullptr;
      }
      return &d.lines[static_cast<size_t>(i)];
    };
    auto want_args = [&](size_t k) {
      if (ln.args.size() == k) return true;
      reject(ln.rule + " takes " + std::to_string(k) + " argument(s)");
      return false;
    };

    if (ln.rule == "axiom") {
      if (!want_args(0)) return res;
      const Schema* s = find_schema(ln.schema);
      if (!s) {
        reject("unknown schema '" + ln.schema + "'");
        return res;
      }
      if (s->theorem) {
        reject("schema '" + ln.schema + "' names a provable shape, not an axiom");
        return res;
      }
      if (!axiom_allowed(ln.schema, d.profile)) {
        reject("schema '" + ln.schema + "' is not available in profile " + d.profile);
        return res;
      }
      if (!match_axiom(ln.schema, ln.formula)) {
        reject("formula does not instantiate schema '" + ln.schema + "'");
        return res;
      }
    } else if (ln.rule == "premise") {
      if (!want_args(1)) return res;
      long k = ln.args[0];
      if (k < 0 || static_cast<size_t>(k) >= d.premises.size()) {
        reject("premise index " + std::to_string(k) + " is out of range");
        return res;
      }
      if (!formula_eq(ln.formula, d.premises[static_cast<size_t>(k)])) {
        reject("formula differs from premise " + std::to_string(k));
        return res;
      }
      depends[n] = true;
    } else if (ln.rule == "mp") {
      if (!want_args(2)) return res;
      const ProofLine* ante = line_ref(ln.args[0]);
      if (!ante) return res;
      const ProofLine* imp = line_ref(ln.args[1]);
      if (!imp) return res;
      if (imp->formula->conn != Conn::Implies) {
        reject("line " + std::to_string(ln.args[1]) + " is not an implication");
        return res;
      }
      if (!formula_eq(imp->formula->a, ante->formula)) {
        reject("antecedent of line " + std::to_string(ln.args[1]) +
               " does not match line " + std::to_string(ln.args[0]));
        return res;
      }
      if (!formula_eq(ln.formula, imp->formula->b)) {
        reject("formula is not the consequent of line " + std::to_string(ln.args[1]));
        return res;
      }
      depends[n] = depends[static_cast<size_t>(ln.args[0])] ||
                   depends[static_cast<size_t>(ln.args[1])];
      tainted[n] = tainted[static_cast<size_t>(ln.args[0])] ||
                   tainted[static_cast<size_t>(ln.args[1])];
    } else if (ln.rule == "nec") {
      if (!want_args(1)) return res;
      const ProofLine* src = line_ref(ln.args[0]);
      if (!src) return res;
      if (depends[static_cast<size_t>(ln.args[0])]) {
        reject("nec applies only to premise-free lines");
        return res;
      }
      if (ln.formula->conn != Conn::Box || !formula_eq(ln.formula->a, src->formula)) {
        reject("formula is not [] of line " + std::to_string(ln.args[0]));
        return res;
      }
    } else if (ln.rule == "mono-box" || ln.rule == "mono-dia") {
      if (!want_args(1)) return res;
      const ProofLine* src = line_ref(ln.args[0]);
      if (!src) return res;
      if (src->formula->conn != Conn::Implies) {
        reject("line " + std::to_string(ln.args[0]) + " is not an implication");
        return res;
      }
      const bool box = ln.rule == "mono-box";
      Formula want = box ? f_implies(f_box(src->formula->a), f_box(src->formula->b))
                         : f_implies(f_dia(src->formula->a), f_dia(src->formula->b));
      if (!formula_eq(ln.formula, want)) {
        reject("formula is not the " + std::string(box ? "[]" : "<>") +
               "-image of line " + std::to_string(ln.args[0]));
        return res;
      }
      if (depends[static_cast<size_t>(ln.args[0])]) {
        depends[n] = true;
        tainted[n] = true;
      }
    } else {
      reject("unknown rule '" + ln.rule + "'");
      return res;
    }
  }

  res.ok = true;
  res.conclusion = d.lines.back().formula;
  if (!depends.back())
    res.classification = "theorem";
  else if (!tainted.back())
    res.classification = "local";
  else
    res.classification = "global";
  return res;
}

}  // namespace morpho

#include "schemas.hpp"

#include <algorithm>

namespace morpho {

namespace {

Formula A() { return f_meta("A"); }
Formula B() { return f_meta("B"); }
Formula C() { return f_meta("C"); }

std::vector<Schema> build_registry() {
  std::vector<Schema> r;
  auto ax = [&r](const std::string& id, Formula l, Formula rht, bool iff = false) {
    r.push_back(Schema{id, iff, std::move(l), std::move(rht), false});
  };

  // Preservation, commutativity, anti-extensivity, extensivity.
  ax("dia-bot", f_dia(f_bot()), f_bot(), true);
  ax("box-top", f_box(f_top()), f_top(), true);
  ax("box-and", f_box(f_and(A(), B())), f_and(f_box(A()), f_box(B())), true);
  ax("dia-or", f_dia(f_or(A(), B())), f_or(f_dia(A()), f_dia(B())), true);
  ax("box-elim", f_box(A()), A());
  ax("dia-box-elim", f_dia(f_box(A())), A());
  ax("dia-intro", A(), f_dia(A()));
  ax("box-dia-intro", A(), f_box(f_dia(A())));

  // Intuitionistic propositional basis plus implication composition.
  ax("pl-k", A(), f_implies(B(), A()));
  ax("pl-s", f_implies(A(), B()),
     f_implies(f_implies(A(), f_implies(B(), C())), f_implies(A(), C())));
  ax("pl-and-intro", A(), f_implies(B(), f_and(A(), B())));
  ax("pl-and-left", f_and(A(), B()), A());
  ax("pl-and-right", f_and(A(), B()), B());
  ax("pl-or-left", A(), f_or(A(), B()));
  ax("pl-or-right", B(), f_or(A(), B()));
  ax("pl-or-elim", f_implies(A(), C()),
     f_implies(f_implies(B(), C()), f_implies(f_or(A(), B()), C())));
  ax("pl-neg-intro", f_implies(A(), B()),
     f_implies(f_implies(A(), f_not(B())), f_not(A())));
  ax("pl-neg-elim", f_not(A()), f_implies(A(), B()));
  ax("pl-chain", f_implies(A(), B()),
     f_implies(f_implies(B(), C()), f_implies(A(), C())));

  // Extensions, enabled per profile.
  ax("s4", f_box(A()), f_box(f_box(A())));
  ax("b", A(), f_box(f_dia(A())));
  ax("s5", f_dia(A()), f_box(f_dia(A())));
  ax("duality", f_not(f_box(A())), f_dia(f_not(A())), true);

  // Registered as provable shapes: citing them as axioms is rejected, the
  // bundled derivations establish them instead.
  r.push_back(Schema{"kripke-k", false, f_box(f_implies(A(), B())),
                     f_implies(f_box(A()), f_box(B())), true});
  r.push_back(Schema{"adjunction", false, f_implies(A(), f_box(B())),
                     f_implies(f_dia(A()), B()), true});
  return r;
}

const std::vector<std::string> kBaseIds = {
    "dia-bot", "box-top", "box-and", "dia-or", "box-elim", "dia-box-elim",
    "dia-intro", "box-dia-intro",
    "pl-k", "pl-s", "pl-and-intro", "pl-and-left", "pl-and-right",
    "pl-or-left", "pl-or-right", "pl-or-elim", "pl-neg-intro", "pl-neg-elim",
    "pl-chain"};

bool unify(const Formula& pattern, const Formula& f, Substitution& s) {
  if (pattern->conn == Conn::Meta) {
    auto it = s.find(pattern->name);
    if (it == s.end()) {
      s.emplace(pattern->name, f);
      return true;
    }
    return formula_eq(it->second, f);
  }
  if (pattern->conn != f->conn || pattern->name != f->name) return false;
  if (pattern->a && !unify(pattern->a, f->a, s)) return false;
  if (pattern->b && !unify(pattern->b, f->b, s)) return false;
  return true;
}

}  // namespace

const std::vector<Schema>& schema_registry() {
  static const std::vector<Schema> reg = build_registry();
  return reg;
}

const Schema* find_schema(const std::string& id) {
  for (const auto& s : schema_registry())
    if (s.id == id) return &s;
  return nullptr;
}

std::vector<std::string> profile_schemas(const std::string& profile) {
  std::vector<std::string> ids = kBaseIds;
  if (profile == "base") return ids;
  if (profile == "s4") ids.push_back("s4");
  else if (profile == "b") ids.push_back("b");
  else if (profile == "s5") ids.push_back("s5");
  else if (profile == "classical") ids.push_back("duality");
  else fail(Errc::UnknownName, "unknown profile '" + profile + "'");
  return ids;
}

bool axiom_allowed(const std::string& id, const std::string& profile) {
  auto ids = profile_schemas(profile);
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::vector<Formula> schema_directions(const Schema& s) {
  std::vector<Formula> dirs{f_implies(s.lhs, s.rhs)};
  if (s.iff) dirs.push_back(f_implies(s.rhs, s.lhs));
  return dirs;
}

std::optional<Substitution> match_axiom(const std::string& id, const Formula& f) {
  const Schema* s = find_schema(id);
  if (!s) fail(Errc::UnknownSchema, "unknown schema '" + id + "'");
  if (s->theorem) return std::nullopt;

  std::vector<Formula> candidates = schema_directions(*s);
  if (s->iff)
    candidates.push_back(
        f_and(f_implies(s->lhs, s->rhs), f_implies(s->rhs, s->lhs)));
  for (const auto& cand : candidates) {
    Substitution subst;
    if (unify(cand, f, subst)) return subst;
  }
  return std::nullopt;
}

Formula substitute(const Formula& pattern, const Substitution& s) {
  switch (pattern->conn) {
    case Conn::Meta: {
      auto it = s.find(pattern->name);
      if (it == s.end()) fail(Errc::UnknownName, "unbound metavariable " + pattern->name);
      return it->second;
    }
    case Conn::Top:
    case Conn::Bot:
    case Conn::Prop:
      return pattern;
    case Conn::Not: return f_not(substitute(pattern->a, s));
    case Conn::Box: return f_box(substitute(pattern->a, s));
    case Conn::Diamond: return f_dia(substitute(pattern->a, s));
    case Conn::And: return f_and(substitute(pattern->a, s), substitute(pattern->b, s));
    case Conn::Or: return f_or(substitute(pattern->a, s), substitute(pattern->b, s));
    case Conn::Implies:
      return f_implies(substitute(pattern->a, s), substitute(pattern->b, s));
  }
  fail(Errc::UnknownName, "bad pattern");
}

}  // namespace morpho

#pragma once

#include <memory>
#include <string>

#include "core.hpp"

namespace morpho {

enum class Conn { Top, Bot, Prop, Meta, Not, And, Or, Implies, Box, Diamond };

struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

// Immutable AST. Meta nodes are pattern variables used by axiom schemas; the
// parser never produces them.
struct FormulaNode {
  Conn conn;
  std::string name;  // Prop / Meta
  Formula a, b;
};

Formula f_top();
Formula f_bot();
Formula f_prop(const std::string& name);
Formula f_meta(const std::string& name);
Formula f_not(Formula x);
Formula f_and(Formula x, Formula y);
Formula f_or(Formula x, Formula y);
Formula f_implies(Formula x, Formula y);
Formula f_box(Formula x);
Formula f_dia(Formula x);

bool formula_eq(const Formula& x, const Formula& y);

// Concrete syntax: T, F, identifiers, !, &, |, ->, [] and <>, parentheses.
// Unary operators bind tightest, then &, then |, then right-associative ->.
Formula parse_formula(const std::string& text);

// Minimal parentheses, single spaces around binary operators;
// parse(print(f)) == f.
std::string print_formula(const Formula& f);

}  // namespace morpho

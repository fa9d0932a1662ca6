#include "formula.hpp"

#include <cctype>

namespace morpho {

namespace {
Formula node(Conn c, std::string name, Formula a, Formula b) {
  return std::make_shared<FormulaNode>(FormulaNode{c, std::move(name), std::move(a), std::move(b)});
}
}  // namespace

Formula f_top() { return node(Conn::Top, "", nullptr, nullptr); }
Formula f_bot() { return node(Conn::Bot, "", nullptr, nullptr); }
Formula f_prop(const std::string& name) { return node(Conn::Prop, name, nullptr, nullptr); }
Formula f_meta(const std::string& name) { return node(Conn::Meta, name, nullptr, nullptr); }
Formula f_not(Formula x) { return node(Conn::Not, "", std::move(x), nullptr); }
Formula f_and(Formula x, Formula y) { return node(Conn::And, "", std::move(x), std::move(y)); }
Formula f_or(Formula x, Formula y) { return node(Conn::Or, "", std::move(x), std::move(y)); }
Formula f_implies(Formula x, Formula y) {
  return node(Conn::Implies, "", std::move(x), std::move(y));
}
Formula f_box(Formula x) { return node(Conn::Box, "", std::move(x), nullptr); }
Formula f_dia(Formula x) { return node(Conn::Diamond, "", std::move(x), nullptr); }

bool formula_eq(const Formula& x, const Formula& y) {
  if (x == y) return true;
  if (!x || !y) return false;
  if (x->conn != y->conn || x->name != y->name) return false;
  return formula_eq(x->a, y->a) && formula_eq(x->b, y->b);
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  [[noreturn]] void err(const std::string& what) {
    fail(Errc::ParseError, "at position " + std::to_string(pos) + ": " + what);
  }

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n' || s[pos] == '\r'))
      ++pos;
  }

  bool eat(const std::string& tok) {
    skip_ws();
    if (s.compare(pos, tok.size(), tok) == 0) {
      pos += tok.size();
      return true;
    }
    return false;
  }

  bool peek_ident_start() {
    skip_ws();
    return pos < s.size() &&
           (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_');
  }

  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                              s[pos] == '_' || s[pos] == '\''))
      ++pos;
    if (start == pos) err("expected an identifier");
    return s.substr(start, pos - start);
  }

  Formula parse_implies() {
    Formula l = parse_or();
    if (eat("->")) return f_implies(std::move(l), parse_implies());
    return l;
  }

  Formula parse_or() {
    Formula l = parse_and();
    while (true) {
      skip_ws();
      if (pos < s.size() && s[pos] == '|') {
        ++pos;
        l = f_or(std::move(l), parse_and());
      } else {
        return l;
      }
    }
  }

  Formula parse_and() {
    Formula l = parse_unary();
    while (eat("&")) l = f_and(std::move(l), parse_unary());
    return l;
  }

  Formula parse_unary() {
    if (eat("!")) return f_not(parse_unary());
    if (eat("[]")) return f_box(parse_unary());
    if (eat("<>")) return f_dia(parse_unary());
    return parse_atom();
  }

  Formula parse_atom() {
    if (eat("(")) {
      Formula f = parse_implies();
      if (!eat(")")) err("expected ')'");
      return f;
    }
    if (!peek_ident_start()) err("expected a formula");
    std::string id = ident();
    if (id == "T") return f_top();
    if (id == "F") return f_bot();
    return f_prop(id);
  }

  Formula run() {
    Formula f = parse_implies();
    skip_ws();
    if (pos != s.size()) err("unexpected trailing input");
    return f;
  }
};

// Precedence for printing: -> is 1 (right-assoc), | is 2, & is 3, unary 4,
// leaves 5. A left-assoc child needs parentheses on the right at equal
// precedence; -> needs them on the left.
int prec(const Formula& f) {
  switch (f->conn) {
    case Conn::Implies: return 1;
    case Conn::Or: return 2;
    case Conn::And: return 3;
    case Conn::Not:
    case Conn::Box:
    case Conn::Diamond: return 4;
    default: return 5;
  }
}

void print_rec(const Formula& f, std::string& out) {
  auto wrap = [&](const Formula& g, int need) {
    if (prec(g) < need) {
      out += "(";
      print_rec(g, out);
      out += ")";
    } else {
      print_rec(g, out);
    }
  };
  switch (f->conn) {
    case Conn::Top: out += "T"; return;
    case Conn::Bot: out += "F"; return;
    case Conn::Prop: out += f->name; return;
    case Conn::Meta: out += "?" + f->name; return;  // never produced by printing parsed input
    case Conn::Not:
      out += "!";
      wrap(f->a, 4);
      return;
    case Conn::Box:
      out += "[]";
      wrap(f->a, 4);
      return;
    case Conn::Diamond:
      out += "<>";
      wrap(f->a, 4);
      return;
    case Conn::And:
      wrap(f->a, 3);
      out += " & ";
      wrap(f->b, 4);
      return;
    case Conn::Or:
      wrap(f->a, 2);
      out += " | ";
      wrap(f->b, 3);
      return;
    case Conn::Implies:
      wrap(f->a, 2);  // a nested -> on the left must be parenthesized
      out += " -> ";
      wrap(f->b, 1);
      return;
  }
}

}  // namespace

Formula parse_formula(const std::string& text) {
  Parser p{text};
  return p.run();
}

std::string print_formula(const Formula& f) {
  std::string out;
  print_rec(f, out);
  return out;
}

}  // namespace morpho

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posetpoly/family.hpp"
#include "posetpoly/poset.hpp"

namespace posetpoly {

// Poset expressions:
//
//   program := { "let" IDENT "=" expr ";" } expr
//   expr    := term { "<" term }          ordinal sum, left associative
//   term    := atom { "+" atom }          disjoint union, left associative
//   atom    := "chain(" INT ")" | "antichain(" INT ")" | "op(" expr ")"
//            | IDENT | "(" expr ")" | "{" labels ";" covers "}"
//   labels  := [ label { "," label } ]
//   covers  := [ label "<" label { "<" label } { "," ... } ]
//
// "+" binds tighter than "<", so "a + b < c" is (a + b) < c. Inside a
// literal, "a < b < c" lists the relations a < b and b < c.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Chain, Antichain, Op, OrdinalSum, DisjointUnion, Literal, Ref };

  Kind kind = Kind::Chain;
  int count = 0;                 // Chain, Antichain
  ExprPtr lhs;                   // Op operand, binary left
  ExprPtr rhs;                   // binary right
  std::vector<std::string> labels;                            // Literal
  std::vector<std::pair<std::string, std::string>> covers;    // Literal
  std::string name;              // Ref

  static ExprPtr chain(int n);
  static ExprPtr antichain(int n);
  static ExprPtr op(ExprPtr e);
  static ExprPtr ordinal(ExprPtr a, ExprPtr b);
  static ExprPtr disjoint(ExprPtr a, ExprPtr b);
  static ExprPtr literal(std::vector<std::string> labels,
                         std::vector<std::pair<std::string, std::string>> covers);
  static ExprPtr ref(std::string name);
};

// Structural equality.
bool operator==(const Expr& a, const Expr& b);

struct Program {
  std::vector<std::pair<std::string, ExprPtr>> bindings;
  ExprPtr body;
};

bool operator==(const Program& a, const Program& b);

// Throws ParseError (with line and column) or UnboundRefError.
Program parse_program(std::string_view src);

// Canonical text; parse_program(print(p)) == p.
std::string print(const Expr& e);
std::string print(const Program& p);

Poset evaluate(const Program& p);
Poset evaluate(std::string_view src);

// Decomposition tree following the shape of the expression. Literal leaves
// that are not X-free are decomposed canonically; returns nullopt if one of
// them is not in the family.
std::optional<DecompositionTree> expression_tree(const Program& p);

}  // namespace posetpoly

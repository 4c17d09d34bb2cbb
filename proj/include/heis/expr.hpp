#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "heis/morphism.hpp"
#include "heis/oracle.hpp"
#include "heis/slices.hpp"
#include "heis/word.hpp"

namespace heis {

/// Lexical or grammatical failure, with a 0-based input position.
struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)),
        position(pos) {}
};

/// Well-formed syntax whose inferred boundary words do not match.
struct TypeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Atom outside the restricted fragment evaluated in restricted mode.
struct NonRestrictedAtom : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Typed abstract syntax: atoms and identities combined by vertical ('.')
/// and horizontal ('*') composition, integer scalars, and formal sums.
struct Expr {
  enum class Kind { Atom, Id, VComp, HComp, Sum, Scalar };

  Kind kind = Kind::Id;
  Gen atom = Gen::S;                   // Atom
  Word word;                           // Id
  std::shared_ptr<const Expr> lhs, rhs;  // binary nodes
  long long scalar = 1;                // Scalar; Sum: +1 or -1 weight of rhs

  Word source;  // inferred typing
  Word target;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Recursive descent over: expr := vcomp (('+'|'-') vcomp)*;
/// vcomp := hcomp ('.' hcomp)*, left operand on top; hcomp := prim ('*'
/// prim)*; prim := INT prim | ATOM | id:WORD | '(' expr ')'. Atoms are
/// s, t, t' (alias tp), c, c', d, d', x.
ExprPtr parse_expr(const std::string& text);

/// Minimal-parenthesis printing; parse(print(e)) is structurally equal.
std::string print_expr(const ExprPtr& e);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

/// Restricted-engine evaluation; atoms s, c', d, x raise NonRestrictedAtom.
Morphism evaluate(const ExprPtr& e);

/// Oracle evaluation at base level n, with optional identity framing.
oracle::SparseMat evaluate_oracle(const ExprPtr& e, int n,
                                  const Word& frame_left = {},
                                  const Word& frame_right = {});

}  // namespace heis

#pragma once

// A small language for linear relations between means.
//
//   relation := expr (('<=' | '>=' | '==') expr)+
//   expr     := term (('+' | '-') term)*
//   term     := factor (('*' | '/') factor)*
//   factor   := rational | atom | '(' expr ')'
//   atom     := H | G | N | A | R | S | C | Delta | hel
//             | 'D' '(' mean ',' mean ')' | 'Gini' '(' signed ',' signed ')'
//   rational := integer ('/' integer)? | decimal
//
// A relation with more than one operator is a chain; each adjacent pair is a
// separate link. Every term has at most one non-constant factor, and divisors
// are nonzero constants, so relations stay linear in the atoms. Literals are
// exact rationals until evaluation.

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "meanforge/means.hpp"
#include "meanforge/rational.hpp"

namespace meanforge {

class Expr {
 public:
  enum class Kind { Literal, Mean, Delta, Hel, Difference, Gini, Add, Sub, Mul, Div };

  static Expr literal(Rational value);
  static Expr mean(MeanKind kind);
  static Expr delta();
  static Expr hel();
  static Expr difference(DifferencePair pair);
  static Expr gini(Rational r, Rational s);
  /// Throws DomainError when the result would not be linear: a product of two
  /// non-constant operands, a non-constant divisor, or a zero divisor.
  static Expr binary(Kind op, Expr lhs, Expr rhs);

  Kind kind() const noexcept;
  bool is_binary() const noexcept;
  /// True when the expression contains no atoms.
  bool is_constant() const noexcept;

  const Rational& value() const;          // Literal
  MeanKind mean_kind() const;             // Mean
  const DifferencePair& pair() const;     // Difference
  const Rational& gini_r() const;         // Gini
  const Rational& gini_s() const;         // Gini
  const Expr& lhs() const;                // binary
  const Expr& rhs() const;                // binary

  /// Exact value of a constant expression.
  Rational fold() const;

  /// Structural equality.
  friend bool operator==(const Expr& x, const Expr& y);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

enum class RelOp { LessEqual, GreaterEqual, Equal };

std::string_view rel_op_text(RelOp op) noexcept;

/// operands.size() == ops.size() + 1 >= 2.
struct Relation {
  std::vector<Expr> operands;
  std::vector<RelOp> ops;

  Relation(std::vector<Expr> operands, std::vector<RelOp> ops);
  Relation(Expr lhs, RelOp op, Expr rhs);

  std::size_t links() const noexcept { return ops.size(); }
  bool is_equality() const noexcept;

  friend bool operator==(const Relation&, const Relation&) = default;
};

Relation parse_relation(std::string_view text);
Expr parse_expr(std::string_view text);
/// A relation if the text has a comparison operator, otherwise an expression.
std::variant<Relation, Expr> parse(std::string_view text);

double evaluate(const Expr& e, const PositivePair& p);

std::string pretty(const Expr& e);
std::string pretty(const Relation& r);

}  // namespace meanforge

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pk/polyhedra.hpp"

namespace pk::notation {

enum class TokenKind {
  Integer,  // nonzero, sign fused in when '-' precedes a digit
  Zero,
  Pre,      // the letter i
  Star,
  Dot,
  Colon,
  Comma,
  Plus,
  Minus,    // reflection
  Caret,
  LParen,
  RParen,
  Space,    // juxtaposition (product)
};

struct Token {
  TokenKind kind;
  long value = 0;
  std::size_t position = 0;

  friend bool operator==(const Token& a, const Token& b) {
    return a.kind == b.kind && a.value == b.value;
  }
};

std::vector<Token> tokenize(std::string_view source);

/// Kind of an elementary tangle.
enum class Elementary { Zero, Pos, Neg, Pre };

/// Abstract syntax of an extended Conway symbol.
///
/// Twists with count 1 are normalised to the corresponding elementary
/// tangle, and an integer tangle n (|n| >= 2) is Twist(Pos/Neg, |n|).
struct ConwayExpr {
  enum class Op { Elementary, Twist, Product, Sum, Ramification, Reflect, Polyhedral };

  Op op = Op::Elementary;
  Elementary kind = Elementary::Pos;  // Elementary, Twist
  int count = 1;                      // Twist
  int vertices = 0;                   // Polyhedral
  int stars = 0;                      // Polyhedral
  std::vector<ConwayExpr> children;   // operands, ramification list, slots

  static ConwayExpr elementary(Elementary k);
  static ConwayExpr twist(Elementary k, int count);
  static ConwayExpr product(ConwayExpr left, ConwayExpr right);
  static ConwayExpr sum(ConwayExpr left, ConwayExpr right);
  static ConwayExpr ramification(std::vector<ConwayExpr> items);
  static ConwayExpr reflect(ConwayExpr inner);
  static ConwayExpr polyhedral(int vertices, int stars, std::vector<ConwayExpr> slots);

  bool isPolyhedral() const { return op == Op::Polyhedral; }
  bool isOne() const { return op == Op::Elementary && kind == Elementary::Pos; }

  friend bool operator==(const ConwayExpr&, const ConwayExpr&) = default;
};

ConwayExpr parse(const std::vector<Token>& tokens,
                 const PolyhedronRegistry& registry = PolyhedronRegistry::builtin());

/// tokenize + parse.
ConwayExpr parse(std::string_view source,
                 const PolyhedronRegistry& registry = PolyhedronRegistry::builtin());

/// Symbol text. Unreduced output spells out every polyhedron slot;
/// reduced output uses colons and drops trailing 1 slots.
std::string render(const ConwayExpr& expr, bool reduced = false);

/// S-expression summary, e.g. "(ram (pre) (twist pos 2))".
std::string summary(const ConwayExpr& expr);

/// Number of precrossings the expression will produce.
int precrossingCount(const ConwayExpr& expr);

}  // namespace pk::notation

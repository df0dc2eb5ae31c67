#include "pk/notation.hpp"

#include <cctype>
#include <limits>
#include <optional>
#include <utility>

#include "pk/error.hpp"

namespace pk::notation {

ConwayExpr ConwayExpr::elementary(Elementary k) {
  ConwayExpr e;
  e.op = Op::Elementary;
  e.kind = k;
  return e;
}

ConwayExpr ConwayExpr::twist(Elementary k, int count) {
  if (count < 1 || k == Elementary::Zero) {
    throw Error(ErrorKind::UnexpectedToken, "twists need a crossing kind and a positive length");
  }
  if (count == 1) return elementary(k);
  ConwayExpr e;
  e.op = Op::Twist;
  e.kind = k;
  e.count = count;
  return e;
}

ConwayExpr ConwayExpr::product(ConwayExpr left, ConwayExpr right) {
  ConwayExpr e;
  e.op = Op::Product;
  e.children.push_back(std::move(left));
  e.children.push_back(std::move(right));
  return e;
}

ConwayExpr ConwayExpr::sum(ConwayExpr left, ConwayExpr right) {
  ConwayExpr e;
  e.op = Op::Sum;
  e.children.push_back(std::move(left));
  e.children.push_back(std::move(right));
  return e;
}

ConwayExpr ConwayExpr::ramification(std::vector<ConwayExpr> items) {
  ConwayExpr e;
  e.op = Op::Ramification;
  e.children = std::move(items);
  return e;
}

ConwayExpr ConwayExpr::reflect(ConwayExpr inner) {
  ConwayExpr e;
  e.op = Op::Reflect;
  e.children.push_back(std::move(inner));
  return e;
}

ConwayExpr ConwayExpr::polyhedral(int vertices, int stars, std::vector<ConwayExpr> slots) {
  ConwayExpr e;
  e.op = Op::Polyhedral;
  e.vertices = vertices;
  e.stars = stars;
  e.children = std::move(slots);
  return e;
}

// ---------------------------------------------------------------------------
// Tokenizer

std::vector<Token> tokenize(std::string_view source) {
  std::vector<Token> out;
  auto push = [&](TokenKind kind, std::size_t pos, long value = 0) {
    if (kind == TokenKind::Space) {
      if (out.empty() || out.back().kind == TokenKind::Space) return;
    }
    out.push_back(Token{kind, value, pos});
  };
  auto readNumber = [&](std::size_t& i) {
    long value = 0;
    while (i < source.size() && std::isdigit(static_cast<unsigned char>(source[i]))) {
      if (value > (std::numeric_limits<int>::max() - 9) / 10) {
        throw Error(ErrorKind::UnexpectedToken, "integer too large", i);
      }
      value = value * 10 + (source[i] - '0');
      ++i;
    }
    return value;
  };

  std::size_t i = 0;
  while (i < source.size()) {
    const std::size_t pos = i;
    const char c = source[i];
    // U+2212 MINUS SIGN in UTF-8
    const bool unicodeMinus = source.substr(i, 3) == "\xE2\x88\x92";
    if (c == ' ' || c == '\t') {
      push(TokenKind::Space, pos);
      ++i;
    } else if (c == '\\' && i + 1 < source.size() && source[i + 1] == ',') {
      push(TokenKind::Space, pos);
      i += 2;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      const long v = readNumber(i);
      push(v == 0 ? TokenKind::Zero : TokenKind::Integer, pos, v);
    } else if (c == '-' || unicodeMinus) {
      i += unicodeMinus ? 3 : 1;
      if (i < source.size() && std::isdigit(static_cast<unsigned char>(source[i])) &&
          source[i] != '0') {
        push(TokenKind::Integer, pos, -readNumber(i));
      } else {
        push(TokenKind::Minus, pos);
      }
    } else if (c == '^') {
      push(TokenKind::Caret, pos);
      ++i;
      // Accept LaTeX-style exponents: i^{3}
      if (i < source.size() && source[i] == '{') {
        const std::size_t open = i++;
        if (i >= source.size() || !std::isdigit(static_cast<unsigned char>(source[i]))) {
          throw Error(ErrorKind::UnexpectedToken, "expected an exponent", i);
        }
        const std::size_t numPos = i;
        const long v = readNumber(i);
        if (i >= source.size() || source[i] != '}') {
          throw Error(ErrorKind::UnbalancedParenthesis, "unterminated exponent", open);
        }
        ++i;
        push(v == 0 ? TokenKind::Zero : TokenKind::Integer, numPos, v);
      }
    } else {
      TokenKind kind;
      switch (c) {
        case 'i': kind = TokenKind::Pre; break;
        case '*': kind = TokenKind::Star; break;
        case '.': kind = TokenKind::Dot; break;
        case ':': kind = TokenKind::Colon; break;
        case ',': kind = TokenKind::Comma; break;
        case '+': kind = TokenKind::Plus; break;
        case '(': kind = TokenKind::LParen; break;
        case ')': kind = TokenKind::RParen; break;
        default:
          throw Error(ErrorKind::UnknownCharacter,
                      std::string("unexpected character '") + c + "'", pos);
      }
      push(kind, pos);
      ++i;
    }
  }
  while (!out.empty() && out.back().kind == TokenKind::Space) out.pop_back();
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

bool startsPrimary(TokenKind k) {
  return k == TokenKind::Integer || k == TokenKind::Zero || k == TokenKind::Pre ||
         k == TokenKind::Minus || k == TokenKind::LParen;
}

class Parser {
 public:
  Parser(const std::vector<Token>& tokens, std::size_t begin, std::size_t end,
         std::size_t endPosition)
      : tokens_(tokens), pos_(begin), end_(end), endPosition_(endPosition) {}

  ConwayExpr parseAll() {
    skipSpaces();
    ConwayExpr e = parseRamification();
    skipSpaces();
    if (!atEnd()) {
      if (peek().kind == TokenKind::RParen) {
        throw Error(ErrorKind::UnbalancedParenthesis, "unmatched ')'", peek().position);
      }
      throw Error(ErrorKind::UnexpectedToken, "unexpected token", peek().position);
    }
    return e;
  }

 private:
  bool atEnd() const { return pos_ >= end_; }
  const Token& peek() const { return tokens_[pos_]; }
  std::size_t here() const { return atEnd() ? endPosition_ : peek().position; }
  bool check(TokenKind k) const { return !atEnd() && peek().kind == k; }
  void skipSpaces() {
    while (check(TokenKind::Space)) ++pos_;
  }

  ConwayExpr parseRamification() {
    std::vector<ConwayExpr> items;
    items.push_back(parseSum());
    skipSpaces();
    while (check(TokenKind::Comma)) {
      ++pos_;
      skipSpaces();
      items.push_back(parseSum());
      skipSpaces();
    }
    if (items.size() == 1) return std::move(items.front());
    return ConwayExpr::ramification(std::move(items));
  }

  ConwayExpr parseSum() {
    ConwayExpr left = parseProduct();
    skipSpaces();
    while (check(TokenKind::Plus)) {
      ++pos_;
      skipSpaces();
      left = ConwayExpr::sum(std::move(left), parseProduct());
      skipSpaces();
    }
    return left;
  }

  ConwayExpr parseProduct() {
    ConwayExpr left = parseUnary();
    for (;;) {
      const std::size_t save = pos_;
      skipSpaces();
      if (atEnd() || !startsPrimary(peek().kind)) {
        pos_ = save;
        return left;
      }
      left = ConwayExpr::product(std::move(left), parseUnary());
    }
  }

  ConwayExpr parseUnary() {
    if (check(TokenKind::Minus)) {
      ++pos_;
      return ConwayExpr::reflect(parseUnary());
    }
    return parsePower();
  }

  ConwayExpr parsePower() {
    const std::size_t atomPos = here();
    ConwayExpr base = parseAtom();
    if (!check(TokenKind::Caret)) return base;
    ++pos_;
    if (!check(TokenKind::Integer) || peek().value < 1) {
      throw Error(ErrorKind::UnexpectedToken, "expected a positive exponent", here());
    }
    const int n = static_cast<int>(peek().value);
    ++pos_;
    if (base.op != ConwayExpr::Op::Elementary || base.kind == Elementary::Zero) {
      throw Error(ErrorKind::UnexpectedToken, "only 1, -1 and i can be raised to a power",
                  atomPos);
    }
    return ConwayExpr::twist(base.kind, n);
  }

  ConwayExpr parseAtom() {
    if (atEnd()) {
      emptyOrUnexpected("unexpected end of symbol");
    }
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Integer: {
        ++pos_;
        const Elementary k = t.value > 0 ? Elementary::Pos : Elementary::Neg;
        const long mag = t.value > 0 ? t.value : -t.value;
        return ConwayExpr::twist(k, static_cast<int>(mag));
      }
      case TokenKind::Zero:
        ++pos_;
        return ConwayExpr::elementary(Elementary::Zero);
      case TokenKind::Pre:
        ++pos_;
        return ConwayExpr::elementary(Elementary::Pre);
      case TokenKind::LParen: {
        const std::size_t open = t.position;
        ++pos_;
        skipSpaces();
        ConwayExpr inner = parseRamification();
        skipSpaces();
        if (!check(TokenKind::RParen)) {
          if (atEnd()) throw Error(ErrorKind::UnbalancedParenthesis, "unclosed '('", open);
          throw Error(ErrorKind::UnexpectedToken, "expected ')'", here());
        }
        ++pos_;
        return inner;
      }
      case TokenKind::RParen:
      case TokenKind::Comma:
      case TokenKind::Plus:
        emptyOrUnexpected("expected a tangle");
      default:
        throw Error(ErrorKind::UnexpectedToken, "expected a tangle", t.position);
    }
  }

  [[noreturn]] void emptyOrUnexpected(const char* message) {
    // An empty operand right after '(' ',' or '+' is reported as an empty slot.
    if (pos_ > 0 && pos_ - 1 < tokens_.size()) {
      std::size_t prev = pos_;
      while (prev > 0 && tokens_[prev - 1].kind == TokenKind::Space) --prev;
      if (prev > 0) {
        const TokenKind k = tokens_[prev - 1].kind;
        if (k == TokenKind::LParen || k == TokenKind::Comma || k == TokenKind::Plus) {
          throw Error(ErrorKind::EmptySlot, "empty tangle position", here());
        }
      }
    }
    throw Error(ErrorKind::UnexpectedToken, message, here());
  }

  const std::vector<Token>& tokens_;
  std::size_t pos_;
  std::size_t end_;
  std::size_t endPosition_;
};

ConwayExpr parsePolyhedral(const std::vector<Token>& tokens, const PolyhedronRegistry& registry,
                           std::size_t endPosition) {
  const int n = static_cast<int>(tokens[0].value);
  std::size_t i = 1;
  int stars = 0;
  while (i < tokens.size() && tokens[i].kind == TokenKind::Star) {
    ++stars;
    ++i;
  }
  if (!registry.find(n, stars)) {
    throw Error(ErrorKind::UnsupportedPolyhedron,
                "no template for " + std::to_string(n) + std::string(stars, '*'),
                tokens[0].position);
  }

  // Slots are separated by '.'; a colon stands for ".1." and an empty slot
  // is the elementary tangle 1, except between two dots.
  std::vector<ConwayExpr> slots;
  bool afterDot = false;
  auto flush = [&](std::size_t begin, std::size_t end) {
    bool blank = true;
    for (std::size_t k = begin; k < end; ++k) {
      if (tokens[k].kind != TokenKind::Space) blank = false;
    }
    if (blank && afterDot && end < tokens.size() && tokens[end].kind == TokenKind::Dot) {
      throw Error(ErrorKind::EmptySlot, "empty slot between two dots", tokens[end].position);
    }
    if (blank) {
      slots.push_back(ConwayExpr::elementary(Elementary::Pos));
    } else {
      const std::size_t stop = end < tokens.size() ? tokens[end].position : endPosition;
      slots.push_back(Parser(tokens, begin, end, stop).parseAll());
    }
  };
  int depth = 0;
  std::size_t segment = i;
  for (; i < tokens.size(); ++i) {
    const TokenKind k = tokens[i].kind;
    if (k == TokenKind::LParen) ++depth;
    if (k == TokenKind::RParen) --depth;
    if (depth < 0) throw Error(ErrorKind::UnbalancedParenthesis, "unmatched ')'", tokens[i].position);
    if (depth > 0) continue;
    if (k == TokenKind::Star) {
      throw Error(ErrorKind::UnexpectedToken, "misplaced '*'", tokens[i].position);
    }
    if (k == TokenKind::Dot || k == TokenKind::Colon) {
      flush(segment, i);
      if (k == TokenKind::Colon) slots.push_back(ConwayExpr::elementary(Elementary::Pos));
      afterDot = k == TokenKind::Dot;
      segment = i + 1;
    }
  }
  if (depth > 0) throw Error(ErrorKind::UnbalancedParenthesis, "unclosed '('", endPosition);
  flush(segment, tokens.size());

  if (static_cast<int>(slots.size()) > n) {
    throw Error(ErrorKind::TooManySlots,
                std::to_string(slots.size()) + " slots for a polyhedron with " +
                    std::to_string(n) + " vertices");
  }
  while (static_cast<int>(slots.size()) < n) {
    slots.push_back(ConwayExpr::elementary(Elementary::Pos));
  }
  return ConwayExpr::polyhedral(n, stars, std::move(slots));
}

}  // namespace

ConwayExpr parse(const std::vector<Token>& tokens, const PolyhedronRegistry& registry) {
  const std::size_t endPosition = tokens.empty() ? 0 : tokens.back().position + 1;
  if (tokens.empty()) throw Error(ErrorKind::UnexpectedToken, "empty symbol", 0);
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    if (tokens[k].kind == TokenKind::Star && k != 1) {
      // only "n*" at the very start introduces a polyhedron
      if (!(k > 1 && tokens[k - 1].kind == TokenKind::Star)) {
        throw Error(ErrorKind::UnexpectedToken, "misplaced '*'", tokens[k].position);
      }
    }
  }
  if (tokens.size() >= 2 && tokens[0].kind == TokenKind::Integer && tokens[0].value > 0 &&
      tokens[1].kind == TokenKind::Star) {
    return parsePolyhedral(tokens, registry, endPosition);
  }
  for (const Token& t : tokens) {
    if (t.kind == TokenKind::Dot || t.kind == TokenKind::Colon || t.kind == TokenKind::Star) {
      throw Error(ErrorKind::UnexpectedToken, "polyhedron slots need an n* prefix", t.position);
    }
  }
  return Parser(tokens, 0, tokens.size(), endPosition).parseAll();
}

ConwayExpr parse(std::string_view source, const PolyhedronRegistry& registry) {
  return parse(tokenize(source), registry);
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

using Op = ConwayExpr::Op;

std::string renderNode(const ConwayExpr& e, bool reduced);

std::string wrap(const ConwayExpr& e, bool reduced, bool parens) {
  std::string s = renderNode(e, reduced);
  return parens ? "(" + s + ")" : s;
}

std::string renderSlots(const ConwayExpr& e, bool reduced) {
  std::vector<std::string> parts;
  for (const ConwayExpr& slot : e.children) {
    if (reduced && slot.isOne()) {
      parts.emplace_back();
    } else {
      parts.push_back(wrap(slot, reduced, slot.op == Op::Ramification));
    }
  }
  if (reduced) {
    while (!parts.empty() && parts.back().empty()) parts.pop_back();
  }
  std::string joined;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) joined += '.';
    joined += parts[k];
  }
  if (!reduced) return joined;
  std::string out;
  for (std::size_t k = 0; k < joined.size(); ++k) {
    if (joined[k] == '.' && k + 1 < joined.size() && joined[k + 1] == '.') {
      out += ':';
      ++k;
    } else {
      out += joined[k];
    }
  }
  return out;
}

std::string renderNode(const ConwayExpr& e, bool reduced) {
  switch (e.op) {
    case Op::Elementary:
      switch (e.kind) {
        case Elementary::Zero: return "0";
        case Elementary::Pos: return "1";
        case Elementary::Neg: return "-1";
        case Elementary::Pre: return "i";
      }
      break;
    case Op::Twist:
      switch (e.kind) {
        case Elementary::Pos: return std::to_string(e.count);
        case Elementary::Neg: return "-" + std::to_string(e.count);
        case Elementary::Pre: return "i^" + std::to_string(e.count);
        case Elementary::Zero: break;
      }
      break;
    case Op::Product: {
      const ConwayExpr& a = e.children[0];
      const ConwayExpr& b = e.children[1];
      return wrap(a, reduced, a.op == Op::Sum || a.op == Op::Ramification) + " " +
             wrap(b, reduced, b.op == Op::Sum || b.op == Op::Ramification || b.op == Op::Product);
    }
    case Op::Sum: {
      const ConwayExpr& a = e.children[0];
      const ConwayExpr& b = e.children[1];
      return wrap(a, reduced, a.op == Op::Ramification) + "+" +
             wrap(b, reduced, b.op == Op::Ramification || b.op == Op::Sum);
    }
    case Op::Ramification: {
      std::string out;
      for (std::size_t k = 0; k < e.children.size(); ++k) {
        if (k) out += ',';
        out += wrap(e.children[k], reduced, e.children[k].op == Op::Ramification);
      }
      return out;
    }
    case Op::Reflect: {
      const ConwayExpr& x = e.children[0];
      if (x.kind == Elementary::Pre && (x.op == Op::Elementary || x.op == Op::Twist)) {
        return "-" + renderNode(x, reduced);
      }
      return "-(" + renderNode(x, reduced) + ")";
    }
    case Op::Polyhedral:
      return std::to_string(e.vertices) + std::string(static_cast<std::size_t>(e.stars), '*') +
             renderSlots(e, reduced);
  }
  return {};
}

std::string kindName(Elementary k) {
  switch (k) {
    case Elementary::Zero: return "zero";
    case Elementary::Pos: return "pos";
    case Elementary::Neg: return "neg";
    case Elementary::Pre: return "pre";
  }
  return "?";
}

}  // namespace

std::string render(const ConwayExpr& expr, bool reduced) { return renderNode(expr, reduced); }

std::string summary(const ConwayExpr& e) {
  std::string out;
  switch (e.op) {
    case Op::Elementary: return "(" + kindName(e.kind) + ")";
    case Op::Twist: return "(twist " + kindName(e.kind) + " " + std::to_string(e.count) + ")";
    case Op::Product: out = "(product"; break;
    case Op::Sum: out = "(sum"; break;
    case Op::Ramification: out = "(ram"; break;
    case Op::Reflect: out = "(reflect"; break;
    case Op::Polyhedral:
      out = "(poly " + std::to_string(e.vertices) + std::string(static_cast<std::size_t>(e.stars), '*');
      break;
  }
  for (const ConwayExpr& c : e.children) out += " " + summary(c);
  return out + ")";
}

int precrossingCount(const ConwayExpr& e) {
  if (e.kind == Elementary::Pre) {
    if (e.op == Op::Elementary) return 1;
    if (e.op == Op::Twist) return e.count;
  }
  int n = 0;
  for (const ConwayExpr& c : e.children) n += precrossingCount(c);
  return n;
}

}  // namespace pk::notation

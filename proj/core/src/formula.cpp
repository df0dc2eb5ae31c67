#include <cctype>

#include "pk/error.hpp"
#include "pk/families.hpp"

namespace pk::families {

namespace {

class FormulaParser {
 public:
  FormulaParser(std::string_view text, const Params& params) : text_(text), params_(params) {}

  Integer parse() {
    Integer v = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::InvalidFormula,
                what + " in '" + std::string(text_) + "'", pos_);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool startsFactor() {
    const char c = peek();
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
  }

  Integer expr() {
    Integer v = term();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        v += term();
      } else if (c == '-') {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }

  Integer term() {
    Integer v = unary();
    for (;;) {
      if (peek() == '*') {
        ++pos_;
        v *= unary();
      } else if (startsFactor()) {
        v *= unary();
      } else {
        return v;
      }
    }
  }

  Integer unary() {
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return primary();
  }

  Integer primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Integer v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Integer(std::string(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      std::string word;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
        word += static_cast<char>(std::tolower(static_cast<unsigned char>(text_[pos_])));
        ++pos_;
      }
      if (word == "gcd") return gcdCall();
      // Adjacent letters are separate variables: "pq" is p*q.
      pos_ = start;
      const char name = text_[pos_++];
      auto it = params_.find(name);
      if (it == params_.end()) {
        throw Error(ErrorKind::InvalidParameters,
                    std::string("no value for parameter '") + name + "'", start);
      }
      return Integer(it->second);
    }
    fail(c == '\0' ? "unexpected end" : "unexpected character");
  }

  Integer gcdCall() {
    if (peek() != '(') fail("expected '(' after gcd");
    ++pos_;
    Integer g = 0;
    for (;;) {
      Integer v = expr();
      g = gcd(g, v);
      const char c = peek();
      if (c == ',') {
        ++pos_;
        continue;
      }
      if (c == ')') {
        ++pos_;
        return g;
      }
      fail("expected ',' or ')'");
    }
  }

  std::string_view text_;
  const Params& params_;
  std::size_t pos_ = 0;
};

}  // namespace

Integer evaluateFormula(std::string_view formula, const Params& params) {
  return FormulaParser(formula, params).parse();
}

}  // namespace pk::families

#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "qtwist/error.hpp"

namespace qtwist::expr {

/// Syntax tree of a catalog expression.
///
///   sum     := [+|-] product {(+|-) product}
///   product := power {[* | /] power}        juxtaposition multiplies
///   power   := atom [^ [-] integer]
///   atom    := integer | name | name( sum {, sum} ) | ( sum ) | [ sum {| sum} ]
///
/// Names may contain '-' once they contain '_' (e_-a, eh_d-a-b), so a
/// subtraction between such names needs surrounding spaces.
struct Node {
  enum class Kind { number, name, neg, add, sub, mul, div, pow, call, tensor };
  Kind kind = Kind::number;
  std::string text;  // number digits, name, or function name
  long exponent = 0;
  std::vector<Node> kids;
};

namespace detail {

struct Token {
  enum class Type { number, name, symbol, end };
  Type type = Type::end;
  std::string text;
  std::size_t pos = 0;
};

inline std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token t;
    t.pos = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      t.type = Token::Type::number;
      t.text = std::string(s.substr(i, j - i));
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      bool underscore = false;
      while (j < s.size()) {
        char d = s[j];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_') {
          underscore = underscore || d == '_';
          ++j;
        } else if (d == '-' && underscore && j + 1 < s.size() && std::isalnum(static_cast<unsigned char>(s[j + 1]))) {
          ++j;
        } else {
          break;
        }
      }
      t.type = Token::Type::name;
      t.text = std::string(s.substr(i, j - i));
      i = j;
    } else if (std::string_view("+-*/^()[]|,").find(c) != std::string_view::npos) {
      t.type = Token::Type::symbol;
      t.text = std::string(1, c);
      ++i;
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) + "' in expression: " + std::string(s));
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.pos = s.size();
  out.push_back(end);
  return out;
}

class Parser {
 public:
  Parser(std::string_view text) : text_(text), toks_(tokenize(text)) {}

  Node parse() {
    Node n = sum();
    if (peek().type != Token::Type::end) fail("trailing input");
    return n;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  bool is_symbol(const char* s) const { return peek().type == Token::Type::symbol && peek().text == s; }
  void expect(const char* s) {
    if (!is_symbol(s)) fail(std::string("expected '") + s + "'");
    ++i_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at column " + std::to_string(peek().pos + 1) + " in: " + std::string(text_));
  }

  Node sum() {
    Node acc;
    if (is_symbol("-")) {
      ++i_;
      acc.kind = Node::Kind::neg;
      acc.kids.push_back(product());
    } else {
      if (is_symbol("+")) ++i_;
      acc = product();
    }
    while (is_symbol("+") || is_symbol("-")) {
      Node n;
      n.kind = peek().text == "+" ? Node::Kind::add : Node::Kind::sub;
      ++i_;
      n.kids.push_back(std::move(acc));
      n.kids.push_back(product());
      acc = std::move(n);
    }
    return acc;
  }

  bool starts_atom() const {
    const auto& t = peek();
    if (t.type == Token::Type::number || t.type == Token::Type::name) return true;
    return t.type == Token::Type::symbol && (t.text == "(" || t.text == "[");
  }

  Node product() {
    Node acc = power();
    while (true) {
      Node::Kind k;
      if (is_symbol("*")) {
        ++i_;
        k = Node::Kind::mul;
      } else if (is_symbol("/")) {
        ++i_;
        k = Node::Kind::div;
      } else if (starts_atom()) {
        k = Node::Kind::mul;
      } else {
        break;
      }
      Node n;
      n.kind = k;
      n.kids.push_back(std::move(acc));
      n.kids.push_back(power());
      acc = std::move(n);
    }
    return acc;
  }

  Node power() {
    Node base = atom();
    if (!is_symbol("^")) return base;
    ++i_;
    bool negative = false;
    if (is_symbol("-")) {
      negative = true;
      ++i_;
    }
    if (peek().type != Token::Type::number) fail("expected integer exponent");
    Node n;
    n.kind = Node::Kind::pow;
    n.exponent = std::stol(peek().text) * (negative ? -1 : 1);
    ++i_;
    n.kids.push_back(std::move(base));
    return n;
  }

  Node atom() {
    const Token t = peek();
    if (t.type == Token::Type::number) {
      ++i_;
      Node n;
      n.kind = Node::Kind::number;
      n.text = t.text;
      return n;
    }
    if (t.type == Token::Type::name) {
      ++i_;
      Node n;
      n.text = t.text;
      // a call needs '(' right after the name; "zeta (x)" is a product
      if (!is_symbol("(") || toks_[i_].pos != t.pos + t.text.size()) {
        n.kind = Node::Kind::name;
        return n;
      }
      ++i_;
      n.kind = Node::Kind::call;
      if (!is_symbol(")")) {
        n.kids.push_back(sum());
        while (is_symbol(",")) {
          ++i_;
          n.kids.push_back(sum());
        }
      }
      expect(")");
      return n;
    }
    if (is_symbol("(")) {
      ++i_;
      Node n = sum();
      expect(")");
      return n;
    }
    if (is_symbol("[")) {
      ++i_;
      Node n;
      n.kind = Node::Kind::tensor;
      n.kids.push_back(sum());
      while (is_symbol("|")) {
        ++i_;
        n.kids.push_back(sum());
      }
      expect("]");
      if (n.kids.size() < 2) fail("a tensor needs at least two legs");
      return n;
    }
    fail("expected an operand");
  }

  std::string_view text_;
  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace detail

inline Node parse(std::string_view text) { return detail::Parser(text).parse(); }

/// Flattens a chain of explicit or implicit products into its operands.
inline void flatten_product(const Node& n, std::vector<const Node*>& out) {
  if (n.kind == Node::Kind::mul) {
    flatten_product(n.kids[0], out);
    flatten_product(n.kids[1], out);
  } else {
    out.push_back(&n);
  }
}

}  // namespace qtwist::expr

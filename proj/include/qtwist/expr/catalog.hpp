#pragma once

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qtwist/error.hpp"
#include "qtwist/expr/ast.hpp"

namespace qtwist::expr {

/// Named expression bound to an algebra: `let` (helper local to the
/// algebra), `element` or `twist`.
struct Definition {
  std::string kind;
  std::string name;
  std::string context;
  std::string source;
  Node body;
  int line = 0;
};

/// Generator-indexed block: a coproduct table or an algebra map.
struct Block {
  std::string kind;  // "coproduct" or "map"
  std::string name;  // map name; the algebra for coproducts
  std::string source, target;
  std::string coproduct_kind;
  bool primitive = false;  // coproduct: unlisted generators are primitive
  std::vector<std::pair<std::string, Node>> entries;
  std::vector<std::string> entry_text;
  int line = 0;
};

/// Parsed catalog files. Statements:
///
///   let NAME on ALG = EXPR
///   element NAME on ALG = EXPR
///   twist NAME on ALG = FACTOR * FACTOR * ...
///   coproduct ALG KIND [primitive]
///     GEN = EXPR
///   map NAME : SRC -> DST
///     GEN = EXPR
///
/// Indented lines continue the previous statement; inside a block an indented
/// line containing '=' starts a new entry. '#' starts a comment.
class Catalog {
 public:
  void parse(const std::string& text, const std::string& origin = "<catalog>") {
    std::istringstream is(text);
    std::string raw;
    int line_no = 0;
    struct Pending {
      std::string text;
      int line = 0;
    };
    std::vector<Pending> stmts;
    while (std::getline(is, raw)) {
      ++line_no;
      auto hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back()))) raw.pop_back();
      if (raw.empty()) continue;
      if (std::isspace(static_cast<unsigned char>(raw[0]))) {
        if (stmts.empty()) throw ParseError(origin + ":" + std::to_string(line_no) + ": indented line without statement");
        stmts.back().text += "\n" + raw;
      } else {
        stmts.push_back({raw, line_no});
      }
    }
    for (const auto& s : stmts) statement(s.text, s.line, origin);
  }

  void load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open catalog " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    parse(ss.str(), path);
  }

  static std::string let_key(const std::string& algebra, const std::string& name) { return algebra + "::" + name; }

  const Definition* find(const std::string& name) const {
    auto it = defs_.find(name);
    return it == defs_.end() ? nullptr : &it->second;
  }
  const Definition& definition(const std::string& name) const {
    const auto* d = find(name);
    if (!d) throw UnknownObject("no catalog definition named '" + name + "'");
    return *d;
  }
  const Block* coproduct(const std::string& algebra) const {
    auto it = coproducts_.find(algebra);
    return it == coproducts_.end() ? nullptr : &it->second;
  }
  const Block& map(const std::string& name) const {
    auto it = maps_.find(name);
    if (it == maps_.end()) throw UnknownObject("no catalog map named '" + name + "'");
    return it->second;
  }
  bool has_map(const std::string& name) const { return maps_.count(name) != 0; }

  /// Definition names of one kind in file order.
  std::vector<std::string> names(const std::string& kind) const {
    std::vector<std::string> out;
    for (const auto& n : order_)
      if (defs_.at(n).kind == kind) out.push_back(n);
    return out;
  }
  std::vector<std::string> map_names() const {
    std::vector<std::string> out;
    for (const auto& [n, b] : maps_) out.push_back(n);
    return out;
  }

 private:
  static std::vector<std::string> words(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
  }

  void statement(const std::string& text, int line, const std::string& origin) {
    const std::string where = origin + ":" + std::to_string(line) + ": ";
    auto nl = text.find('\n');
    std::string head = text.substr(0, nl);
    std::string rest = nl == std::string::npos ? "" : text.substr(nl + 1);
    auto kw = words(head);
    try {
      if (kw[0] == "let" || kw[0] == "element" || kw[0] == "twist") {
        auto eq = text.find('=');
        auto hw = words(text.substr(0, eq));
        if (eq == std::string::npos || hw.size() != 4 || hw[2] != "on")
          throw ParseError("expected '" + kw[0] + " NAME on ALGEBRA = EXPR'");
        Definition d;
        d.kind = kw[0];
        d.name = hw[1];
        d.context = hw[3];
        d.source = text.substr(eq + 1);
        d.body = expr::parse(d.source);
        d.line = line;
        // helpers are scoped to their algebra, elements and twists are global
        const std::string key = d.kind == "let" ? let_key(d.context, d.name) : d.name;
        if (!defs_.emplace(key, d).second) throw ParseError("duplicate definition " + d.name);
        order_.push_back(key);
      } else if (kw[0] == "coproduct") {
        if (kw.size() < 3 || kw.size() > 4 || (kw.size() == 4 && kw[3] != "primitive"))
          throw ParseError("expected 'coproduct ALGEBRA KIND [primitive]'");
        Block b;
        b.kind = "coproduct";
        b.name = b.source = b.target = kw[1];
        b.coproduct_kind = kw[2];
        b.primitive = kw.size() == 4;
        b.line = line;
        entries(rest, b);
        if (!coproducts_.emplace(b.name, b).second) throw ParseError("duplicate coproduct for " + b.name);
      } else if (kw[0] == "map") {
        if (kw.size() != 6 || kw[2] != ":" || kw[4] != "->") throw ParseError("expected 'map NAME : SRC -> DST'");
        Block b;
        b.kind = "map";
        b.name = kw[1];
        b.source = kw[3];
        b.target = kw[5];
        b.line = line;
        entries(rest, b);
        if (!maps_.emplace(b.name, b).second) throw ParseError("duplicate map " + b.name);
      } else {
        throw ParseError("unknown statement '" + kw[0] + "'");
      }
    } catch (const ParseError& e) {
      throw ParseError(where + e.what());
    }
  }

  static void entries(const std::string& body, Block& b) {
    std::istringstream is(body);
    std::string line;
    std::vector<std::pair<std::string, std::string>> raw;
    while (std::getline(is, line)) {
      auto eq = line.find('=');
      if (eq != std::string::npos) {
        auto lhs = words(line.substr(0, eq));
        if (lhs.size() != 1) throw ParseError("entry must be 'GENERATOR = EXPR'");
        raw.emplace_back(lhs[0], line.substr(eq + 1));
      } else {
        if (raw.empty()) throw ParseError("continuation line before first entry");
        raw.back().second += " " + line;
      }
    }
    for (auto& [g, e] : raw) {
      b.entries.emplace_back(g, expr::parse(e));
      b.entry_text.push_back(e);
    }
  }

  std::map<std::string, Definition> defs_;
  std::vector<std::string> order_;
  std::map<std::string, Block> coproducts_;
  std::map<std::string, Block> maps_;
};

}  // namespace qtwist::expr

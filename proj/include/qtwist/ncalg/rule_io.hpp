#pragma once

#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "qtwist/error.hpp"
#include "qtwist/ncalg/presentation.hpp"

namespace qtwist {

/// Line-oriented rule table format, version 1:
///
///   qtwist-rules v1
///   presentation NAME
///   root-degree D
///   generators g1 g2 ...            (sort order)
///   cartan NAME AXIS SIGN           (optional, one per Cartan letter)
///   weight NAME w1 w2 ...           (optional)
///   inverse A B                     (optional)
///   B A -> [coeff] zeta^k word ; [coeff] word ; ...
///
/// Empty words are written "1"; coefficients use the scalar text format.
/// Writing a parsed table reproduces the input byte for byte.
template <class R>
std::string format_rule_table(const Presentation<R>& p) {
  std::ostringstream os;
  const int d = p.root_degree();
  os << "qtwist-rules v1\n";
  os << "presentation " << p.name() << "\n";
  os << "root-degree " << d << "\n";
  os << "generators";
  for (const auto& g : p.generator_names()) os << ' ' << g;
  os << "\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& c = p.cartan(Letter(i));
    if (c.axis >= 0) os << "cartan " << p.generator_name(Letter(i)) << ' ' << c.axis << ' ' << c.sign << "\n";
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& w = p.weight(Letter(i));
    if (w.empty()) continue;
    os << "weight " << p.generator_name(Letter(i));
    for (int x : w) os << ' ' << x;
    os << "\n";
  }
  for (auto [a, b] : p.inverse_pairs())
    os << "inverse " << p.generator_name(a) << ' ' << p.generator_name(b) << "\n";
  for (const auto& r : p.rules()) {
    os << p.generator_name(r.left) << ' ' << p.generator_name(r.right) << " ->";
    bool first = true;
    for (const auto& [w, s] : r.rhs) {
      for (const auto& [k, c] : s.terms()) {
        os << (first ? " " : " ; ");
        first = false;
        os << '[' << format_scalar(c, d) << ']';
        if (k == 1) os << " zeta";
        if (k > 1) os << " zeta^" << k;
        os << ' ' << p.format_word(w);
      }
    }
    if (first) os << " 0";
    os << "\n";
  }
  return os.str();
}

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

template <class R>
WordPoly<R> parse_rule_rhs(const Presentation<R>& p, const std::string& text) {
  WordPoly<R> rhs;
  std::string body = text;
  while (!body.empty() && body.front() == ' ') body.erase(body.begin());
  while (!body.empty() && body.back() == ' ') body.pop_back();
  if (body == "0") return rhs;
  std::size_t i = 0;
  while (i < body.size()) {
    while (i < body.size() && body[i] == ' ') ++i;
    if (i >= body.size() || body[i] != '[') throw ParseError("rule term must start with '[': " + body);
    int depth = 0;
    std::size_t j = i;
    for (; j < body.size(); ++j) {
      if (body[j] == '[') ++depth;
      if (body[j] == ']' && --depth == 0) break;
    }
    if (j == body.size()) throw ParseError("unbalanced coefficient bracket: " + body);
    R c = parse_scalar<R>(body.substr(i + 1, j - i - 1), p.root_degree());
    std::size_t end = body.find(';', j);
    std::string rest = body.substr(j + 1, end == std::string::npos ? std::string::npos : end - j - 1);
    i = end == std::string::npos ? body.size() : end + 1;
    auto toks = split_ws(rest);
    int zeta = 0;
    std::string word_text;
    for (const auto& t : toks) {
      if (t == "zeta") {
        zeta += 1;
      } else if (t.rfind("zeta^", 0) == 0) {
        zeta += std::stoi(t.substr(5));
      } else {
        word_text += (word_text.empty() ? "" : " ") + t;
      }
    }
    Word w = p.parse_word(word_text);
    bool merged = false;
    for (auto& [w2, s2] : rhs)
      if (w2 == w) {
        s2.add_term(zeta, c);
        merged = true;
      }
    if (!merged) rhs.emplace_back(w, ZetaSeries<R>(c, zeta));
  }
  return rhs;
}

}  // namespace detail

template <class R>
std::shared_ptr<Presentation<R>> parse_rule_table(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::string name;
  int root = 1;
  std::shared_ptr<Presentation<R>> p;
  bool header = false;
  int line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw ParseError("rule table line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      if (line != "qtwist-rules v1") fail("unsupported header '" + line + "'");
      header = true;
      continue;
    }
    auto arrow = line.find("->");
    if (arrow != std::string::npos) {
      if (!p) fail("rule before generators");
      auto lhs = detail::split_ws(line.substr(0, arrow));
      if (lhs.size() != 2) fail("rule left side must be two generators");
      p->set_rule(lhs[0], lhs[1], detail::parse_rule_rhs(*p, line.substr(arrow + 2)));
      continue;
    }
    auto toks = detail::split_ws(line);
    if (toks.empty()) continue;
    const std::string& key = toks[0];
    if (key == "presentation" && toks.size() == 2) {
      name = toks[1];
    } else if (key == "root-degree" && toks.size() == 2) {
      root = std::stoi(toks[1]);
    } else if (key == "generators") {
      p = std::make_shared<Presentation<R>>(name, root, std::vector<std::string>(toks.begin() + 1, toks.end()));
    } else if (key == "cartan" && toks.size() == 4 && p) {
      p->set_cartan(toks[1], std::stoi(toks[2]), std::stoi(toks[3]));
    } else if (key == "weight" && toks.size() >= 2 && p) {
      std::vector<int> w;
      for (std::size_t i = 2; i < toks.size(); ++i) w.push_back(std::stoi(toks[i]));
      p->set_weight(toks[1], w);
    } else if (key == "inverse" && toks.size() == 3 && p) {
      p->add_inverse_pair(toks[1], toks[2]);
    } else {
      fail("unrecognized line '" + line + "'");
    }
  }
  if (!p) throw ParseError("rule table without generators");
  return p;
}

template <class R>
std::shared_ptr<Presentation<R>> load_rule_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open rule table " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_rule_table<R>(ss.str());
}

}  // namespace qtwist

#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qtwist/error.hpp"
#include "qtwist/expr/catalog.hpp"
#include "qtwist/hopf/coproduct.hpp"
#include "qtwist/hopf/twist.hpp"
#include "qtwist/qcalc/qexp.hpp"

namespace qtwist::expr {

/// Result of evaluating an expression: a zeta series of scalars or an element
/// with a definite number of legs.
template <class R>
struct Value {
  bool scalar = true;
  ZetaSeries<R> s;
  Element<R> e;

  static Value of(ZetaSeries<R> x) { return Value{true, std::move(x), {}}; }
  static Value of(Element<R> x) { return Value{false, {}, std::move(x)}; }
  int legs() const { return scalar ? 0 : e.legs(); }
};

/// Evaluates catalog expressions over the coefficient ring R. Algebras are
/// looked up through `contexts`; `params` binds free names such as `a`.
template <class R>
class Evaluator {
 public:
  using Context = HopfContext<R>;
  using Provider = std::function<Context&(const std::string&)>;

  Evaluator(const Catalog& catalog, Provider contexts, std::map<std::string, R> params = {})
      : cat_(catalog), contexts_(std::move(contexts)), params_(std::move(params)) {}

  const Catalog& catalog() const { return cat_; }
  Context& context(const std::string& name) { return contexts_(name); }
  const std::map<std::string, R>& params() const { return params_; }

  /// Evaluates a source string in an algebra.
  Value<R> eval(const std::string& algebra, const std::string& text) { return eval(parse(text), context(algebra)); }

  Value<R> eval(const Node& n, Context& c) {
    using K = Node::Kind;
    const int N = c.order();
    switch (n.kind) {
      case K::number: return Value<R>::of(ZetaSeries<R>(R(mpz_class(n.text))));
      case K::name: return name(n.text, c);
      case K::neg: {
        auto v = eval(n.kids[0], c);
        if (v.scalar) return Value<R>::of(-v.s);
        return Value<R>::of(-v.e);
      }
      case K::add:
      case K::sub: {
        auto a = eval(n.kids[0], c), b = eval(n.kids[1], c);
        if (n.kind == K::sub) b = negate(b);
        if (a.scalar && b.scalar) return Value<R>::of(a.s + b.s);
        const int legs = a.scalar ? b.legs() : a.legs();
        return Value<R>::of(element(a, legs, N) + element(b, legs, N));
      }
      case K::mul: return multiply(eval(n.kids[0], c), eval(n.kids[1], c), c);
      case K::div: {
        auto a = eval(n.kids[0], c), b = eval(n.kids[1], c);
        if (!b.scalar) throw Error("division by an algebra element; use inv()");
        return multiply(a, Value<R>::of(b.s.inverse(N)), c);
      }
      case K::pow: {
        auto a = eval(n.kids[0], c);
        long k = n.exponent;
        if (a.scalar) {
          ZetaSeries<R> base = k < 0 ? a.s.inverse(N) : a.s;
          ZetaSeries<R> r(R(1));
          for (long i = 0; i < (k < 0 ? -k : k); ++i) r = r.mul(base, N);
          return Value<R>::of(r);
        }
        const auto& T = c.on(a.e);
        Element<R> base = k < 0 ? T.inverse(a.e) : a.e;
        return Value<R>::of(T.pow(base, int(k < 0 ? -k : k)));
      }
      case K::tensor: {
        Element<R> acc = element(eval(n.kids[0], c), 1, N);
        for (std::size_t i = 1; i < n.kids.size(); ++i) {
          auto v = eval(n.kids[i], c);
          if (!v.scalar && v.legs() != 1) throw LegMismatch("tensor slots must be one-leg expressions");
          acc = tensor(acc, element(v, 1, N), N);
        }
        return Value<R>::of(c.legs(acc.legs()).normal_form(acc));
      }
      case K::call: return call(n, c);
    }
    throw Error("unknown expression node");
  }

  Element<R> eval_element(const Node& n, Context& c, int legs) { return element(eval(n, c), legs, c.order()); }

  /// A zeta-free scalar argument (bases of q-exponentials and the like).
  R constant(const Node& n, Context& c) {
    auto v = eval(n, c);
    if (!v.scalar) throw Error("expected a scalar argument");
    if (v.s.is_zero_series()) return R(0);
    if (v.s.max_power() > 0) throw Error("expected a zeta-free scalar argument");
    return v.s.coeff(0);
  }

  /// Twist definition as an ordered factor list.
  const Twist<R>& twist(const std::string& twist_name) {
    auto it = twist_cache_.find(twist_name);
    if (it != twist_cache_.end()) return it->second;
    const auto& d = cat_.definition(twist_name);
    if (d.kind != "twist") throw UnknownObject("'" + twist_name + "' is not a twist");
    Context& c = context(d.context);
    Twist<R> t(twist_name, 2);
    std::vector<const Node*> parts;
    flatten_product(d.body, parts);
    for (const Node* p : parts) splice(*p, c, t);
    return twist_cache_.emplace(twist_name, t).first->second;
  }

  /// Image of an element of the map's source under a catalog map.
  Element<R> apply_map(const std::string& map_name, const Element<R>& x) {
    const Block& m = cat_.map(map_name);
    Context& dst = context(m.target);
    const int N = dst.order();
    Element<R> out(x.legs());
    for (const auto& [k, s] : x.terms()) {
      auto parts = keys::split(k);
      Element<R> acc = map_word(map_name, Word(parts[0]));
      for (std::size_t i = 1; i < parts.size(); ++i) acc = tensor(acc, map_word(map_name, Word(parts[i])), N);
      out += acc.scaled(s, N);
    }
    return dst.legs(x.legs()).normal_form(out);
  }

  /// Coproduct table from a catalog block (generators missing from a
  /// `primitive` block get g (x) 1 + 1 (x) g).
  CoproductTable<R> coproduct_table(const Block& b, Context& c) {
    CoproductKind kind = CoproductKind::standard;
    if (b.coproduct_kind == "standard") kind = CoproductKind::standard;
    else if (b.coproduct_kind == "k-twisted") kind = CoproductKind::k_twisted;
    else if (b.coproduct_kind == "classical") kind = CoproductKind::classical;
    else if (b.coproduct_kind == "psi-twisted") kind = CoproductKind::psi_twisted;
    else throw ParseError("unknown coproduct kind " + b.coproduct_kind);
    CoproductTable<R> table(c.presentation_ptr(), kind);
    for (const auto& [g, node] : b.entries) table.set(c.presentation().letter(g), eval_element(node, c, 2));
    if (b.primitive) {
      const auto& T2 = c.legs(2);
      for (const auto& g : c.presentation().generator_names()) {
        Letter l = c.presentation().letter(g);
        if (!table.has(l)) table.set(l, T2.gen(0, g) + T2.gen(1, g));
      }
    }
    return table;
  }

 private:
  static Value<R> negate(const Value<R>& v) { return v.scalar ? Value<R>::of(-v.s) : Value<R>::of(-v.e); }

  static Element<R> element(const Value<R>& v, int legs, int order) {
    if (!v.scalar) {
      if (v.legs() != legs) throw LegMismatch("expected " + std::to_string(legs) + " legs, got " + std::to_string(v.legs()));
      return v.e;
    }
    return Element<R>::scalar(legs, v.s.truncated(order));
  }

  Value<R> multiply(const Value<R>& a, const Value<R>& b, Context& c) {
    const int N = c.order();
    if (a.scalar && b.scalar) return Value<R>::of(a.s.mul(b.s, N));
    if (a.scalar) return Value<R>::of(b.e.scaled(a.s, N));
    if (b.scalar) return Value<R>::of(a.e.scaled(b.s, N));
    if (a.legs() != b.legs()) throw LegMismatch("product of elements with different leg counts");
    return Value<R>::of(c.on(a.e).mul(a.e, b.e));
  }

  Value<R> name(const std::string& id, Context& c) {
    const int deg = c.presentation().root_degree();
    if (id == "zeta") return Value<R>::of(ZetaSeries<R>::zeta_power(1));
    if (id == "q" || id == "t") {
      if constexpr (ScalarTraits<R>::quantum) return Value<R>::of(ZetaSeries<R>(id == "q" ? ScalarTraits<R>::q(deg) : ScalarTraits<R>::t(deg)));
      throw Error("'" + id + "' used in the classical algebra " + c.name());
    }
    if (auto it = params_.find(id); it != params_.end()) return Value<R>::of(ZetaSeries<R>(it->second));
    if (c.presentation().has_generator(id)) return Value<R>::of(c.gen(id));
    const Definition* d = cat_.find(Catalog::let_key(c.name(), id));
    if (!d) d = cat_.find(id);
    if (d) {
      if (d->context != c.name())
        throw Error("'" + id + "' is defined on " + d->context + ", used on " + c.name());
      if (d->kind == "twist") return Value<R>::of(twist(id).expand(c.legs(2)));
      auto key = std::make_pair(c.name() + "::" + id, c.order());
      auto it = let_cache_.find(key);
      if (it != let_cache_.end()) return it->second;
      auto v = eval(d->body, c);
      return let_cache_.emplace(key, v).first->second;
    }
    throw UnknownObject("unknown name '" + id + "' in algebra " + c.name());
  }

  Element<R> one_arg(const Node& n, Context& c, std::size_t count) {
    if (n.kids.size() != count) throw ParseError(n.text + "() takes " + std::to_string(count) + " arguments");
    auto v = eval(n.kids.back(), c);
    if (v.scalar) throw Error(n.text + "() needs an algebra element argument");
    return v.e;
  }

  Value<R> call(const Node& n, Context& c) {
    const std::string& f = n.text;
    if (f == "exp" || f == "qexp" || f == "sexp" || f == "qpow" || f == "cpow") {
      auto factor = make_factor(n, c);
      return Value<R>::of(expand_factor(c.legs(factor.legs()), factor));
    }
    if (f == "inv") {
      auto x = one_arg(n, c, 1);
      return Value<R>::of(c.on(x).inverse(x));
    }
    if (f == "log") {
      auto x = one_arg(n, c, 1);
      const auto& T = c.on(x);
      Element<R> y = x - T.unit();
      qtwist::detail::require_positive_order(y, "log");
      Element<R> sum(x.legs()), p = T.unit();
      for (int k = 1; k <= c.order(); ++k) {
        p = T.mul(p, y);
        if (p.is_zero()) break;
        sum += p.scaled(R(k % 2 ? 1 : -1) * inverse(R(k)));
      }
      return Value<R>::of(sum);
    }
    if (f == "delta") {
      auto x = one_arg(n, c, 1);
      if (x.legs() != 1) throw LegMismatch("delta() expects a one-leg element");
      return Value<R>::of(c.delta(x));
    }
    if (f == "delta_l" || f == "delta_r") {
      auto x = one_arg(n, c, 1);
      if (x.legs() != 2) throw LegMismatch(f + "() expects a two-leg element");
      return Value<R>::of(c.apply_delta(x, f == "delta_l" ? 0 : 1));
    }
    if (f == "proj1" || f == "proj2" || f == "proj3") {
      auto x = one_arg(n, c, 1);
      return Value<R>::of(c.projected_legs(x, f.back() - '0'));
    }
    if (f == "swap") {
      auto x = one_arg(n, c, 1);
      if (x.legs() != 2) throw LegMismatch("swap() expects a two-leg element");
      return Value<R>::of(x.permuted({1, 0}));
    }
    if (f == "comm" || f == "qcomm") {
      const bool qc = f == "qcomm";
      if (n.kids.size() != (qc ? 3u : 2u)) throw ParseError(f + "() has the wrong number of arguments");
      R Q = qc ? constant(n.kids[0], c) : R(1);
      auto x = eval_element(n.kids[qc ? 1 : 0], c, 1);
      auto y = eval_element(n.kids[qc ? 2 : 1], c, 1);
      const auto& T = c.legs(1);
      return Value<R>::of(T.mul(x, y) - T.mul(y, x).scaled(Q));
    }
    if (f == "apply") {
      if (n.kids.size() != 2 || n.kids[0].kind != Node::Kind::name) throw ParseError("apply(MAP, EXPR)");
      const Block& m = cat_.map(n.kids[0].text);
      if (m.target != c.name()) throw Error("map " + m.name + " lands in " + m.target + ", used in " + c.name());
      auto v = eval(n.kids[1], context(m.source));
      if (v.scalar) return v;
      return Value<R>::of(apply_map(m.name, v.e));
    }
    throw UnknownObject("unknown function '" + f + "'");
  }

  TwistFactor<R> make_factor(const Node& n, Context& c) {
    using FK = typename TwistFactor<R>::Kind;
    const std::string& f = n.text;
    TwistFactor<R> t;
    t.label = f;
    auto arg = [&](std::size_t i) {
      auto v = eval(n.kids.at(i), c);
      if (v.scalar) throw Error(f + "() argument must be an algebra element");
      return v.e;
    };
    if (f == "exp") {
      if (n.kids.size() != 1) throw ParseError("exp(x)");
      t.kind = FK::exp;
      t.arg = arg(0);
    } else if (f == "qexp" || f == "sexp") {
      if (n.kids.size() != 2) throw ParseError(f + "(Q, x)");
      t.kind = FK::exp;
      t.base = constant(n.kids[0], c);
      t.arg = arg(1);
      if (f == "sexp") t.arg = t.arg.scaled(inverse(R(1) - t.base));
    } else if (f == "qpow") {
      if (n.kids.size() != 3) throw ParseError("qpow(Q, G, u)");
      t.kind = FK::qpow;
      t.base = constant(n.kids[0], c);
      t.arg = arg(2);
      t.exponent = eval_element(n.kids[1], c, t.arg.legs());
    } else if (f == "cpow") {
      if (n.kids.size() != 2) throw ParseError("cpow(V, u)");
      t.kind = FK::classical_pow;
      t.arg = arg(1);
      t.exponent = eval_element(n.kids[0], c, t.arg.legs());
    } else {
      throw Error("not a factor function: " + f);
    }
    return t;
  }

  /// Appends the factors denoted by one operand of a twist product.
  void splice(const Node& n, Context& c, Twist<R>& t) {
    using K = Node::Kind;
    if (n.kind == K::call && (n.text == "exp" || n.text == "qexp" || n.text == "sexp" || n.text == "qpow" || n.text == "cpow")) {
      t.push(make_factor(n, c));
      return;
    }
    if (n.kind == K::name) {
      if (const Definition* d = cat_.find(n.text); d && d->kind == "twist") {
        if (d->context != c.name()) throw Error("twist " + n.text + " lives on " + d->context);
        t.append(twist(n.text));
        return;
      }
    }
    if (n.kind == K::call && n.text == "apply" && n.kids.size() == 2 && n.kids[1].kind == K::name) {
      if (const Definition* d = cat_.find(n.kids[1].text); d && d->kind == "twist") {
        const std::string map_name = n.kids[0].text;
        const Block& m = cat_.map(map_name);
        if (m.target != c.name() || m.source != d->context) throw Error("map " + map_name + " does not fit twist " + d->name);
        t.append(twist(d->name).mapped([&](const Element<R>& x) { return apply_map(map_name, x); }, d->name));
        return;
      }
    }
    TwistFactor<R> f;
    f.kind = TwistFactor<R>::Kind::series;
    f.arg = eval_element(n, c, 2);
    f.label = "series";
    t.push(std::move(f));
  }

  const Element<R>& map_word(const std::string& map_name, const Word& w) {
    auto key = std::make_pair(map_name, w);
    auto it = map_cache_.find(key);
    if (it != map_cache_.end()) return it->second;
    const Block& m = cat_.map(map_name);
    Context& dst = context(m.target);
    Element<R> v(1);
    if (w.empty()) {
      v = Element<R>::unit(1);
    } else if (w.size() == 1) {
      Context& src = context(m.source);
      const std::string& g = src.presentation().generator_name(static_cast<Letter>(w[0]));
      bool found = false;
      for (const auto& [name, node] : m.entries)
        if (name == g) {
          v = eval_element(node, dst, 1);
          found = true;
        }
      if (!found) throw MissingGenerator("map " + map_name + " has no image for " + g);
    } else {
      Element<R> head = map_word(map_name, w.substr(0, w.size() - 1));
      v = dst.legs(1).mul(head, map_word(map_name, w.substr(w.size() - 1)));
    }
    return map_cache_.emplace(key, std::move(v)).first->second;
  }

  const Catalog& cat_;
  Provider contexts_;
  std::map<std::string, R> params_;
  std::map<std::pair<std::string, int>, Value<R>> let_cache_;
  std::map<std::string, Twist<R>> twist_cache_;
  std::map<std::pair<std::string, Word>, Element<R>> map_cache_;
};

}  // namespace qtwist::expr

#pragma once

#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "qtwist/ncalg/quotient.hpp"
#include "qtwist/scalars/scalar.hpp"

namespace qtwist {

/// Term list used to spell rule right-hand sides: (coefficient, zeta power, word).
template <class R>
using TermList = std::vector<std::tuple<R, int, std::string>>;

template <class R>
WordPoly<R> terms(const Presentation<R>& p, const TermList<R>& list) {
  WordPoly<R> out;
  for (const auto& [c, k, text] : list) {
    Word w = p.parse_word(text);
    bool merged = false;
    for (auto& [w2, s] : out)
      if (w2 == w) {
        s.add_term(k, c);
        merged = true;
      }
    if (!merged) out.emplace_back(w, ZetaSeries<R>(c, k));
  }
  return out;
}

/// Swap rule b a -> c a b.
template <class R>
void set_swap(Presentation<R>& p, const std::string& b, const std::string& a, const R& c = R(1)) {
  p.set_rule(b, a, terms<R>(p, {{c, 0, a + " " + b}}));
}

/// Test algebra with y x = q^2 x y.
inline std::shared_ptr<Presentation<QCoeff>> qplane_presentation() {
  auto p = std::make_shared<Presentation<QCoeff>>("qplane", 1, std::vector<std::string>{"x", "y"});
  const QCoeff q = QCoeff::q(1);
  set_swap<QCoeff>(*p, "y", "x", q * q);
  return p;
}

/// Smallest algebra generated by u, v with u^2 = v^2 = uvu = vuv = 0; the
/// letter w stands for [u, v]. Both hypotheses of the five-term identity hold.
inline std::shared_ptr<Presentation<QCoeff>> five_term_presentation() {
  auto p = std::make_shared<Presentation<QCoeff>>("five-term", 1, std::vector<std::string>{"u", "w", "v"});
  const QCoeff one(1);
  p->set_rule("v", "u", terms<QCoeff>(*p, {{one, 0, "u v"}, {-one, 0, "w"}}));
  for (auto [b, a] : {std::pair{"u", "u"}, {"v", "v"}, {"w", "w"}, {"u", "w"}, {"w", "u"}, {"w", "v"}, {"v", "w"}})
    p->set_rule(b, a, {});
  return p;
}

/// Borel-type subalgebra of U_q(affine sl2) spanned by e_{-alpha}^a K^b
/// e_{delta-alpha}^c, with K = q^{h_alpha}. Weights are in the root basis
/// (alpha_0, alpha_1).
inline std::shared_ptr<Presentation<QCoeff>> d2_presentation() {
  auto p = std::make_shared<Presentation<QCoeff>>("D2", 1, std::vector<std::string>{"e_-a", "K", "Kinv", "e_d-a"});
  const QCoeff q = QCoeff::q(1), q2 = q * q, qm2 = q2.inverse();
  p->set_cartan("K", 0, 1);
  p->set_cartan("Kinv", 0, -1);
  p->add_inverse_pair("K", "Kinv");
  p->set_weight("e_-a", {0, -1});
  p->set_weight("e_d-a", {1, 0});
  set_swap<QCoeff>(*p, "K", "e_-a", qm2);
  set_swap<QCoeff>(*p, "Kinv", "e_-a", q2);
  set_swap<QCoeff>(*p, "e_d-a", "K", q2);
  set_swap<QCoeff>(*p, "e_d-a", "Kinv", qm2);
  set_swap<QCoeff>(*p, "e_d-a", "e_-a");
  return p;
}

namespace detail {

/// (alpha_i | alpha_j) for affine sl3 in the basis alpha_0, alpha_1, alpha_2.
inline int affine_sl3_form(int i, int j) { return i == j ? 2 : -1; }

/// (alpha_axis | w) for w in the root basis.
inline int pair_with_root(int axis, const std::vector<int>& w) {
  int s = 0;
  for (int j = 0; j < 3; ++j) s += affine_sl3_form(axis, j) * w[j];
  return s;
}

}  // namespace detail

/// Chevalley generators F2 = e_{-beta}, F1 = e_{-alpha}, E1 = e_alpha,
/// E0 = e_{alpha_0} of U_q(affine sl3) with Cartan letters Ta = q^{h_alpha/3},
/// Tb = q^{h_beta/3} (so t = q^{1/3}). Lowering letters precede Cartan
/// letters, which precede raising letters; only the cross rules are kept
/// as rewrite rules, and the Serre relations are handled by graded
/// quotients of the two blocks.
inline std::unique_ptr<TriangularQuotient<QCoeff>> chevalley_affine_sl3(int order, int degree_bound) {
  auto p = std::make_shared<Presentation<QCoeff>>(
      "chevalley-sl3-affine", 3, std::vector<std::string>{"F2", "F1", "Ta", "Tainv", "Tb", "Tbinv", "E1", "E0"});
  p->set_free_pairs(true);
  const QCoeff t = QCoeff::t(3), q = QCoeff::q(3), one(1);
  p->set_cartan("Ta", 0, 1);
  p->set_cartan("Tainv", 0, -1);
  p->set_cartan("Tb", 1, 1);
  p->set_cartan("Tbinv", 1, -1);
  p->add_inverse_pair("Ta", "Tainv");
  p->add_inverse_pair("Tb", "Tbinv");
  set_swap<QCoeff>(*p, "Tb", "Ta");
  set_swap<QCoeff>(*p, "Tb", "Tainv");
  set_swap<QCoeff>(*p, "Tbinv", "Ta");
  set_swap<QCoeff>(*p, "Tbinv", "Tainv");
  const std::vector<std::pair<std::string, std::vector<int>>> roots = {
      {"F2", {0, 0, -1}}, {"F1", {0, -1, 0}}, {"E1", {0, 1, 0}}, {"E0", {1, 0, 0}}};
  for (const auto& [name, w] : roots) p->set_weight(name, w);
  const std::vector<std::pair<std::string, std::string>> cartan = {{"Ta", "Tainv"}, {"Tb", "Tbinv"}};
  for (int axis = 0; axis < 2; ++axis) {
    const auto& [pos, neg] = cartan[axis];
    for (const auto& [name, w] : roots) {
      const int c = detail::pair_with_root(axis + 1, w);
      if (name[0] == 'F') {
        set_swap<QCoeff>(*p, pos, name, t.pow(c));
        set_swap<QCoeff>(*p, neg, name, t.pow(-c));
      } else {
        set_swap<QCoeff>(*p, name, pos, t.pow(-c));
        set_swap<QCoeff>(*p, name, neg, t.pow(c));
      }
    }
  }
  const QCoeff inv = (q - q.inverse()).inverse();
  p->set_rule("E1", "F1", terms<QCoeff>(*p, {{one, 0, "F1 E1"}, {inv, 0, "Ta^3"}, {-inv, 0, "Tainv^3"}}));
  set_swap<QCoeff>(*p, "E1", "F2");
  set_swap<QCoeff>(*p, "E0", "F1");
  set_swap<QCoeff>(*p, "E0", "F2");
  const QCoeff bracket = q + q.inverse();
  auto serre = [&](const std::string& x, const std::string& y) {
    Letter a = p->letter(x), b = p->letter(y);
    return typename GradedBlock<QCoeff>::Coords{
        {Word{char(a), char(a), char(b)}, one}, {Word{char(a), char(b), char(a)}, -bracket},
        {Word{char(b), char(a), char(a)}, one}};
  };
  auto lower = std::make_shared<GradedBlock<QCoeff>>(
      std::vector<Letter>{p->letter("F2"), p->letter("F1")},
      std::vector<GradedBlock<QCoeff>::Coords>{serre("F1", "F2"), serre("F2", "F1")}, degree_bound);
  auto upper = std::make_shared<GradedBlock<QCoeff>>(
      std::vector<Letter>{p->letter("E1"), p->letter("E0")},
      std::vector<GradedBlock<QCoeff>::Coords>{serre("E1", "E0"), serre("E0", "E1")}, degree_bound);
  return std::make_unique<TriangularQuotient<QCoeff>>(p, order, std::vector{lower, upper});
}

/// Names of the PBW generators of U(sl_n): lowering E_ij (i > j), the Cartan
/// elements D_1..D_{n-1}, raising E_ij (i < j).
inline std::vector<std::string> sl_generator_names(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < i; ++j) names.push_back("E" + std::to_string(i) + std::to_string(j));
  for (int p = 1; p < n; ++p) names.push_back("D" + std::to_string(p));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) names.push_back("E" + std::to_string(i) + std::to_string(j));
  return names;
}

/// Defining matrix of a U(sl_n) generator: E_ij is the matrix unit and
/// D_p = diag((n-p)/n, ..., (n-p)/n, -p/n, ..., -p/n) with p leading entries.
inline std::vector<std::vector<Rational>> sl_matrix(int n, const std::string& name) {
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  if (name[0] == 'D') {
    const int p = std::stoi(name.substr(1));
    for (int i = 0; i < n; ++i) {
      m[i][i] = i < p ? Rational(n - p, n) : Rational(-p, n);
      m[i][i].canonicalize();
    }
  } else {
    m[name[1] - '1'][name[2] - '1'] = 1;
  }
  return m;
}

/// Decomposes a traceless matrix in the basis {E_ij, D_p}.
inline std::vector<std::pair<std::string, Rational>> sl_decompose(const std::vector<std::vector<Rational>>& m) {
  const int n = int(m.size());
  std::vector<std::pair<std::string, Rational>> out;
  for (int p = 1; p < n; ++p) {
    Rational c = m[p - 1][p - 1] - m[p][p];
    if (c != 0) out.emplace_back("D" + std::to_string(p), c);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && m[i][j] != 0) out.emplace_back("E" + std::to_string(i + 1) + std::to_string(j + 1), m[i][j]);
  return out;
}

/// U(sl_n) with PBW rules x y -> y x + [x, y] for every out-of-order pair.
inline std::shared_ptr<Presentation<Rational>> usl_presentation(int n) {
  auto names = sl_generator_names(n);
  auto p = std::make_shared<Presentation<Rational>>("Usl" + std::to_string(n), 1, names);
  auto mul = [n](const auto& a, const auto& b) {
    std::vector<std::vector<Rational>> c(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (a[i][k] != 0)
          for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
  };
  for (std::size_t b = 0; b < names.size(); ++b)
    for (std::size_t a = 0; a < b; ++a) {
      auto mb = sl_matrix(n, names[b]), ma = sl_matrix(n, names[a]);
      auto x = mul(mb, ma), y = mul(ma, mb);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x[i][j] -= y[i][j];
      TermList<Rational> rhs{{Rational(1), 0, names[a] + " " + names[b]}};
      for (const auto& [g, c] : sl_decompose(x)) rhs.emplace_back(c, 0, g);
      p->set_rule(names[b], names[a], terms<Rational>(*p, rhs));
    }
  return p;
}

/// q = 1 form of the A-form of D2: [H, f0] = -2 f0, [H, f1] = -2 f1,
/// f1 f0 - f0 f1 = -zeta f0^2.
inline std::shared_ptr<Presentation<Rational>> f2_classical_presentation() {
  auto p = std::make_shared<Presentation<Rational>>("F2cl", 1, std::vector<std::string>{"f0", "H", "f1"});
  const Rational one(1), two(2);
  p->set_rule("H", "f0", terms<Rational>(*p, {{one, 0, "f0 H"}, {-two, 0, "f0"}}));
  p->set_rule("f1", "H", terms<Rational>(*p, {{one, 0, "H f1"}, {two, 0, "f1"}}));
  p->set_rule("f1", "f0", terms<Rational>(*p, {{one, 0, "f0 f1"}, {-one, 1, "f0^2"}}));
  return p;
}

/// Eigenvalues of ad(Ha), ad(Hb) (the q = 1 limits of (q^{h_perp} - 1)/(q - 1))
/// on the non-Cartan generators of F3cl.
inline std::vector<std::tuple<std::string, int, int>> f3_classical_weights() {
  return {{"f2", -2, 0}, {"f0", -2, -2}, {"e_-a", 0, -2}, {"e_a", 0, 2}, {"f3", -2, 0}, {"f1", -2, -2}};
}

/// q = 1 form of the A-form of D3, generators ordered
/// f2 < f0 < e_-a < Ha < Hb < e_a < f3 < f1, where Ha, Hb are the limits of
/// the perpendicular Cartan elements and H_alpha = -Ha/2 + Hb.
inline std::shared_ptr<Presentation<Rational>> f3_classical_presentation() {
  auto p = std::make_shared<Presentation<Rational>>(
      "F3cl", 1, std::vector<std::string>{"f2", "f0", "e_-a", "Ha", "Hb", "e_a", "f3", "f1"});
  const Rational one(1), half(1, 2);
  using T = TermList<Rational>;
  set_swap<Rational>(*p, "f0", "f2");
  p->set_rule("e_-a", "f2", terms<Rational>(*p, T{{one, 0, "f2 e_-a"}, {-one, 0, "f0"}}));
  set_swap<Rational>(*p, "e_-a", "f0");
  set_swap<Rational>(*p, "Hb", "Ha");
  for (const auto& [g, wa, wb] : f3_classical_weights()) {
    const Letter l = p->letter(g);
    for (const auto& [h, w] : {std::pair{std::string("Ha"), wa}, std::pair{std::string("Hb"), wb}}) {
      const Letter hl = p->letter(h);
      // H x = x H + w x  or  x H = H x - w x
      if (hl > l)
        p->set_rule(h, g, terms<Rational>(*p, T{{one, 0, g + " " + h}, {Rational(w), 0, g}}));
      else
        p->set_rule(g, h, terms<Rational>(*p, T{{one, 0, h + " " + g}, {Rational(-w), 0, g}}));
    }
  }
  set_swap<Rational>(*p, "e_a", "f2");
  p->set_rule("e_a", "f0", terms<Rational>(*p, T{{one, 0, "f0 e_a"}, {-one, 0, "f2"}}));
  p->set_rule("e_a", "e_-a",
              terms<Rational>(*p, T{{one, 0, "e_-a e_a"}, {-half, 0, "Ha"}, {one, 0, "Hb"}}));
  p->set_rule("f3", "f2", terms<Rational>(*p, T{{one, 0, "f2 f3"}, {-one, 1, "f2^2"}}));
  p->set_rule("f3", "f0", terms<Rational>(*p, T{{one, 0, "f0 f3"}, {-one, 1, "f2 f0"}}));
  p->set_rule("f3", "e_-a",
              terms<Rational>(*p, T{{one, 0, "e_-a f3"}, {-one, 1, "f0"}, {-one, 0, "f1"}, {one, 1, "f2 e_-a"}}));
  set_swap<Rational>(*p, "f3", "e_a");
  set_swap<Rational>(*p, "f1", "f2");
  p->set_rule("f1", "f0", terms<Rational>(*p, T{{one, 0, "f0 f1"}, {one, 1, "f0^2"}}));
  p->set_rule("f1", "e_-a", terms<Rational>(*p, T{{one, 0, "e_-a f1"}, {one, 1, "f0 e_-a"}}));
  // [e_a, f1] = zeta f2 + f3 + zeta f2 H_alpha
  p->set_rule("f1", "e_a", terms<Rational>(*p, T{{one, 0, "e_a f1"},
                                                  {-one, 1, "f2"},
                                                  {-one, 0, "f3"},
                                                  {half, 1, "f2 Ha"},
                                                  {-one, 1, "f2 Hb"}}));
  p->set_rule("f1", "f3", terms<Rational>(*p, T{{one, 0, "f3 f1"}, {one, 1, "f2 f1"}}));
  return p;
}

}  // namespace qtwist

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qtwist/ncalg/derive.hpp"
#include "qtwist/twists/presentations.hpp"

namespace qtwist {

/// Sum of c zeta^k * word over a term list, reduced in the base.
template <class R>
Element<R> base_element(ReducingBase<R>& base, const TermList<R>& list) {
  Element<R> x(1);
  for (const auto& [c, k, text] : list)
    x += Element<R>::monomial({base.presentation().parse_word(text)}, ZetaSeries<R>(c, k));
  return base.reduce(x);
}

/// Hatted generators of D3 inside the Chevalley presentation:
/// e_-b^ = q^{h_perp_beta/2} e_-b, e_-a^ = q^{-h_perp_beta/2} e_-a,
/// e_a^ = e_a q^{h_perp_(alpha+beta)/2}, e_(d-a-b)^ = q^{-h_perp_(alpha+beta)/2} e_0,
/// and the composite root vectors built from them.
inline DeriveRequest<QCoeff> d3_request(ReducingBase<QCoeff>& chevalley) {
  DeriveRequest<QCoeff> r;
  r.name = "D3";
  r.generators = {"eh_-b", "eh_-a-b", "eh_-a", "Ta", "Tainv", "Tb", "Tbinv", "eh_a", "eh_d-b", "eh_d-a-b"};
  r.inverse_pairs = {{"Ta", "Tainv"}, {"Tb", "Tbinv"}};
  const QCoeff one(1), q = QCoeff::q(3), q2 = q * q;
  auto& b = chevalley;
  r.images["eh_-b"] = base_element<QCoeff>(b, {{one, 0, "Ta^2 Tb F2"}});
  r.images["eh_-a"] = base_element<QCoeff>(b, {{one, 0, "Tainv^2 Tbinv F1"}});
  r.images["eh_a"] = base_element<QCoeff>(b, {{one, 0, "E1 Ta Tbinv"}});
  r.images["eh_d-a-b"] = base_element<QCoeff>(b, {{one, 0, "Tainv Tb E0"}});
  const auto& ea = r.images["eh_a"];
  const auto& e0 = r.images["eh_d-a-b"];
  r.images["eh_d-b"] = b.mul(ea, e0) - b.mul(e0, ea).scaled(q2);
  const auto& fb = r.images["eh_-b"];
  const auto& fa = r.images["eh_-a"];
  r.images["eh_-a-b"] = b.mul(fb, fa) - b.mul(fa, fb).scaled(q2.inverse());
  return r;
}

/// A-form generators of D2: f0 = (q^{-2} - 1) K^{-1} e_-a,
/// f1 = e_{d-a} + zeta K^{-1} e_-a.
inline DeriveRequest<QCoeff> f2a_request(ReducingBase<QCoeff>& d2) {
  DeriveRequest<QCoeff> r;
  r.name = "F2A";
  r.generators = {"f0", "K", "Kinv", "f1"};
  r.inverse_pairs = {{"K", "Kinv"}};
  const QCoeff one(1), q = QCoeff::q(1);
  r.images["f0"] = base_element<QCoeff>(d2, {{q.pow(-2) - one, 0, "Kinv e_-a"}});
  r.images["f1"] = base_element<QCoeff>(d2, {{one, 0, "e_d-a"}, {one, 1, "Kinv e_-a"}});
  return r;
}

/// A-form generators of D3 (q^{h_perp_alpha} = Ta^2 Tb^4, q^{h_perp_beta} = Ta^4 Tb^2):
/// f0 = (q - q^{-1}) e_-a-b, f1 = q^{h_perp_beta} e_d-a-b + q^{-1} zeta e_-a-b,
/// f2 = (1 - q^{-2}) e_-b, f3 = q^{h_perp_alpha} e_d-b - zeta e_-b.
inline DeriveRequest<QCoeff> f3a_request(ReducingBase<QCoeff>& d3) {
  DeriveRequest<QCoeff> r;
  r.name = "F3A";
  r.generators = {"f2", "f0", "eh_-a", "Ta", "Tainv", "Tb", "Tbinv", "eh_a", "f3", "f1"};
  r.inverse_pairs = {{"Ta", "Tainv"}, {"Tb", "Tbinv"}};
  const QCoeff one(1), q = QCoeff::q(3);
  r.images["f0"] = base_element<QCoeff>(d3, {{q - q.inverse(), 0, "eh_-a-b"}});
  r.images["f1"] = base_element<QCoeff>(d3, {{one, 0, "Ta^4 Tb^2 eh_d-a-b"}, {q.inverse(), 1, "eh_-a-b"}});
  r.images["f2"] = base_element<QCoeff>(d3, {{one - q.pow(-2), 0, "eh_-b"}});
  r.images["f3"] = base_element<QCoeff>(d3, {{one, 0, "Ta^2 Tb^4 eh_d-b"}, {-one, 1, "eh_-b"}});
  r.images["eh_-a"] = base_element<QCoeff>(d3, {{one, 0, "eh_-a"}});
  r.images["eh_a"] = base_element<QCoeff>(d3, {{one, 0, "eh_a"}});
  return r;
}

}  // namespace qtwist

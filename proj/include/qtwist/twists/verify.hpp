#pragma once

#include <map>
#include <string>
#include <vector>

#include "qtwist/error.hpp"
#include "qtwist/hopf/cocycle.hpp"
#include "qtwist/twists/derivations.hpp"
#include "qtwist/twists/presentations.hpp"
#include "qtwist/twists/registry.hpp"

namespace qtwist {

/// Catalog names of the three pieces of an affine factorization
/// F = (W (x) W) Phi delta(W^-1).
struct FactorizationNames {
  std::string algebra, gauge, core, twist;
};

inline FactorizationNames affine_factorization(int n) {
  if (n == 2) return {"D2", "gauge_2", "core_twist_2", "affine_twist_2"};
  if (n == 3) return {"D3", "gauge_3", "core_twist_3", "affine_twist_3"};
  throw UnknownObject("no affine factorization for n = " + std::to_string(n));
}

/// F - (W (x) W) Phi delta(W^-1) in two-leg normal form.
inline Element<QCoeff> factorization_residual(Registry& reg, const FactorizationNames& names, int order) {
  auto& ev = reg.evaluator<QCoeff>(order);
  auto& c = reg.context<QCoeff>(names.algebra, order);
  const auto& T1 = c.legs(1);
  const auto& T2 = c.legs(2);
  Element<QCoeff> W = ev.eval(names.algebra, names.gauge).e;
  Element<QCoeff> phi = ev.twist(names.core).expand(T2);
  Element<QCoeff> F = ev.twist(names.twist).expand(T2);
  Element<QCoeff> rhs = T2.mul(T2.mul(tensor(W, W, order), phi), c.delta(T1.inverse(W)));
  return F - rhs;
}

struct IotaReport {
  std::size_t relations = 0, coproducts = 0;
  std::vector<std::string> failures;
  std::size_t residual_terms = 0;
  bool ok() const { return failures.empty(); }
};

/// Checks that a catalog map is an algebra map on every defining rule of the
/// source, and that it intertwines the source coproduct with the target
/// coproduct twisted by `twist_name`: Psi delta(iota x) Psi^-1 = (iota (x) iota) delta(x).
inline IotaReport verify_iota(Registry& reg, const std::string& map_name, const std::string& twist_name,
                              const std::map<std::string, Rational>& params, int order) {
  auto& ev = reg.evaluator<Rational>(order, params);
  const auto& blk = reg.catalog().map(map_name);
  auto& src = reg.context<Rational>(blk.source, order);
  auto& dst = reg.context<Rational>(blk.target, order);
  const auto& T2 = dst.legs(2);
  const auto& p = src.presentation();
  Element<Rational> psi = ev.twist(twist_name).expand(T2);
  Element<Rational> psi_inv = T2.inverse(psi);
  IotaReport rep;
  auto record = [&](const std::string& what, const Element<Rational>& d, const TensorAlgebra<Rational>& T) {
    if (d.is_zero()) return;
    const int k = d.min_zeta_power();
    rep.failures.push_back(what + " at zeta^" + std::to_string(k) + ": " + T.format(d.zeta_component(k)));
    rep.residual_terms += d.term_count();
  };
  for (const auto& r : p.rules()) {
    ++rep.relations;
    const std::string& a = p.generator_name(r.left);
    const std::string& b = p.generator_name(r.right);
    Element<Rational> lhs = src.legs(1).mul(src.gen(a), src.gen(b));
    Element<Rational> rhs(1);
    for (const auto& [w, s] : r.rhs) rhs += Element<Rational>::monomial({std::string_view(w)}, s);
    record("relation " + a + " " + b, ev.apply_map(map_name, lhs) - ev.apply_map(map_name, rhs), dst.legs(1));
  }
  for (const auto& g : p.generator_names()) {
    ++rep.coproducts;
    Element<Rational> img = ev.apply_map(map_name, src.gen(g));
    Element<Rational> lhs = T2.mul(T2.mul(psi, dst.delta(img)), psi_inv);
    record("coproduct of " + g, lhs - ev.apply_map(map_name, src.delta(src.gen(g))), T2);
  }
  return rep;
}

/// F delta(x) F^-1 minus a catalog element holding its expected value.
template <class R>
Element<R> twisted_coproduct_residual(Registry& reg, const std::string& algebra, const std::string& twist_name,
                                      const std::string& generator, const std::string& expected, int order,
                                      const std::map<std::string, R>& params = {}) {
  auto& ev = reg.evaluator<R>(order, params);
  auto& c = reg.context<R>(algebra, order);
  Element<R> F = ev.twist(twist_name).expand(c.legs(2));
  Element<R> x = ev.eval(algebra, generator).e;
  return twisted_coproduct(c, F, x) - ev.eval(algebra, expected).e;
}

/// [e_a^, e_-a^] computed in the Chevalley presentation against its printed
/// value (q^{h_perp_(a+b)} - q^{-h_perp_b}) / (q - q^-1). With printed_signs the
/// hatted lowering generators carry the Cartan prefactors as printed, which
/// are the inverses of the ones the coproducts require.
inline Element<QCoeff> hatted_commutator_residual(bool printed_signs, int degree_bound = 6) {
  auto ch = chevalley_affine_sl3(2, degree_bound);
  auto& b = *ch;
  const QCoeff one(1), q = QCoeff::q(3);
  Element<QCoeff> ea = base_element<QCoeff>(b, {{one, 0, "E1 Ta Tbinv"}});
  Element<QCoeff> fa = base_element<QCoeff>(b, {{one, 0, printed_signs ? "Ta^2 Tb F1" : "Tainv^2 Tbinv F1"}});
  const QCoeff c = (q - q.inverse()).inverse();
  Element<QCoeff> expected = base_element<QCoeff>(b, {{c, 0, "Ta^2 Tbinv^2"}, {-c, 0, "Tainv^4 Tbinv^2"}});
  return b.mul(ea, fa) - b.mul(fa, ea) - expected;
}

}  // namespace qtwist

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qtwist/error.hpp"
#include "qtwist/ncalg/quotient.hpp"
#include "qtwist/twists/derivations.hpp"
#include "qtwist/twists/presentations.hpp"

namespace qtwist {

/// Order used when deriving the zeta-dependent A-form tables.
inline constexpr int kDerivationOrder = 6;
/// Degree bound of the Chevalley oracle for D3.
inline constexpr int kChevalleyDegreeBound = 6;

inline std::vector<std::string> shipped_quantum_algebras() { return {"D2", "D3", "F2A", "F3A"}; }
inline std::vector<std::string> shipped_classical_algebras() { return {"F2cl", "F3cl", "Usl3", "Usl4"}; }

/// D3 from the Chevalley presentation of U_q(affine sl3).
inline std::shared_ptr<Presentation<QCoeff>> build_d3(int degree_bound = kChevalleyDegreeBound) {
  auto ch = chevalley_affine_sl3(2, degree_bound);
  return derive_rule_table(*ch, d3_request(*ch));
}

/// Rebuilds a quantum rule table from its construction (derivations included).
inline std::shared_ptr<Presentation<QCoeff>> build_quantum_presentation(const std::string& name) {
  if (name == "D2") return d2_presentation();
  if (name == "D3") return build_d3();
  if (name == "F2A") {
    RewriteBase<QCoeff> base(d2_presentation(), kDerivationOrder);
    return derive_rule_table(base, f2a_request(base));
  }
  if (name == "F3A") {
    RewriteBase<QCoeff> base(build_d3(), kDerivationOrder);
    return derive_rule_table(base, f3a_request(base));
  }
  throw UnknownObject("no quantum algebra named " + name);
}

inline std::shared_ptr<Presentation<Rational>> build_classical_presentation(const std::string& name) {
  if (name == "F2cl") return f2_classical_presentation();
  if (name == "F3cl") return f3_classical_presentation();
  if (name.rfind("Usl", 0) == 0) return usl_presentation(std::stoi(name.substr(3)));
  throw UnknownObject("no classical algebra named " + name);
}

}  // namespace qtwist

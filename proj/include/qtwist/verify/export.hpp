#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "qtwist/error.hpp"
#include "qtwist/reps/classical.hpp"
#include "qtwist/reps/rmatrix.hpp"
#include "qtwist/twists/registry.hpp"
#include "qtwist/verify/runner.hpp"

namespace qtwist::verify {

struct ExportRequest {
  std::string what;  // rmatrix | twist | r-classical
  int n = 0;
  std::string a = "1";
  std::string name;  // twist only; defaults from n
  int order = 0;     // twist and rmatrix; 0 picks the default
  Format format = Format::json;
};

namespace detail {

inline void require_sl_n(const ExportRequest& r) {
  if (r.n != 3 && r.n != 4)
    throw UnknownObject("no " + r.what + " for n = " + std::to_string(r.n) + " in the catalog (n = 3 or 4)");
  if (r.n != 4 && parse_rational(r.a) != 1) throw ConfigError("the parameter a is defined for n = 4 only");
}

inline std::string rational_latex(const Rational& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  std::string s = c < 0 ? "-" : "";
  return s + "\\frac{" + mpz_class(abs(c.get_num())).get_str() + "}{" + c.get_den().get_str() + "}";
}

/// Sum of c_k zeta^k with signs folded into the separators.
inline std::string poly_string(const ZetaPoly& p, bool latex) {
  if (p.is_zero_series()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : p.terms()) {
    Rational m = abs(c);
    out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    std::string z = k == 0 ? "" : k == 1 ? (latex ? "\\zeta" : "zeta") : (latex ? "\\zeta^{" : "zeta^") + std::to_string(k) + (latex ? "}" : "");
    if (k == 0 || m != 1) {
      out += latex ? rational_latex(m) : m.get_str();
      if (!z.empty()) out += latex ? " " : " ";
    }
    out += z;
  }
  return out;
}

/// E12 -> E_{12}, D3 -> D_{3}.
inline std::string generator_latex(const std::string& g) {
  if (g.size() > 1 && (g[0] == 'E' || g[0] == 'D')) return std::string(1, g[0]) + "_{" + g.substr(1) + "}";
  return "\\mathrm{" + latex_escape(g) + "}";
}

inline std::string export_rmatrix(Registry& reg, const ExportRequest& r) {
  require_sl_n(r);
  const int order = r.order > 0 ? r.order : 4;
  std::map<std::string, Rational> params;
  if (r.n == 4) params["a"] = parse_rational(r.a);
  auto& ev = reg.evaluator<Rational>(order, params);
  auto& c = reg.context<Rational>("Usl" + std::to_string(r.n), order);
  FundamentalRep rep(c.presentation_ptr());
  PolyMatrix R = r_matrix(rep, ev.twist("parabolic_" + std::to_string(r.n)));
  const int dim = R.dim();
  std::ostringstream s;
  switch (r.format) {
    case Format::json: {
      nlohmann::ordered_json j;
      j["object"] = "rmatrix";
      j["n"] = r.n;
      j["a"] = parse_rational(r.a).get_str();
      j["dimension"] = dim;
      j["basis"] = "row and column index i*n + j for e_i (x) e_j, i, j = 0..n-1";
      j["zeta_degree"] = R.degree();
      auto entries = nlohmann::ordered_json::array();
      for (int i = 0; i < dim; ++i)
        for (int k = 0; k < dim; ++k) {
          const auto& p = R.at(i, k);
          if (p.is_zero_series()) continue;
          nlohmann::ordered_json e;
          e["row"] = i;
          e["col"] = k;
          auto coeffs = nlohmann::ordered_json::array();
          for (const auto& [pw, cf] : p.terms()) coeffs.push_back({{"zeta", pw}, {"coefficient", cf.get_str()}});
          e["polynomial"] = std::move(coeffs);
          entries.push_back(std::move(e));
        }
      j["entries"] = std::move(entries);
      s << j.dump(2) << "\n";
      break;
    }
    case Format::latex: {
      s << "\\setcounter{MaxMatrixCols}{" << dim << "}\n";
      s << "R = \\begin{pmatrix}\n";
      for (int i = 0; i < dim; ++i) {
        for (int k = 0; k < dim; ++k) s << (k ? " & " : "  ") << poly_string(R.at(i, k), true);
        s << (i + 1 < dim ? " \\\\\n" : "\n");
      }
      s << "\\end{pmatrix}\n";
      break;
    }
    case Format::text: {
      s << "R-matrix n=" << r.n << " a=" << parse_rational(r.a).get_str() << " dimension " << dim << "\n";
      for (int i = 0; i < dim; ++i)
        for (int k = 0; k < dim; ++k)
          if (!R.at(i, k).is_zero_series()) s << "R[" << i << "," << k << "] = " << poly_string(R.at(i, k), false) << "\n";
      break;
    }
  }
  return s.str();
}

inline std::string r_classical_latex(const std::vector<WedgeTerm>& terms) {
  std::string out = "r = ";
  bool first = true;
  for (const auto& t : terms) {
    Rational m = abs(t.coeff);
    out += first ? (t.coeff < 0 ? "-" : "") : (t.coeff < 0 ? " - " : " + ");
    first = false;
    if (m != 1) out += rational_latex(m) + "\\,";
    out += generator_latex(t.left) + "\\wedge " + generator_latex(t.right);
  }
  return out + "\n";
}

inline std::string export_r_classical(const ExportRequest& r) {
  require_sl_n(r);
  auto terms = classical_r_terms(r.n, parse_rational(r.a));
  std::ostringstream s;
  switch (r.format) {
    case Format::json: {
      nlohmann::ordered_json j;
      j["object"] = "r-classical";
      j["n"] = r.n;
      j["a"] = parse_rational(r.a).get_str();
      j["convention"] = "x ^ y = x (x) y - y (x) x";
      auto arr = nlohmann::ordered_json::array();
      for (const auto& t : terms) arr.push_back({{"coefficient", t.coeff.get_str()}, {"left", t.left}, {"right", t.right}});
      j["terms"] = std::move(arr);
      s << j.dump(2) << "\n";
      break;
    }
    case Format::latex: s << r_classical_latex(terms); break;
    case Format::text: {
      bool first = true;
      for (const auto& t : terms) {
        s << (first ? "" : " + ");
        first = false;
        if (t.coeff != 1) s << t.coeff.get_str() << " ";
        s << t.left << " ^ " << t.right;
      }
      s << "\n";
      break;
    }
  }
  return s.str();
}

inline std::string default_twist(int n) {
  switch (n) {
    case 2: return "affine_twist_2";
    case 3: return "parabolic_3";
    case 4: return "parabolic_4";
  }
  throw UnknownObject("no default twist for n = " + std::to_string(n) + " (n = 2, 3, 4, or pass --name)");
}

inline int default_twist_order(const std::string& algebra) {
  if (algebra == "D2" || algebra == "F2A") return 6;
  if (algebra == "D3" || algebra == "F3A") return 3;
  return 4;
}

template <class R>
std::string export_twist_as(Registry& reg, const std::string& name, const std::string& algebra, int order,
                            const std::map<std::string, R>& params, const ExportRequest& r) {
  auto& c = reg.context<R>(algebra, order);
  const auto& T2 = c.legs(2);
  const Element<R>& F = reg.evaluator<R>(order, params).twist(name).expand(T2);
  const auto& p = c.presentation();
  std::ostringstream s;
  switch (r.format) {
    case Format::json: {
      nlohmann::ordered_json j;
      j["object"] = "twist";
      j["name"] = name;
      j["algebra"] = algebra;
      j["zeta_order"] = order;
      if (!params.empty()) j["a"] = format_scalar(params.begin()->second);
      auto arr = nlohmann::ordered_json::array();
      for (const auto& k : F.sorted_keys()) {
        auto parts = keys::split(k);
        nlohmann::ordered_json legs = nlohmann::ordered_json::array();
        for (auto w : parts) legs.push_back(p.format_word(w));
        for (const auto& [pw, cf] : F.terms().at(k).terms())
          arr.push_back({{"legs", legs}, {"zeta", pw}, {"coefficient", format_scalar(cf, p.root_degree())}});
      }
      j["terms"] = std::move(arr);
      s << j.dump(2) << "\n";
      break;
    }
    case Format::text: s << T2.format(F); break;
    case Format::latex: {
      s << "\\begin{align*}\n" << name << " &= ";
      bool first = true;
      for (const auto& k : F.sorted_keys()) {
        auto parts = keys::split(k);
        std::string w;
        for (std::size_t i = 0; i < parts.size(); ++i) {
          std::string leg = parts[i].empty() ? "1" : latex_escape(p.format_word(parts[i]));
          w += (i ? " \\otimes " : "") + std::string("\\mathtt{") + leg + "}";
        }
        for (const auto& [pw, cf] : F.terms().at(k).terms()) {
          s << (first ? "" : "\\\\\n  &+ ") << "\\left[" << latex_escape(format_scalar(cf, p.root_degree())) << "\\right]";
          if (pw > 0) s << "\\zeta^{" << pw << "}";
          s << " " << w;
          first = false;
        }
      }
      s << "\n\\end{align*}\n";
      break;
    }
  }
  return s.str();
}

inline std::string export_twist(Registry& reg, const ExportRequest& r) {
  const std::string name = r.name.empty() ? default_twist(r.n) : r.name;
  const auto* d = reg.catalog().find(name);
  if (!d || d->kind != "twist") throw UnknownObject("no twist named '" + name + "' in the catalog");
  const int order = r.order > 0 ? r.order : default_twist_order(d->context);
  if (is_quantum_algebra(d->context)) return export_twist_as<QCoeff>(reg, name, d->context, order, {}, r);
  std::map<std::string, Rational> params;
  if (name == "parabolic_4" || parse_rational(r.a) != 1) params["a"] = parse_rational(r.a);
  return export_twist_as<Rational>(reg, name, d->context, order, params, r);
}

}  // namespace detail

inline std::string export_object(Registry& reg, const ExportRequest& r) {
  if (r.what == "rmatrix") return detail::export_rmatrix(reg, r);
  if (r.what == "r-classical") return detail::export_r_classical(r);
  if (r.what == "twist") return detail::export_twist(reg, r);
  throw UnknownObject("unknown export object '" + r.what + "' (rmatrix, twist, r-classical)");
}

/// File name used when exporting into a directory.
inline std::string export_file_name(const ExportRequest& r) {
  std::string base = r.what;
  if (r.what == "twist" && !r.name.empty()) base += "-" + r.name;
  else if (r.n > 0) base += "-n" + std::to_string(r.n);
  if (parse_rational(r.a) != 1 || (r.what != "twist" && r.n == 4)) {
    std::string a = parse_rational(r.a).get_str();
    for (auto& ch : a)
      if (ch == '/') ch = '_';
    base += "-a" + a;
  }
  switch (r.format) {
    case Format::json: return base + ".json";
    case Format::latex: return base + ".tex";
    case Format::text: return base + ".txt";
  }
  return base;
}

}  // namespace qtwist::verify

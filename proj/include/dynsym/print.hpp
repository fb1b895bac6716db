#ifndef DYNSYM_PRINT_HPP
#define DYNSYM_PRINT_HPP

#include <sstream>
#include <string>

#include "dynsym/expr.hpp"

namespace dynsym {

namespace detail {

inline std::string monomial_str(const GaussRat& g, int lam_deg, int r_deg) {
  std::string s = "(" + g.str() + ")";
  if (lam_deg == 1) s += "*lam";
  else if (lam_deg > 1) s += "*lam^" + std::to_string(lam_deg);
  if (r_deg == 1) s += "*r";
  else if (r_deg != 0) s += "*r^" + std::to_string(r_deg);
  return s;
}

inline std::string poly_str(const BPoly& p, int r_shift = 0) {
  if (p.is_zero()) return "(0)";
  std::string out;
  for (int k = 0; k <= p.degree(); ++k) {
    const UPoly& c = p.coeff(k);
    for (int j = 0; j <= c.degree(); ++j) {
      if (c.coeff(j).is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += monomial_str(c.coeff(j), j, k + r_shift);
    }
  }
  return out;
}

// true if p is exactly r^k (unit coefficient)
inline bool is_unit_r_power(const BPoly& p, int& k) {
  if (p.is_zero()) return false;
  for (int d = 0; d < p.degree(); ++d)
    if (!p.coeff(d).is_zero()) return false;
  if (!(p.lead().is_constant() && p.lead().coeff(0).is_one())) return false;
  k = p.degree();
  return true;
}

inline std::string coeff_str(const Coeff& c) {
  int k = 0;
  bool den_r = is_unit_r_power(c.den(), k);
  const BPoly& num = c.num();
  bool single = true;
  {
    int nm = 0;
    for (int d = 0; d <= num.degree(); ++d)
      for (int j = 0; j <= num.coeff(d).degree(); ++j)
        if (!num.coeff(d).coeff(j).is_zero()) ++nm;
    single = (nm == 1);
  }
  if (den_r && single) {
    for (int d = 0; d <= num.degree(); ++d)
      for (int j = 0; j <= num.coeff(d).degree(); ++j)
        if (!num.coeff(d).coeff(j).is_zero())
          return monomial_str(num.coeff(d).coeff(j), j, d - k);
  }
  std::string s = "(" + poly_str(num) + ")";
  if (!c.den().is_one()) s += "/(" + poly_str(c.den()) + ")";
  return s;
}

inline std::string key_str(const TermKey& key) {
  std::string s;
  for (size_t i = 0; i < key.x.size(); ++i) {
    if (key.x[i] == 0) continue;
    s += "*x" + std::to_string(i + 1);
    if (key.x[i] > 1) s += "^" + std::to_string(key.x[i]);
  }
  for (size_t i = 0; i < key.p.size(); ++i) {
    if (key.p[i] == 0) continue;
    s += "*p" + std::to_string(i + 1);
    if (key.p[i] > 1) s += "^" + std::to_string(key.p[i]);
  }
  return s;
}

}  // namespace detail

// Stable text form, e.g. "(-i)*lam*r^-1*s^1*x1*p2"; terms ordered by canonical
// key, plain part before the s part.
inline std::string to_string(const OperatorExpr& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [key, rc] : e.terms()) {
    std::string tail = detail::key_str(key);
    if (!rc.plain().is_zero()) {
      if (!out.empty()) out += " + ";
      out += detail::coeff_str(rc.plain()) + tail;
    }
    if (!rc.s_part().is_zero()) {
      if (!out.empty()) out += " + ";
      out += detail::coeff_str(rc.s_part()) + "*s^1" + tail;
    }
  }
  return out;
}

}  // namespace dynsym

#endif

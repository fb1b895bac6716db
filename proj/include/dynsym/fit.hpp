#ifndef DYNSYM_FIT_HPP
#define DYNSYM_FIT_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "dynsym/print.hpp"
#include "dynsym/systems.hpp"

namespace dynsym {

struct FitBounds {
  int total_degree = 3;  // in (H, Lsq, L12)
  int lam_degree = 4;
};

// target = sum over (a,b,c) of coeff_{abc}(lam) * H^a Lsq^b L12^c
struct FitResult {
  std::map<std::array<int, 3>, UPoly> coeffs;  // (a,b,c) -> polynomial in lam
  LsqConvention convention = LsqConvention::half;
  bool ambiguous = false;

  bool is_zero() const { return coeffs.empty(); }

  std::string str() const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (const auto& [abc, c] : coeffs) {
      if (!out.empty()) out += " + ";
      std::string mono;
      const char* names[3] = {"H", "Lsq", "L12"};
      for (int k = 0; k < 3; ++k) {
        if (abc[k] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[k];
        if (abc[k] > 1) mono += "^" + std::to_string(abc[k]);
      }
      std::string cs = "(" + detail::poly_str(BPoly(c)) + ")";
      out += mono.empty() ? cs : cs + "*" + mono;
    }
    return out;
  }

  // Rebuild sum coeff_{abc}(lam) H^a Lsq^b L12^c as an operator.
  OperatorExpr rebuild(const GeneratorSet& g) const {
    int N = g.spec.dim;
    OperatorExpr acc(N);
    for (const auto& [abc, c] : coeffs) {
      OperatorExpr m = OperatorExpr::constant(GaussRat(1), N);
      for (int k = 0; k < abc[0]; ++k) m = m * g.H;
      for (int k = 0; k < abc[1]; ++k) m = m * g.Lsq;
      for (int k = 0; k < abc[2]; ++k) m = m * g.L12();
      acc += m.scale(RadialCoeff(Coeff(BPoly(c))));
    }
    return acc;
  }
};

namespace detail {

inline BPoly bpoly_lcm(const BPoly& a, const BPoly& b) {
  if (a.is_zero() || b.is_zero()) return BPoly();
  return a * (b / BPoly::gcd(a, b));
}

// Incremental exact row reduction over Q(i).
class LinearSolver {
 public:
  explicit LinearSolver(size_t ncols) : ncols_(ncols) {}

  // row has ncols_ coefficients plus rhs appended
  bool add_row(std::vector<GaussRat> row) {
    for (size_t c = 0; c < ncols_; ++c) {
      if (row[c].is_zero()) continue;
      auto it = pivots_.find(c);
      if (it == pivots_.end()) {
        GaussRat inv = GaussRat(1) / row[c];
        for (auto& v : row) v *= inv;
        pivots_.emplace(c, std::move(row));
        return true;
      }
      GaussRat f = row[c];
      const auto& prow = it->second;
      for (size_t k = c; k <= ncols_; ++k) row[k] -= f * prow[k];
    }
    return row[ncols_].is_zero();  // false -> inconsistent
  }

  // free variables set to zero
  std::vector<GaussRat> solve(bool& ambiguous) const {
    std::vector<GaussRat> sol(ncols_);
    ambiguous = false;
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      size_t c = it->first;
      const auto& row = it->second;
      GaussRat v = row[ncols_];
      for (size_t k = c + 1; k < ncols_; ++k) {
        if (row[k].is_zero()) continue;
        if (!pivots_.count(k)) ambiguous = true;
        v -= row[k] * sol[k];
      }
      sol[c] = v;
    }
    return sol;
  }

 private:
  size_t ncols_;
  std::map<size_t, std::vector<GaussRat>> pivots_;
};

}  // namespace detail

// Exact fit of target as a polynomial in (H, Lsq, L12) with lam-polynomial
// coefficients, by canonical expansion and exact elimination.  Throws NoFit
// when no combination within the bounds reproduces the target.
inline FitResult fit_scalar(const OperatorExpr& target, const GeneratorSet& g,
                            FitBounds bounds = {}) {
  int N = g.spec.dim;
  if (target.dim() != N) throw DimensionMismatch("fit_scalar: dimension mismatch");

  std::vector<std::array<int, 3>> basis;
  for (int a = 0; a <= bounds.total_degree; ++a)
    for (int b = 0; a + b <= bounds.total_degree; ++b)
      for (int c = 0; a + b + c <= bounds.total_degree; ++c) basis.push_back({a, b, c});

  std::vector<OperatorExpr> basis_exprs;
  basis_exprs.reserve(basis.size());
  for (const auto& abc : basis) {
    OperatorExpr m = OperatorExpr::constant(GaussRat(1), N);
    for (int k = 0; k < abc[0]; ++k) m = m * g.H;
    for (int k = 0; k < abc[1]; ++k) m = m * g.Lsq;
    for (int k = 0; k < abc[2]; ++k) m = m * g.L12();
    basis_exprs.push_back(std::move(m));
  }

  int nlam = bounds.lam_degree + 1;
  size_t nunk = basis.size() * nlam;  // u[b * nlam + d] multiplies lam^d * basis[b]
  detail::LinearSolver solver(nunk);

  // union of canonical keys
  std::map<TermKey, char> keys;
  for (const auto& [k, c] : target.terms()) keys[k] = 1;
  for (const auto& be : basis_exprs)
    for (const auto& [k, c] : be.terms()) keys[k] = 1;

  bool consistent = true;
  for (const auto& [key, unused] : keys) {
    for (int part = 0; part < 2; ++part) {
      auto pick = [&](const RadialCoeff& rc) -> const Coeff& {
        return part == 0 ? rc.plain() : rc.s_part();
      };
      // common denominator across all contributions at this key/part
      BPoly D(GaussRat(1));
      RadialCoeff trc = target.coeff(key);
      std::vector<RadialCoeff> brc(basis.size());
      for (size_t b = 0; b < basis.size(); ++b) brc[b] = basis_exprs[b].coeff(key);
      if (!pick(trc).is_zero()) D = detail::bpoly_lcm(D, pick(trc).den());
      for (size_t b = 0; b < basis.size(); ++b)
        if (!pick(brc[b]).is_zero()) D = detail::bpoly_lcm(D, pick(brc[b]).den());
      // scaled numerators; rows indexed by (lam_deg, r_deg) monomials
      std::map<std::pair<int, int>, std::vector<GaussRat>> rows;
      auto add_poly = [&](const BPoly& poly, size_t col, const GaussRat& sign) {
        for (int rd = 0; rd <= poly.degree(); ++rd)
          for (int ld = 0; ld <= poly.coeff(rd).degree(); ++ld) {
            GaussRat v = poly.coeff(rd).coeff(ld);
            if (v.is_zero()) continue;
            auto& row = rows[{ld, rd}];
            if (row.empty()) row.assign(nunk + 1, GaussRat());
            row[col] += sign * v;
          }
      };
      for (size_t b = 0; b < basis.size(); ++b) {
        const Coeff& c = pick(brc[b]);
        if (c.is_zero()) continue;
        BPoly scaled = c.num() * (D / c.den());
        for (int d = 0; d < nlam; ++d)
          add_poly(scaled * UPoly::lam_pow(d), b * nlam + d, GaussRat(1));
      }
      if (!pick(trc).is_zero()) {
        const Coeff& c = pick(trc);
        add_poly(c.num() * (D / c.den()), nunk, GaussRat(1));
      }
      for (auto& [mono, row] : rows) consistent = consistent && solver.add_row(std::move(row));
    }
  }
  if (!consistent) throw NoFit("fit_scalar: no solution within degree bounds");

  FitResult res;
  res.convention = g.spec.lsq_convention;
  auto sol = solver.solve(res.ambiguous);
  for (size_t b = 0; b < basis.size(); ++b) {
    std::vector<GaussRat> cs(nlam);
    bool nz = false;
    for (int d = 0; d < nlam; ++d) {
      cs[d] = sol[b * nlam + d];
      nz = nz || !cs[d].is_zero();
    }
    if (nz) res.coeffs[basis[b]] = UPoly(std::move(cs));
  }
  // exactness is the definition of success
  if (!(res.rebuild(g) - target).is_zero())
    throw NoFit("fit_scalar: residual nonzero after elimination");
  return res;
}

}  // namespace dynsym

#endif

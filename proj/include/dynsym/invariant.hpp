#ifndef DYNSYM_INVARIANT_HPP
#define DYNSYM_INVARIANT_HPP

#include "dynsym/expr.hpp"

namespace dynsym {

inline OperatorExpr angular_momentum(int i, int j, int dim) {
  return OperatorExpr::x(i, dim) * OperatorExpr::p(j, dim) -
         OperatorExpr::x(j, dim) * OperatorExpr::p(i, dim);
}

inline OperatorExpr p_squared(int dim) {
  OperatorExpr e(dim);
  for (int i = 1; i <= dim; ++i) e += OperatorExpr::p(i, dim) * OperatorExpr::p(i, dim);
  return e;
}

inline OperatorExpr x_dot_p(int dim) {
  OperatorExpr e(dim);
  for (int i = 1; i <= dim; ++i) e += OperatorExpr::x(i, dim) * OperatorExpr::p(i, dim);
  return e;
}

// sum_{i<j} L_ij^2 (the "half" index convention)
inline OperatorExpr lsq_half(int dim) {
  OperatorExpr e(dim);
  for (int i = 1; i <= dim; ++i)
    for (int j = i + 1; j <= dim; ++j) {
      auto l = angular_momentum(i, j, dim);
      e += l * l;
    }
  return e;
}

// Rotation-invariant decomposition: a = c_psq p^2 + c_D (x.p) + c_Lsq L^2 + c_1
// with L^2 = sum_{i<j} L_ij^2 and radial-function coefficients.
struct InvariantForm {
  int dim = 0;
  RadialCoeff c_psq, c_D, c_Lsq, c_1;

  OperatorExpr rebuild() const {
    return p_squared(dim).scale(c_psq) + x_dot_p(dim).scale(c_D) +
           lsq_half(dim).scale(c_Lsq) + OperatorExpr::constant(c_1, dim);
  }
};

// Solves for the four radial coefficients by reading off canonical keys that
// each receive contributions from a single basis operator, then verifies the
// rebuild exactly.
inline InvariantForm collect_invariants(const OperatorExpr& a, int dim) {
  if (a.dim() != dim) throw DimensionMismatch("collect_invariants: dimension mismatch");
  if (dim < 2) throw DimensionMismatch("collect_invariants: need dim >= 2");
  OperatorExpr L2 = lsq_half(dim);

  auto unit = [&](int i) {
    std::vector<int> v(dim, 0);
    v[i] = 1;
    return v;
  };
  std::vector<int> zero(dim, 0);

  // key x1 x2 p1 p2: only L^2 contributes (coefficient -2 from L_12^2)
  std::vector<int> e12 = unit(0);
  e12[1] = 1;
  RadialCoeff rho = L2.coeff(e12, e12);  // -2
  InvariantForm inv;
  inv.dim = dim;
  inv.c_Lsq = a.coeff(e12, e12) * rho.inverse();

  // key p1^2 (no x): p^2 gives 1, L^2 gives a radial factor
  std::vector<int> p1sq = zero;
  p1sq[0] = 2;
  inv.c_psq = a.coeff(zero, p1sq) - inv.c_Lsq * L2.coeff(zero, p1sq);

  // key x1 p1: x.p gives 1, L^2 gives i(N-1)
  inv.c_D = a.coeff(unit(0), unit(0)) - inv.c_Lsq * L2.coeff(unit(0), unit(0));

  OperatorExpr residual = a - p_squared(dim).scale(inv.c_psq) -
                          x_dot_p(dim).scale(inv.c_D) - L2.scale(inv.c_Lsq);
  inv.c_1 = residual.coeff(zero, zero);
  residual -= OperatorExpr::constant(inv.c_1, dim);
  if (!residual.is_zero())
    throw IrreducibleToInvariants(
        "collect_invariants: residual outside the {1, x.p, p^2, L^2} ansatz");
  return inv;
}

}  // namespace dynsym

#endif

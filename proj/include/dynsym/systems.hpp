#ifndef DYNSYM_SYSTEMS_HPP
#define DYNSYM_SYSTEMS_HPP

#include <map>
#include <string>
#include <vector>

#include "dynsym/invariant.hpp"

namespace dynsym {

enum class Family { coulomb, oscillator };
enum class LsqConvention { half, full };  // sum_{i<j} vs sum_{i,j}

inline std::string family_name(Family f) {
  return f == Family::coulomb ? "coulomb" : "oscillator";
}
inline std::string convention_name(LsqConvention c) {
  return c == LsqConvention::half ? "half" : "full";
}

struct SystemSpec {
  Family family = Family::coulomb;
  int dim = 2;
  LsqConvention lsq_convention = LsqConvention::half;
};

// pi_i = (s p_i + p_i s) / 2  with  s = sqrt(1 + lam r^2)
inline OperatorExpr pi_op(int i, int dim) {
  auto s = OperatorExpr::s_pow(1, dim);
  auto p = OperatorExpr::p(i, dim);
  return (s * p + p * s).scale(GaussRat(Rational(1, 2)));
}

inline OperatorExpr lsq_op(int dim, LsqConvention conv) {
  auto h = lsq_half(dim);
  return conv == LsqConvention::half ? h : h + h;
}

inline OperatorExpr pi_squared(int dim) {
  OperatorExpr e(dim);
  for (int i = 1; i <= dim; ++i) {
    auto pi = pi_op(i, dim);
    e += pi * pi;
  }
  return e;
}

struct GeneratorSet {
  SystemSpec spec;
  std::map<std::pair<int, int>, OperatorExpr> L;  // i<j
  std::vector<OperatorExpr> pi;                   // pi[i-1]
  OperatorExpr Lsq;
  OperatorExpr H;

  // Coulomb ladder: R[i-1]; 2-D per the reference construction, N-dim via the
  // symmetrized L_ij pi_j combination (see build_coulomb).
  std::vector<OperatorExpr> R;
  // Oscillator generators
  OperatorExpr Q_xy, Q_1;                          // dim 2 only
  std::map<std::pair<int, int>, OperatorExpr> S;   // i<=j

  const OperatorExpr& L12() const { return L.at({1, 2}); }
};

inline GeneratorSet build_common(const SystemSpec& spec) {
  if (spec.dim < 2) throw DimensionMismatch("build: need dim >= 2");
  GeneratorSet g;
  g.spec = spec;
  int N = spec.dim;
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) g.L[{i, j}] = angular_momentum(i, j, N);
  for (int i = 1; i <= N; ++i) g.pi.push_back(pi_op(i, N));
  g.Lsq = lsq_op(N, spec.lsq_convention);
  return g;
}

// R_i = 1/2 sum_{j != i} (L_ij pi_j + pi_j L_ij) - x_i / r, with L_ij = -L_ji.
// The reference text prints the antisymmetrized combination for general N, but
// that one is anti-Hermitian; the symmetrized form reproduces the 2-D
// components exactly, so it is the one built here.  The printed variant is
// available separately for difference reporting.
inline OperatorExpr coulomb_R(int i, int dim, bool symmetrized = true) {
  int N = dim;
  OperatorExpr acc(N);
  for (int j = 1; j <= N; ++j) {
    if (j == i) continue;
    OperatorExpr Lij = angular_momentum(i, j, N);
    OperatorExpr pj = pi_op(j, N);
    acc += symmetrized ? (Lij * pj + pj * Lij) : (Lij * pj - pj * Lij);
  }
  acc = acc.scale(GaussRat(Rational(1, 2)));
  acc -= OperatorExpr::x(i, N) * OperatorExpr::r_pow(-1, N);
  return acc;
}

// Semiclassical 2-D ansatz R_1 = (f p_2 L_12 + L_12 p_2 f)/2 + g x_1 and the
// corresponding R_2, with f = s, g = -1/r; differs from the Hermitian form.
inline OperatorExpr coulomb_R_semiclassical(int i, int dim) {
  if (dim != 2 || (i != 1 && i != 2))
    throw IndexError("coulomb_R_semiclassical: 2-D components only");
  int N = dim;
  auto f = OperatorExpr::s_pow(1, N);
  auto L12 = angular_momentum(1, 2, N);
  int other = (i == 1) ? 2 : 1;
  auto pk = OperatorExpr::p(other, N);
  auto sym = (f * pk * L12 + L12 * pk * f).scale(GaussRat(Rational(1, 2)));
  if (i == 2) sym = -sym;
  return sym - OperatorExpr::x(i, N) * OperatorExpr::r_pow(-1, N);
}

inline GeneratorSet build_coulomb(const SystemSpec& spec) {
  GeneratorSet g = build_common(spec);
  int N = spec.dim;
  for (int i = 1; i <= N; ++i) g.R.push_back(coulomb_R(i, N));
  // H = pi^2/2 - lam Lsq/2 - s/r
  g.H = pi_squared(N).scale(GaussRat(Rational(1, 2))) -
        g.Lsq.scale(RadialCoeff(Coeff::lam() * Coeff(GaussRat(Rational(1, 2))))) -
        OperatorExpr::s_pow(1, N) * OperatorExpr::r_pow(-1, N);
  return g;
}

inline OperatorExpr oscillator_S(int i, int j, int dim) {
  int N = dim;
  auto pi = pi_op(i, N), pj = pi_op(j, N);
  Coeff ginv = RadialCoeff::s_squared();  // 1 + lam r^2
  auto xx = (OperatorExpr::x(i, N) * OperatorExpr::x(j, N)).scale(RadialCoeff(Coeff(GaussRat(1)) / ginv));
  return (pi * pj + pj * pi).scale(GaussRat(Rational(1, 2))) + xx;
}

// The section-4 ansatz forms (before pi-symmetrization), for comparison:
//   Q_xy = (f p1 p2 + p1 p2 f)/2 + g x1 x2
//   Q_1  = g (x1^2 - x2^2)/2 + (f p1^2 + p1^2 f - f p2^2 - p2^2 f)/4
// with f = 1 + lam r^2, g = 1/(1 + lam r^2).
inline OperatorExpr oscillator_Q_ansatz(bool xy, int dim) {
  int N = dim;
  auto f = OperatorExpr::constant(RadialCoeff(RadialCoeff::s_squared()), N);
  RadialCoeff gc = RadialCoeff(Coeff(GaussRat(1)) / RadialCoeff::s_squared());
  auto p1 = OperatorExpr::p(1, N), p2 = OperatorExpr::p(2, N);
  auto x1 = OperatorExpr::x(1, N), x2 = OperatorExpr::x(2, N);
  if (xy) {
    auto pp = p1 * p2;
    return (f * pp + pp * f).scale(GaussRat(Rational(1, 2))) + (x1 * x2).scale(gc);
  }
  auto p1sq = p1 * p1, p2sq = p2 * p2;
  return (x1 * x1 - x2 * x2).scale(gc).scale(GaussRat(Rational(1, 2))) +
         (f * p1sq + p1sq * f - f * p2sq - p2sq * f).scale(GaussRat(Rational(1, 4)));
}

inline GeneratorSet build_oscillator(const SystemSpec& spec) {
  GeneratorSet g = build_common(spec);
  int N = spec.dim;
  for (int i = 1; i <= N; ++i)
    for (int j = i; j <= N; ++j) g.S[{i, j}] = oscillator_S(i, j, N);
  if (N >= 2) {
    g.Q_xy = g.S.at({1, 2});
    // Q_1 = (S_11 - S_22) / 2
    g.Q_1 = (g.S.at({1, 1}) - g.S.at({2, 2})).scale(GaussRat(Rational(1, 2)));
  }
  // H = pi^2/2 - lam Lsq/2 + (r^2/2) / (1 + lam r^2)
  Coeff pot = Coeff::r_pow(2) * Coeff(GaussRat(Rational(1, 2))) / RadialCoeff::s_squared();
  g.H = pi_squared(N).scale(GaussRat(Rational(1, 2))) -
        g.Lsq.scale(RadialCoeff(Coeff::lam() * Coeff(GaussRat(Rational(1, 2))))) +
        OperatorExpr::constant(RadialCoeff(pot), N);
  return g;
}

inline GeneratorSet build_system(const SystemSpec& spec) {
  return spec.family == Family::coulomb ? build_coulomb(spec) : build_oscillator(spec);
}

inline GeneratorSet subst_lam(const GeneratorSet& g, const GaussRat& lam) {
  GeneratorSet out;
  out.spec = g.spec;
  for (const auto& [ij, e] : g.L) out.L[ij] = e.subst_lam(lam);
  for (const auto& e : g.pi) out.pi.push_back(e.subst_lam(lam));
  out.Lsq = g.Lsq.subst_lam(lam);
  out.H = g.H.subst_lam(lam);
  for (const auto& e : g.R) out.R.push_back(e.subst_lam(lam));
  if (g.Q_xy.dim() > 0) out.Q_xy = g.Q_xy.subst_lam(lam);
  if (g.Q_1.dim() > 0) out.Q_1 = g.Q_1.subst_lam(lam);
  for (const auto& [ij, e] : g.S) out.S[ij] = e.subst_lam(lam);
  return out;
}

}  // namespace dynsym

#endif

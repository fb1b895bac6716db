#ifndef DYNSYM_LADDER_HPP
#define DYNSYM_LADDER_HPP

#include <optional>
#include <string>
#include <vector>

#include "dynsym/fit.hpp"

namespace dynsym {

struct Discrepancy {
  std::string tag;       // which printed equation
  std::string printed;   // the formula as printed
  std::string computed;  // what canonical reduction gives
  bool match = false;
};

struct LadderReport {
  int step = 0;
  std::string raising, lowering;  // how T+ / T- are assembled
  FitResult F_fit, G_fit;         // [T+,T-] and {T+,T-}
  std::vector<Discrepancy> discrepancies;
};

namespace detail {

inline OperatorExpr lam_scale(const OperatorExpr& e, int pow = 1) {
  Coeff l = Coeff::lam();
  Coeff acc(GaussRat(1));
  for (int k = 0; k < pow; ++k) acc *= l;
  return e.scale(RadialCoeff(acc));
}

inline Discrepancy compare(const std::string& tag, const std::string& printed_form,
                           const OperatorExpr& printed, const OperatorExpr& computed) {
  Discrepancy d;
  d.tag = tag;
  d.printed = printed_form;
  d.match = equals(printed, computed);
  d.computed = d.match ? "match" : to_string(computed - printed) + " (computed - printed)";
  return d;
}

}  // namespace detail

// Verifies the step-1 (Coulomb) or step-2 (oscillator) ladder algebra in 2-D,
// fits F and G exactly, and compares against every printed identity.
inline LadderReport verify_ladder(const GeneratorSet& g, int step, FitBounds bounds = {},
                                  std::optional<GaussRat> lam_value = std::nullopt) {
  if (g.spec.dim != 2) throw DimensionMismatch("verify_ladder: ladder analysis is 2-D");
  int N = 2;
  bool coulomb = g.spec.family == Family::coulomb;
  if (step != (coulomb ? 1 : 2))
    throw LadderViolation("verify_ladder: step must be 1 (coulomb) or 2 (oscillator)");

  GaussRat i = GaussRat::i();
  OperatorExpr Tp(N), Tm(N);
  LadderReport rep;
  rep.step = step;
  if (coulomb) {
    Tp = g.R[0] + g.R[1].scale(i);
    Tm = g.R[0] - g.R[1].scale(i);
    rep.raising = "T+ = R1 + i*R2";
    rep.lowering = "T- = R1 - i*R2";
  } else {
    Tp = g.Q_xy - g.Q_1.scale(i);
    Tm = g.Q_xy + g.Q_1.scale(i);
    rep.raising = "T+ = Q_xy - i*Q_1";
    rep.lowering = "T- = Q_xy + i*Q_1";
  }
  if (Tp.is_zero() || Tm.is_zero())
    throw LadderViolation("verify_ladder: degenerate ladder operators (T_+- = 0)");

  auto L12 = g.L12();
  if (!equals(commutator(L12, Tp), Tp.scale(GaussRat(Rational(step)))))
    throw LadderViolation("verify_ladder: [L12,T+] != +step*T+");
  if (!equals(commutator(L12, Tm), Tm.scale(GaussRat(Rational(-step)))))
    throw LadderViolation("verify_ladder: [L12,T-] != -step*T-");
  if (!equals(Tm, Tp.adjoint()))
    throw LadderViolation("verify_ladder: T- != adjoint(T+)");

  OperatorExpr comm = commutator(Tp, Tm);
  OperatorExpr anti = anticommutator(Tp, Tm);
  rep.F_fit = fit_scalar(comm, g, bounds);
  rep.G_fit = fit_scalar(anti, g, bounds);

  // printed-identity comparisons
  auto one = OperatorExpr::constant(GaussRat(1), N);
  auto& H = g.H;
  auto& Lsq = g.Lsq;
  bool symbolic = !lam_value.has_value();
  if (coulomb) {
    if (!symbolic && lam_value->is_zero()) {
      rep.discrepancies.push_back(detail::compare(
          "F(lam=0)", "[R+,R-] = -4*H*L12", (H * L12).scale(GaussRat(-4)), comm));
      rep.discrepancies.push_back(detail::compare(
          "G(lam=0)", "{R+,R-} = (4*Lsq+1)*H + 1",
          (Lsq * H).scale(GaussRat(4)) + H + one, anti));
    } else {
      auto eq23 = (L12 * (H + detail::lam_scale(Lsq))).scale(GaussRat(-4));
      rep.discrepancies.push_back(detail::compare(
          "F", "F = -4*L12*(H + lam*Lsq)", eq23, comm));
      auto two_h_lam_lsq = H + H + detail::lam_scale(Lsq);
      auto eq24 = (Lsq + OperatorExpr::constant(GaussRat(Rational(1, 4)), N)) * two_h_lam_lsq *
                      OperatorExpr::constant(GaussRat(2), N) +
                  detail::lam_scale(Lsq).scale(GaussRat(2)) + one + one;
      rep.discrepancies.push_back(detail::compare(
          "G", "G = (2*Lsq+1/2)*(2*H+lam*Lsq) + 2*lam*Lsq + 2", eq24, anti));
    }
  } else {
    rep.discrepancies.push_back(detail::compare(
        "[Q_xy,L12]", "[Q_xy,L12] = 2i*Q_1", g.Q_1.scale(GaussRat(2) * GaussRat::i()),
        commutator(g.Q_xy, L12)));
    rep.discrepancies.push_back(detail::compare(
        "[Q_1,L12]", "[Q_1,L12] = -2i*Q_xy", g.Q_xy.scale(GaussRat(-2) * GaussRat::i()),
        commutator(g.Q_1, L12)));
    // [Q_xy,Q_1] = -2i L12 + (i/2) lam^2 L12 + i lam (2H + lam Lsq) L12
    auto printed_c =
        L12.scale(GaussRat(-2) * GaussRat::i()) +
        detail::lam_scale(L12, 2).scale(GaussRat(Rational(1, 2)) * GaussRat::i()) +
        detail::lam_scale((H + H + detail::lam_scale(Lsq)) * L12).scale(GaussRat::i());
    rep.discrepancies.push_back(detail::compare(
        "[Q_xy,Q_1]", "[Q_xy,Q_1] = -2i*L12 + (i/2)*lam^2*L12 + i*lam*(2H+lam*Lsq)*L12",
        printed_c, commutator(g.Q_xy, g.Q_1)));
    // Q_xy^2 + Q_1^2 = (H + lam Lsq/2)^2 + lam H + (5/4) lam^2 Lsq - Lsq - 1
    auto hpl = H + detail::lam_scale(Lsq).scale(GaussRat(Rational(1, 2)));
    auto printed_a = hpl * hpl + detail::lam_scale(H) +
                     detail::lam_scale(Lsq, 2).scale(GaussRat(Rational(5, 4))) - Lsq - one;
    rep.discrepancies.push_back(detail::compare(
        "Q-sum", "Q_xy^2 + Q_1^2 = (H+lam*Lsq/2)^2 + lam*H + (5/4)*lam^2*Lsq - Lsq - 1",
        printed_a, (g.Q_xy * g.Q_xy + g.Q_1 * g.Q_1)));
  }
  return rep;
}

// I1 and I2 scalar comparisons for the oscillator in any dimension.
inline std::vector<Discrepancy> oscillator_scalar_checks(const GeneratorSet& g) {
  int N = g.spec.dim;
  std::vector<Discrepancy> out;
  OperatorExpr I1(N), I2(N);
  for (int a = 1; a <= N; ++a) I1 += g.S.at({a, a});
  // S_ij S_ji - S_ii S_jj with independent sums over i, j
  auto Sat = [&](int a, int b) { return g.S.at({std::min(a, b), std::max(a, b)}); };
  for (int a = 1; a <= N; ++a)
    for (int b = 1; b <= N; ++b) I2 += Sat(a, b) * Sat(b, a);
  I2 -= I1 * I1;
  out.push_back(detail::compare("I1", "S_ii = 2H + lam*Lsq",
                                g.H + g.H + detail::lam_scale(g.Lsq), I1));
  auto one = OperatorExpr::constant(GaussRat(1), N);
  auto printed = (-g.Lsq).scale(GaussRat(2)) - one.scale(GaussRat(Rational(N * (N - 1)))) +
                 detail::lam_scale(g.H.scale(GaussRat(Rational(2 * (N - 1)))) -
                                   detail::lam_scale(g.Lsq).scale(
                                       GaussRat(Rational(2 * N + 1, 2))));
  out.push_back(detail::compare(
      "I2",
      "S_ij*S_ji - S_ii*S_jj = -2*Lsq - N(N-1) + lam*(2(N-1)*H - (N+1/2)*lam*Lsq)", printed,
      I2));
  return out;
}

// Printed tensor-transformation law for S (note the factor 2i as printed).
inline Discrepancy l_s_commutator_check(const GeneratorSet& g, int i, int j, int k, int l) {
  int N = g.spec.dim;
  auto Sat = [&](int a, int b) { return g.S.at({std::min(a, b), std::max(a, b)}); };
  auto Lat = [&](int a, int b) {
    if (a == b) return OperatorExpr::zero(N);
    return a < b ? g.L.at({a, b}) : -g.L.at({b, a});
  };
  auto del = [](int a, int b) { return a == b ? 1 : 0; };
  auto dscale = [&](const OperatorExpr& e, int d) {
    return d ? e : OperatorExpr::zero(N);
  };
  auto printed = (-dscale(Sat(i, l), del(j, k)) - dscale(Sat(i, k), del(j, l)) +
                  dscale(Sat(j, l), del(i, k)) + dscale(Sat(j, k), del(i, l)))
                     .scale(GaussRat(2) * GaussRat::i());
  std::string tag = "[L_" + std::to_string(i) + std::to_string(j) + ",S_" +
                    std::to_string(k) + std::to_string(l) + "]";
  return detail::compare(
      tag, "2i*(-d_jk S_il - d_jl S_ik + d_ik S_jl + d_il S_jk)", printed,
      commutator(Lat(i, j), Sat(k, l)));
}

// The printed [S_ij,S_kl] relation, taken verbatim (including its suspect
// repeated indices), compared against the canonical commutator.
inline Discrepancy s_commutator_check(const GeneratorSet& g, int i, int j, int k, int l) {
  int N = g.spec.dim;
  auto Sat = [&](int a, int b) { return g.S.at({std::min(a, b), std::max(a, b)}); };
  auto Lat = [&](int a, int b) {
    if (a == b) return OperatorExpr::zero(N);
    return a < b ? g.L.at({a, b}) : -g.L.at({b, a});
  };
  auto del = [](int a, int b) { return a == b ? 1 : 0; };
  auto dscale = [&](const OperatorExpr& e, int d) {
    return d ? e : OperatorExpr::zero(N);
  };
  auto term_L = dscale(Lat(i, k), del(j, l)) + dscale(Lat(j, k), del(j, l)) +
                dscale(Lat(j, k), del(i, l)) + dscale(Lat(j, l), del(i, k));
  auto term_LS = Lat(i, k) * Sat(j, l) + Lat(j, k) * Sat(j, l) + Lat(j, k) * Sat(i, l) +
                 Lat(j, l) * Sat(i, k);
  auto term_SL = Sat(j, l) * Lat(i, k) + Sat(j, l) * Lat(j, k) + Sat(i, l) * Lat(j, k) +
                 Sat(i, k) * Lat(j, l);
  auto printed = term_L - detail::lam_scale(term_L, 2).scale(GaussRat(Rational(1, 4))) -
                 detail::lam_scale(term_LS + term_SL).scale(GaussRat(Rational(1, 2)));
  printed = printed.scale(GaussRat::i());
  std::string tag = "[S_" + std::to_string(i) + std::to_string(j) + ",S_" +
                    std::to_string(k) + std::to_string(l) + "]";
  return detail::compare(
      tag,
      "i*[(1-lam^2/4)*(L_ik d_jl + L_jk d_jl + L_jk d_il + L_jl d_ik) "
      "- (lam/2)*(L_ik S_jl + L_jk S_jl + L_jk S_il + L_jl S_ik) "
      "- (lam/2)*(S_jl L_ik + S_jl L_jk + S_il L_jk + S_ik L_jl)]",
      printed, commutator(Sat(i, j), Sat(k, l)));
}

}  // namespace dynsym

#endif

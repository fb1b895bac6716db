// Generator-level checks: conservation, hermiticity, rotation algebra,
// ladder weights, and the undeformed limit.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dynsym/systems.hpp"

using namespace dynsym;

namespace {
OperatorExpr Lat(const GeneratorSet& g, int a, int b) {
  if (a == b) return OperatorExpr::zero(g.spec.dim);
  return a < b ? g.L.at({a, b}) : -g.L.at({b, a});
}
}  // namespace

TEST_CASE("deformed momenta close on the angular momentum") {
  for (int dim : {2, 3}) {
    auto g = build_system(SystemSpec{Family::coulomb, dim, LsqConvention::half});
    for (int i = 1; i <= dim; ++i)
      for (int j = i + 1; j <= dim; ++j) {
        // [pi_i, pi_j] = -i lam L_ij
        auto expect =
            Lat(g, i, j).scale(RadialCoeff(Coeff::lam())).scale(-GaussRat::i());
        REQUIRE(equals(commutator(g.pi[i - 1], g.pi[j - 1]), expect));
      }
  }
}

TEST_CASE("so(N) closure of the L_ij") {
  for (int dim : {2, 3}) {
    auto g = build_system(SystemSpec{Family::coulomb, dim, LsqConvention::half});
    auto del = [](int a, int b) { return a == b ? 1 : 0; };
    for (int i = 1; i <= dim; ++i)
      for (int j = i + 1; j <= dim; ++j)
        for (int k = 1; k <= dim; ++k)
          for (int l = k + 1; l <= dim; ++l) {
            OperatorExpr expect(dim);
            // [L_ij, L_kl] = i (d_ik L_jl + d_jl L_ik - d_il L_jk - d_jk L_il)
            if (del(i, k)) expect += Lat(g, j, l);
            if (del(j, l)) expect += Lat(g, i, k);
            if (del(i, l)) expect -= Lat(g, j, k);
            if (del(j, k)) expect -= Lat(g, i, l);
            REQUIRE(equals(commutator(g.L.at({i, j}), g.L.at({k, l})),
                           expect.scale(GaussRat::i())));
          }
  }
}

TEST_CASE("conserved quantities: canonical zeros") {
  for (int dim : {2, 3}) {
    for (Family fam : {Family::coulomb, Family::oscillator}) {
      auto g = build_system(SystemSpec{fam, dim, LsqConvention::half});
      for (const auto& [ij, L] : g.L) REQUIRE(commutator(g.H, L).is_zero());
      REQUIRE(commutator(g.H, g.Lsq).is_zero());
      for (const auto& R : g.R) REQUIRE(commutator(g.H, R).is_zero());
      for (const auto& [ij, S] : g.S) REQUIRE(commutator(g.H, S).is_zero());
    }
  }
}

TEST_CASE("hermiticity of all generators") {
  for (int dim : {2, 3}) {
    for (Family fam : {Family::coulomb, Family::oscillator}) {
      auto g = build_system(SystemSpec{fam, dim, LsqConvention::half});
      REQUIRE(equals(g.H.adjoint(), g.H));
      REQUIRE(equals(g.Lsq.adjoint(), g.Lsq));
      for (const auto& [ij, L] : g.L) REQUIRE(equals(L.adjoint(), L));
      for (const auto& pi : g.pi) REQUIRE(equals(pi.adjoint(), pi));
      for (const auto& R : g.R) REQUIRE(equals(R.adjoint(), R));
      for (const auto& [ij, S] : g.S) REQUIRE(equals(S.adjoint(), S));
    }
  }
}

TEST_CASE("ladder weights under L12") {
  auto gc = build_system(SystemSpec{Family::coulomb, 2, LsqConvention::half});
  auto i = GaussRat::i();
  auto Tp = gc.R[0] + gc.R[1].scale(i);
  auto Tm = gc.R[0] - gc.R[1].scale(i);
  REQUIRE(equals(commutator(gc.L12(), Tp), Tp));
  REQUIRE(equals(commutator(gc.L12(), Tm), -Tm));

  auto go = build_system(SystemSpec{Family::oscillator, 2, LsqConvention::half});
  auto Qp = go.Q_xy - go.Q_1.scale(i);
  auto Qm = go.Q_xy + go.Q_1.scale(i);
  REQUIRE(equals(commutator(go.L12(), Qp), Qp.scale(GaussRat(2))));
  REQUIRE(equals(commutator(go.L12(), Qm), Qm.scale(GaussRat(-2))));
}

TEST_CASE("undeformed limit lam -> 0") {
  int dim = 2;
  auto gc = subst_lam(build_system(SystemSpec{Family::coulomb, dim, LsqConvention::half}),
                      GaussRat(0));
  auto H0 = p_squared(dim).scale(GaussRat(Rational(1, 2))) -
            OperatorExpr::r_pow(-1, dim);
  REQUIRE(equals(gc.H, H0));
  // undeformed Runge-Lenz components
  auto p1 = OperatorExpr::p(1, dim), p2 = OperatorExpr::p(2, dim);
  auto L = angular_momentum(1, 2, dim);
  auto R1 = (L * p2 + p2 * L).scale(GaussRat(Rational(1, 2))) -
            OperatorExpr::x(1, dim) * OperatorExpr::r_pow(-1, dim);
  REQUIRE(equals(gc.R[0], R1));

  auto go = subst_lam(build_system(SystemSpec{Family::oscillator, dim, LsqConvention::half}),
                      GaussRat(0));
  auto Hosc = p_squared(dim).scale(GaussRat(Rational(1, 2))) +
              OperatorExpr::r_pow(2, dim).scale(GaussRat(Rational(1, 2)));
  REQUIRE(equals(go.H, Hosc));
}

TEST_CASE("convention flag: full Lsq doubles the half sum") {
  for (int dim : {2, 3}) {
    auto gh = build_system(SystemSpec{Family::coulomb, dim, LsqConvention::half});
    auto gf = build_system(SystemSpec{Family::coulomb, dim, LsqConvention::full});
    REQUIRE(equals(gf.Lsq, gh.Lsq + gh.Lsq));
  }
}

TEST_CASE("dimension guard") {
  REQUIRE_THROWS_AS(build_system(SystemSpec{Family::coulomb, 1, LsqConvention::half}),
                    DimensionMismatch);
}

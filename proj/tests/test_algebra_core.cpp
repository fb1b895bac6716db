#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dynsym/expr.hpp"

using namespace dynsym;

namespace {
OperatorExpr ii(int dim) { return OperatorExpr::constant(GaussRat::i(), dim); }
}

TEST_CASE("canonical commutators") {
  int N = 2;
  auto x1 = OperatorExpr::x(1, N);
  auto x2 = OperatorExpr::x(2, N);
  auto p1 = OperatorExpr::p(1, N);
  auto p2 = OperatorExpr::p(2, N);

  CHECK(equals(commutator(x1, p1), ii(N)));
  CHECK(commutator(x1, p2).is_zero());
  CHECK(commutator(x1, x2).is_zero());
  CHECK(commutator(p1, p2).is_zero());
  CHECK(equals(p1 * x1 - x1 * p1, -ii(N)));
}

TEST_CASE("x_N reduction: x1^2 + x2^2 = r^2") {
  int N = 2;
  auto x1 = OperatorExpr::x(1, N);
  auto x2 = OperatorExpr::x(2, N);
  auto sum = x1 * x1 + x2 * x2;
  CHECK(sum.term_count() == 1);
  CHECK(equals(sum, OperatorExpr::r_pow(2, N)));
}

TEST_CASE("s algebra") {
  int N = 2;
  auto s2 = OperatorExpr::s_pow(2, N);
  auto expect = OperatorExpr::constant(RadialCoeff(RadialCoeff::s_squared()), N);
  CHECK(equals(s2, expect));
  // s^-2 * s^2 == 1
  CHECK(equals(OperatorExpr::s_pow(-2, N) * s2, OperatorExpr::constant(GaussRat(1), N)));
  CHECK(equals(OperatorExpr::s_pow(-1, N) * OperatorExpr::s_pow(1, N),
               OperatorExpr::constant(GaussRat(1), N)));
  CHECK(equals(OperatorExpr::s_pow(3, N) * OperatorExpr::s_pow(-3, N),
               OperatorExpr::constant(GaussRat(1), N)));
}

TEST_CASE("p past radial function: [p1, r^-1]") {
  int N = 2;
  auto p1 = OperatorExpr::p(1, N);
  auto rinv = OperatorExpr::r_pow(-1, N);
  auto lhs = p1 * rinv;
  // r^-1 p_1 + i r^-3 x_1
  auto rhs = rinv * p1 +
             (OperatorExpr::x(1, N) * OperatorExpr::r_pow(-3, N)).scale(GaussRat::i());
  CHECK(equals(lhs, rhs));
}

TEST_CASE("subst lambda at 0 trivials") {
  int N = 2;
  CHECK(equals(OperatorExpr::s_pow(1, N).subst_lam(GaussRat(0)),
               OperatorExpr::constant(GaussRat(1), N)));
}

TEST_CASE("adjoint basics") {
  int N = 2;
  auto x1 = OperatorExpr::x(1, N);
  auto p1 = OperatorExpr::p(1, N);
  CHECK(equals((x1.scale(GaussRat::i())).adjoint(), x1.scale(-GaussRat::i())));
  // (x1 p1)^dag = p1 x1 = x1 p1 - i
  CHECK(equals((x1 * p1).adjoint(), x1 * p1 - ii(N)));
  // involution on a mixed expression
  auto e = (x1 * p1 * OperatorExpr::s_pow(1, N)).scale(GaussRat(Rational(3, 2), Rational(1, 5)));
  CHECK(equals(e.adjoint().adjoint(), e));
}

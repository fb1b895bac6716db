// Numerical backends: tridiagonal QL, Lanczos vs a dense oracle, radial
// sector reduction, grid convergence, Cartesian Hamiltonian, sector labels.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <Eigen/Dense>

#include "dynsym/cartesian.hpp"
#include "dynsym/radial.hpp"
#include "dynsym/sector.hpp"
#include "dynsym/systems.hpp"

using namespace dynsym;

TEST_CASE("tridiagonal QL matches a dense oracle to 1e-10") {
  const int n = 100;
  std::mt19937 gen(42);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> d(n), e(n - 1);
  for (auto& x : d) x = u(gen);
  for (auto& x : e) x = u(gen);

  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) T(j, j) = d[j];
  for (int j = 0; j + 1 < n; ++j) T(j, j + 1) = T(j + 1, j) = e[j];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);

  auto vals = tridiag_eigenvalues(d, e);
  REQUIRE((int)vals.size() == n);
  for (int j = 0; j < n; ++j) CHECK(std::fabs(vals[j] - es.eigenvalues()(j)) < 1e-10);

  std::vector<std::vector<double>> vecs;
  auto vals2 = tridiag_eigen(d, e, vecs);
  for (int j = 0; j < n; ++j) {
    CHECK(std::fabs(vals2[j] - es.eigenvalues()(j)) < 1e-10);
    // residual ||T v - lambda v||
    double resid = 0;
    for (int a = 0; a < n; ++a) {
      double acc = d[a] * vecs[j][a];
      if (a > 0) acc += e[a - 1] * vecs[j][a - 1];
      if (a + 1 < n) acc += e[a] * vecs[j][a + 1];
      acc -= vals2[j] * vecs[j][a];
      resid += acc * acc;
    }
    CHECK(std::sqrt(resid) < 1e-10);
  }
}

TEST_CASE("lanczos: lowest 5 of a random symmetric 100x100 to 1e-10") {
  const int n = 100;
  std::mt19937 gen(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXd A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) A(i, j) = A(j, i) = u(gen);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);

  MatrixAction apply = [&](const std::vector<double>& v, std::vector<double>& out) {
    out.assign(n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out[i] += A(i, j) * v[j];
  };
  auto res = lanczos(apply, n, 5, 1e-12);
  REQUIRE(res.eigenvalues.size() == 5);
  for (int s = 0; s < 5; ++s) {
    CHECK(std::fabs(res.eigenvalues[s] - es.eigenvalues()(s)) < 1e-10);
    CHECK(res.residuals[s] < 1e-9);
  }
  // determinism: a second run is bit-identical
  auto res2 = lanczos(apply, n, 5, 1e-12);
  for (int s = 0; s < 5; ++s) CHECK(res.eigenvalues[s] == res2.eigenvalues[s]);
}

TEST_CASE("lanczos guards") {
  MatrixAction id = [](const std::vector<double>& v, std::vector<double>& out) { out = v; };
  CHECK_THROWS_AS(lanczos(id, 10, 11), std::invalid_argument);
}

TEST_CASE("radialize: undeformed Coulomb sector data") {
  auto g = build_system(SystemSpec{Family::coulomb, 2, LsqConvention::half});
  auto g0 = subst_lam(g, GaussRat(0));
  auto inv = collect_invariants(g0.H, 2);
  auto op = radialize(inv, 2, 0, 0.0);
  CHECK(op.gamma_at(1.7) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(op.U_at(2.5) == doctest::Approx(-1.0 / 2.5).epsilon(1e-12));
  auto op1 = radialize(inv, 2, 1, 0.0);
  // centrifugal term for m = 1 in two dimensions: + m^2/(2 r^2)
  CHECK(op1.U_at(2.0) == doctest::Approx(-0.5 + 0.5 / 4.0).epsilon(1e-12));

  CHECK_THROWS_AS(radialize(inv, 2, -1, 0.0), IndexError);
}

TEST_CASE("radialize rejects a non-Hermitian reduction") {
  InvariantForm bad;
  bad.dim = 2;
  bad.c_psq = RadialCoeff(Coeff(BPoly::one_plus_lam_r2()));  // r-dependent
  bad.c_D = RadialCoeff();                                   // ...but no drift
  CHECK_THROWS_AS(radialize(bad, 2, 0, 0.1), HermiticityCheckFailed);
}

TEST_CASE("radial eigenvalues: undeformed ground truths within 1e-3") {
  {
    auto g = subst_lam(build_system(SystemSpec{Family::coulomb, 2, LsqConvention::half}),
                       GaussRat(0));
    auto inv = collect_invariants(g.H, 2);
    auto res = radial_eigen(radialize(inv, 2, 0, 0.0), GridSpec{4000, 40.0}, 2);
    REQUIRE(res.eigenvalues.size() == 2);
    CHECK(std::fabs(res.eigenvalues[0] + 2.0) < 1e-3);
    CHECK(std::fabs(res.eigenvalues[1] + 2.0 / 9.0) < 1e-3);
  }
  {
    auto g = subst_lam(build_system(SystemSpec{Family::oscillator, 2, LsqConvention::half}),
                       GaussRat(0));
    auto inv = collect_invariants(g.H, 2);
    auto res = radial_eigen(radialize(inv, 2, 0, 0.0), GridSpec{4000, 20.0}, 2);
    // m = 0 sector of the 2-D oscillator: 1, 3
    CHECK(std::fabs(res.eigenvalues[0] - 1.0) < 1e-3);
    CHECK(std::fabs(res.eigenvalues[1] - 3.0) < 1e-3);
    auto res1 = radial_eigen(radialize(inv, 2, 1, 0.0), GridSpec{4000, 20.0}, 1);
    CHECK(std::fabs(res1.eigenvalues[0] - 2.0) < 1e-3);
  }
}

TEST_CASE("radial_eigen guards and edge cases") {
  auto g = subst_lam(build_system(SystemSpec{Family::coulomb, 2, LsqConvention::half}),
                     GaussRat(0));
  auto op = radialize(collect_invariants(g.H, 2), 2, 0, 0.0);
  CHECK(radial_eigen(op, GridSpec{1000, 40.0}, 0).eigenvalues.empty());
  CHECK_THROWS_AS(radial_eigen(op, GridSpec{100, 40.0}, 50), std::invalid_argument);
  auto res = radial_eigen(op, GridSpec{1000, 40.0}, 2);
  for (double r : res.residuals) CHECK(r < 1e-8);
}

TEST_CASE("second-order grid convergence on the undeformed oscillator") {
  auto g = subst_lam(build_system(SystemSpec{Family::oscillator, 2, LsqConvention::half}),
                     GaussRat(0));
  auto op = radialize(collect_invariants(g.H, 2), 2, 0, 0.0);
  double e1 = radial_eigen(op, GridSpec{250, 20.0}, 1).eigenvalues[0];
  double e2 = radial_eigen(op, GridSpec{500, 20.0}, 1).eigenvalues[0];
  double f = std::fabs(e1 - 1.0) / std::fabs(e2 - 1.0);
  CHECK(f > 3.5);
  CHECK(f < 4.5);
}

TEST_CASE("cartesian Hamiltonian guards") {
  CHECK_THROWS_AS(cartesian_hamiltonian(Family::coulomb, 4, 0.0, GridSpec{64, 10.0}),
                  DimensionMismatch);
  CHECK_THROWS(cartesian_hamiltonian(Family::coulomb, 2, 0.0, GridSpec{8, 10.0}));
  CHECK_THROWS(cartesian_hamiltonian(Family::coulomb, 3, 0.0, GridSpec{128, 10.0}));
}

TEST_CASE("cartesian oscillator: distinct levels via Lanczos") {
  // exact grid degeneracies yield one Ritz copy per distinct level
  auto ham = cartesian_hamiltonian(Family::oscillator, 2, 0.0, GridSpec{64, 12.0});
  auto res = lanczos(ham.action(), ham.dim(), 2, 1e-8);
  REQUIRE(res.eigenvalues.size() == 2);
  CHECK(std::fabs(res.eigenvalues[0] - 1.0) < 5e-3);
  CHECK(std::fabs(res.eigenvalues[1] - 2.0) < 1e-2);
}

TEST_CASE("sector labels 0, +-1 from a dense mini-solve") {
  auto ham = cartesian_hamiltonian(Family::oscillator, 2, 0.0, GridSpec{20, 10.0});
  const int n = (int)ham.dim();
  Eigen::MatrixXd H(n, n);
  std::vector<double> basis(n, 0.0), col;
  for (int j = 0; j < n; ++j) {
    basis[j] = 1.0;
    ham.apply(basis, col);
    for (int i = 0; i < n; ++i) H(i, j) = col[i];
    basis[j] = 0.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
  std::vector<double> energies;
  std::vector<std::vector<double>> vecs;
  for (int s = 0; s < 3; ++s) {
    energies.push_back(es.eigenvalues()(s));
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = es.eigenvectors()(i, s);
    vecs.push_back(std::move(v));
  }
  auto secs = sector_classify(energies, vecs, ham, 0.05);
  REQUIRE(secs.size() == 3);
  CHECK(std::fabs(secs[0].m_est) < 0.05);
  CHECK(std::fabs(std::fabs(secs[1].m_est) - 1.0) < 0.1);
  CHECK(std::fabs(std::fabs(secs[2].m_est) - 1.0) < 0.1);
  CHECK(secs[1].m_est == doctest::Approx(-secs[2].m_est).epsilon(1e-6));
}

TEST_CASE("sector_classify guards") {
  auto ham = cartesian_hamiltonian(Family::oscillator, 2, 0.0, GridSpec{16, 8.0});
  std::vector<double> energies{1.0};
  std::vector<std::vector<double>> vecs;
  CHECK_THROWS_AS(sector_classify(energies, vecs, ham, 1e-3), DimensionMismatch);
  vecs.push_back(std::vector<double>(ham.dim(), 0.0));
  CHECK_THROWS_AS(sector_classify(energies, vecs, ham, 1e-3), std::invalid_argument);
}

TEST_CASE("deformed radial spectra track the algebraic values") {
  // lam = 1/20: E_0 = -2, E_1 = -2/9 - 1/20
  auto g = build_system(SystemSpec{Family::coulomb, 2, LsqConvention::half});
  auto inv = collect_invariants(g.H, 2);
  auto res = radial_eigen(radialize(inv, 2, 0, 0.05), GridSpec{4000, 40.0}, 2);
  CHECK(std::fabs(res.eigenvalues[0] + 2.0) < 1e-3);
  CHECK(std::fabs(res.eigenvalues[1] - (-2.0 / 9.0 - 0.05)) < 5e-4);

  auto go = build_system(SystemSpec{Family::oscillator, 2, LsqConvention::half});
  auto invo = collect_invariants(go.H, 2);
  double lam = 0.1;
  auto ro = radial_eigen(radialize(invo, 2, 0, lam), GridSpec{4000, 20.0}, 2);
  double s = std::sqrt(1.0 + lam * lam / 4.0);
  CHECK(std::fabs(ro.eigenvalues[0] - (s - lam / 2.0 * (0.0 + 0.0 + 1.0))) < 1e-3);
  CHECK(std::fabs(ro.eigenvalues[1] - (3.0 * s - lam / 2.0 * (4.0 + 4.0 + 1.0))) < 1e-3);
}

#ifndef DYNSYM_RADIAL_HPP
#define DYNSYM_RADIAL_HPP

#include <cmath>
#include <optional>
#include <random>
#include <vector>

#include "dynsym/invariant.hpp"
#include "dynsym/print.hpp"
#include "dynsym/tridiag.hpp"

namespace dynsym {

struct GridSpec {
  int points = 2000;    // M
  double extent = 40.0; // r_max, or box half-width for the cartesian grid
  // offset half-step grid with Dirichlet truncation is the only supported mode
};

struct EigenResult {
  std::vector<double> eigenvalues;               // ascending
  std::vector<std::vector<double>> eigenvectors; // optional, parallel to eigenvalues
  std::vector<double> sector;                    // optional per-state <L12>
  std::vector<double> residuals;                 // ||Hv - Ev|| per state
};

// Sector-reduced radial operator  u -> -gamma u'' + beta u' + U u  acting on
// functions with weight w(r) = r^{N-1}.  The exact coefficients are kept so the
// self-adjointness identity beta = -(gamma' + (N-1) gamma / r) can be verified
// symbolically before any sampling.
struct RadialOperator {
  int N = 2;
  int ell = 0;
  double lam = 0.0;  // numeric lambda used for sampling
  RadialCoeff gamma, beta, U;

  double gamma_at(double r) const { return gamma.eval(lam, r).real(); }
  double U_at(double r) const { return U.eval(lam, r).real(); }
  double weight(double r) const { return std::pow(r, N - 1); }
};

// Reduces a rotation-invariant operator to the given angular sector:
//   p^2   -> -d^2/dr^2 - (N-1)/r d/dr + ell(ell+N-2)/r^2
//   x.p   -> -i r d/dr
//   Lsq   -> ell(ell+N-2)        (sum_{i<j} convention)
// and verifies exactly that the result is formally self-adjoint with respect
// to r^{N-1} dr, i.e. that gamma' = i c_D r.
inline RadialOperator radialize(const InvariantForm& inv, int N, int ell, double lam = 0.0) {
  if (ell < 0) throw IndexError("radialize: sector index must be >= 0");
  if (N < 2) throw DimensionMismatch("radialize: need dim >= 2");
  RadialOperator op;
  op.N = N;
  op.ell = ell;
  op.lam = lam;
  op.gamma = inv.c_psq;

  // self-adjointness: the x.p drift must be the derivative of gamma
  RadialCoeff drift = inv.c_D * (Coeff::r_pow(1)) * GaussRat::i();
  RadialCoeff diff = inv.c_psq.deriv_r() - drift;
  if (!diff.is_zero())
    throw HermiticityCheckFailed("radialize: gamma' - i*c_D*r = " +
                                 detail::coeff_str(diff.plain()) + " + s*" +
                                 detail::coeff_str(diff.s_part()));

  // beta = -(N-1)/r * gamma - i c_D r  ==  -(gamma' + (N-1) gamma / r)
  op.beta = inv.c_psq * (Coeff::r_pow(-1) * Coeff(GaussRat(Rational(-(N - 1))))) - drift;

  Rational ll = Rational(ell) * Rational(ell + N - 2);
  op.U = inv.c_psq * (Coeff::r_pow(-2) * Coeff(GaussRat(ll))) +
         inv.c_Lsq * Coeff(GaussRat(ll)) + inv.c_1;
  return op;
}

// Lowest-k eigenvalues of the finite-volume discretization on the offset grid
// r_j = (j + 1/2) h.  The symmetric form couples j and j+1 through the flux
// P(r) = gamma(r) r^{N-1} evaluated at the shared cell face.
inline EigenResult radial_eigen(const RadialOperator& op, const GridSpec& grid, int k,
                                bool want_vectors = false) {
  const int M = grid.points;
  if (M < 16) throw std::invalid_argument("radial_eigen: need at least 16 points");
  if (k > M / 4) throw std::invalid_argument("radial_eigen: k must be <= M/4");
  EigenResult res;
  if (k <= 0) return res;

  const double h = grid.extent / M;
  std::vector<double> w(M), q(M), pface(M + 1);  // pface[j] at r = j h
  for (int j = 0; j < M; ++j) {
    double r = (j + 0.5) * h;
    w[j] = op.weight(r);
    q[j] = op.U_at(r);
  }
  pface[0] = 0.0;  // w(0) = 0 for N >= 2: natural no-flux inner face
  for (int j = 1; j <= M; ++j) {
    double r = j * h;
    pface[j] = op.gamma_at(r) * op.weight(r);
  }
  std::vector<double> d(M), e(M - 1);
  for (int j = 0; j < M; ++j) d[j] = (pface[j] + pface[j + 1]) / (h * h * w[j]) + q[j];
  for (int j = 0; j + 1 < M; ++j) e[j] = -pface[j + 1] / (h * h * std::sqrt(w[j] * w[j + 1]));

  auto vals = tridiag_eigenvalues(d, e);
  res.eigenvalues.assign(vals.begin(), vals.begin() + k);

  // inverse iteration for residual certificates (and vectors on request)
  std::mt19937 rng(20240915u);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (int s = 0; s < k; ++s) {
    double lambda = res.eigenvalues[s];
    std::vector<double> v(M);
    for (auto& x : v) x = uni(rng);
    for (int it = 0; it < 4; ++it) {
      v = tridiag_solve_shifted(d, e, lambda, v);
      double nrm = 0;
      for (double x : v) nrm += x * x;
      nrm = std::sqrt(nrm);
      for (auto& x : v) x /= nrm;
    }
    double resid = 0;
    for (int j = 0; j < M; ++j) {
      double hv = d[j] * v[j];
      if (j > 0) hv += e[j - 1] * v[j - 1];
      if (j + 1 < M) hv += e[j] * v[j + 1];
      double rloc = hv - lambda * v[j];
      resid += rloc * rloc;
    }
    res.residuals.push_back(std::sqrt(resid));
    if (want_vectors) res.eigenvectors.push_back(std::move(v));
  }
  return res;
}

}  // namespace dynsym

#endif

#ifndef DYNSYM_LANCZOS_HPP
#define DYNSYM_LANCZOS_HPP

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "dynsym/radial.hpp"

namespace dynsym {

using MatrixAction = std::function<void(const std::vector<double>&, std::vector<double>&)>;

// Lowest-k eigenpairs of a symmetric operator given only its action, by the
// Lanczos iteration with full reorthogonalization and a fixed-seed start
// vector (deterministic results).  Ritz pairs are accepted once the residual
// estimate |beta_m * s_m| drops below tol*|theta| + tol for all k of them.
inline EigenResult lanczos(const MatrixAction& apply, std::size_t dim, int k, double tol = 1e-10,
                           int max_iter = 5000, bool want_vectors = true) {
  if (k <= 0) return {};
  if ((std::size_t)k > dim) throw std::invalid_argument("lanczos: k exceeds dimension");

  std::mt19937 rng(987654321u);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<std::vector<double>> V;  // orthonormal basis
  std::vector<double> alpha, beta;     // tridiagonal entries

  std::vector<double> v(dim), wv(dim);
  for (auto& x : v) x = uni(rng);
  double nrm = 0;
  for (double x : v) nrm += x * x;
  nrm = std::sqrt(nrm);
  for (auto& x : v) x /= nrm;
  V.push_back(v);

  int m_max = std::min<std::size_t>(dim, (std::size_t)max_iter);
  std::vector<double> ritz;
  std::vector<std::vector<double>> tvecs;

  for (int m = 0; m < m_max; ++m) {
    apply(V[m], wv);
    double a = 0;
    for (std::size_t t = 0; t < dim; ++t) a += V[m][t] * wv[t];
    alpha.push_back(a);
    for (std::size_t t = 0; t < dim; ++t) wv[t] -= a * V[m][t];
    if (m > 0)
      for (std::size_t t = 0; t < dim; ++t) wv[t] -= beta[m - 1] * V[m - 1][t];
    // full reorthogonalization (twice for stability)
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : V) {
        double d = 0;
        for (std::size_t t = 0; t < dim; ++t) d += u[t] * wv[t];
        for (std::size_t t = 0; t < dim; ++t) wv[t] -= d * u[t];
      }
    double b = 0;
    for (double x : wv) b += x * x;
    b = std::sqrt(b);

    // convergence test on the current tridiagonal section
    int mm = m + 1;
    if (mm >= k && (mm % 5 == 0 || b < 1e-14 || mm == m_max)) {
      std::vector<double> d(alpha.begin(), alpha.end());
      std::vector<double> e(beta.begin(), beta.end());
      tvecs.clear();
      ritz = tridiag_eigen(d, e, tvecs);
      bool ok = true;
      for (int s = 0; s < k; ++s) {
        double est = b * std::fabs(tvecs[s][mm - 1]);
        if (est > tol * std::fabs(ritz[s]) + tol) ok = false;
      }
      if (ok || b < 1e-14) {
        EigenResult res;
        res.eigenvalues.assign(ritz.begin(), ritz.begin() + k);
        for (int s = 0; s < k; ++s) {
          std::vector<double> y(dim, 0.0);
          for (int j = 0; j < mm; ++j)
            for (std::size_t t = 0; t < dim; ++t) y[t] += tvecs[s][j] * V[j][t];
          double yn = 0;
          for (double x : y) yn += x * x;
          yn = std::sqrt(yn);
          for (auto& x : y) x /= yn;
          apply(y, wv);
          double resid = 0;
          for (std::size_t t = 0; t < dim; ++t) {
            double rloc = wv[t] - ritz[s] * y[t];
            resid += rloc * rloc;
          }
          res.residuals.push_back(std::sqrt(resid));
          if (want_vectors) res.eigenvectors.push_back(std::move(y));
        }
        return res;
      }
    }
    if (b < 1e-14) {
      // invariant subspace exhausted without convergence of all k pairs
      if ((int)alpha.size() >= (int)dim) break;
      // restart direction orthogonal to the current basis
      for (auto& x : wv) x = uni(rng);
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& u : V) {
          double d = 0;
          for (std::size_t t = 0; t < dim; ++t) d += u[t] * wv[t];
          for (std::size_t t = 0; t < dim; ++t) wv[t] -= d * u[t];
        }
      b = 0;
      for (double x : wv) b += x * x;
      b = std::sqrt(b);
      if (b < 1e-14) break;
    }
    beta.push_back(b);
    for (auto& x : wv) x /= b;
    V.push_back(wv);
  }
  throw ConvergenceFailure("lanczos: not converged within iteration budget");
}

}  // namespace dynsym

#endif

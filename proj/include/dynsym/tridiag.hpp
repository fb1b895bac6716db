#ifndef DYNSYM_TRIDIAG_HPP
#define DYNSYM_TRIDIAG_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "dynsym/errors.hpp"

namespace dynsym {

namespace detail {

inline double hypot2(double a, double b) { return std::sqrt(a * a + b * b); }

// Implicit-shift QL iteration on a symmetric tridiagonal matrix.
// d: diagonal (size n), e: off-diagonal (size n, e[n-1] unused as workspace).
// If z is non-null it must point to an n*n row-major matrix whose columns
// accumulate the eigenvectors (pass identity to get eigenvectors of T itself,
// or a basis to rotate Ritz vectors in place).
inline void tridiag_ql(std::vector<double>& d, std::vector<double>& e,
                       std::vector<double>* z = nullptr) {
  const int n = (int)d.size();
  if (n == 0) return;
  e.resize(n, 0.0);
  e[n - 1] = 0.0;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= 1e-16 * dd) break;
      }
      if (m != l) {
        if (iter++ == 60) throw ConvergenceFailure("tridiag_ql: too many iterations");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = hypot2(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i = m - 1;
        for (; i >= l; --i) {
          double f = s * e[i], b = c * e[i];
          r = hypot2(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (z) {
            double* zp = z->data();
            for (int k = 0; k < n; ++k) {
              double f2 = zp[k * n + i + 1];
              zp[k * n + i + 1] = s * zp[k * n + i] + c * f2;
              zp[k * n + i] = c * zp[k * n + i] - s * f2;
            }
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace detail

// Eigenvalues (ascending) of the symmetric tridiagonal matrix with diagonal d
// and off-diagonal e (e[i] couples rows i and i+1; e.size() == d.size()-1).
inline std::vector<double> tridiag_eigenvalues(std::vector<double> d, std::vector<double> e) {
  detail::tridiag_ql(d, e, nullptr);
  std::sort(d.begin(), d.end());
  return d;
}

// Eigenvalues and eigenvectors; vecs[j] is the eigenvector of eigenvalue j
// (ascending), each of length n.
inline std::vector<double> tridiag_eigen(std::vector<double> d, std::vector<double> e,
                                         std::vector<std::vector<double>>& vecs) {
  const int n = (int)d.size();
  std::vector<double> z(n * n, 0.0);
  for (int i = 0; i < n; ++i) z[i * n + i] = 1.0;
  detail::tridiag_ql(d, e, &z);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });
  std::vector<double> vals(n);
  vecs.assign(n, std::vector<double>(n));
  for (int j = 0; j < n; ++j) {
    vals[j] = d[order[j]];
    for (int k = 0; k < n; ++k) vecs[j][k] = z[k * n + order[j]];
  }
  return vals;
}

// Solves (T - shift I) x = b for symmetric tridiagonal T by LU with a tiny
// regularization of vanishing pivots (inverse-iteration workhorse).
inline std::vector<double> tridiag_solve_shifted(const std::vector<double>& d,
                                                 const std::vector<double>& e, double shift,
                                                 std::vector<double> b) {
  const int n = (int)d.size();
  std::vector<double> diag(n), upper(n, 0.0);
  for (int i = 0; i < n; ++i) diag[i] = d[i] - shift;
  double scale = 0.0;
  for (int i = 0; i < n; ++i) scale = std::max(scale, std::fabs(diag[i]));
  for (int i = 0; i + 1 < n; ++i) scale = std::max(scale, std::fabs(e[i]));
  const double eps = 1e-14 * (scale > 0 ? scale : 1.0);
  for (int i = 0; i < n; ++i) {
    if (std::fabs(diag[i]) < eps) diag[i] = (diag[i] < 0 ? -eps : eps);
    if (i + 1 < n) {
      double m = e[i] / diag[i];
      diag[i + 1] -= m * e[i];
      b[i + 1] -= m * b[i];
      upper[i] = e[i];
    }
  }
  std::vector<double> x(n);
  x[n - 1] = b[n - 1] / diag[n - 1];
  for (int i = n - 2; i >= 0; --i) x[i] = (b[i] - upper[i] * x[i + 1]) / diag[i];
  return x;
}

}  // namespace dynsym

#endif

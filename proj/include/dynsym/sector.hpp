#ifndef DYNSYM_SECTOR_HPP
#define DYNSYM_SECTOR_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <vector>

#include "dynsym/cartesian.hpp"

namespace dynsym {

struct SectorEstimate {
  double m_value = 0;    // eigenvalue of L12 restricted to the energy cluster
  long m_est = 0;        // nearest integer
  double confidence = 0; // |m_value - m_est|
  int cluster = 0;       // energy-cluster index
};

// Assigns an angular label m to each eigenvector.  Real eigenvectors of a real
// symmetric discretization carry <L12> = 0 individually whenever the level is
// degenerate, so states are first grouped into energy clusters and the
// Hermitian matrix M_ab = <v_a, L12 v_b> = -i <v_a, W12 v_b> is diagonalized
// within each cluster; its eigenvalues are the m estimates.
inline std::vector<SectorEstimate> sector_classify(const std::vector<double>& energies,
                                                   const std::vector<std::vector<double>>& vectors,
                                                   const CartesianHamiltonian& ham,
                                                   double cluster_tol = 1e-3) {
  const int n = (int)energies.size();
  if ((int)vectors.size() != n)
    throw DimensionMismatch("sector_classify: eigenvalue/vector count mismatch");
  for (const auto& v : vectors) {
    double nn = 0;
    for (double x : v) nn += x * x;
    if (std::sqrt(nn) < 1e-12)
      throw std::invalid_argument("sector_classify: zero vector");
  }
  std::vector<SectorEstimate> out(n);
  int c0 = 0, cluster_id = 0;
  while (c0 < n) {
    int c1 = c0 + 1;
    while (c1 < n && std::fabs(energies[c1] - energies[c1 - 1]) < cluster_tol) ++c1;
    int sz = c1 - c0;
    // W_ab = <v_a, W12 v_b> is real antisymmetric; M = -i W is Hermitian
    Eigen::MatrixXcd M(sz, sz);
    std::vector<double> wv;
    for (int b = 0; b < sz; ++b) {
      ham.apply_W12(vectors[c0 + b], wv);
      for (int a = 0; a < sz; ++a) {
        double dot = 0;
        for (std::size_t t = 0; t < wv.size(); ++t) dot += vectors[c0 + a][t] * wv[t];
        M(a, b) = std::complex<double>(0.0, -dot);
      }
    }
    for (int a = 0; a < sz; ++a)
      for (int b = a; b < sz; ++b) {
        std::complex<double> avg = 0.5 * (M(a, b) + std::conj(M(b, a)));
        M(a, b) = avg;
        M(b, a) = std::conj(avg);
      }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M);
    for (int a = 0; a < sz; ++a) {
      SectorEstimate& se = out[c0 + a];
      se.m_value = es.eigenvalues()(a);
      se.m_est = std::lround(se.m_value);
      se.confidence = std::fabs(se.m_value - (double)se.m_est);
      se.cluster = cluster_id;
    }
    ++cluster_id;
    c0 = c1;
  }
  return out;
}

}  // namespace dynsym

#endif

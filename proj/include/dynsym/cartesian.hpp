#ifndef DYNSYM_CARTESIAN_HPP
#define DYNSYM_CARTESIAN_HPP

#include <cmath>
#include <vector>

#include "dynsym/lanczos.hpp"
#include "dynsym/systems.hpp"

namespace dynsym {

// Full N-dimensional grid realization of H = 1/2 sum pi_i^2 - (lam/2) Lsq + V
// on the offset grid x_j = -B + (j + 1/2) h, B = extent/2, with Dirichlet
// walls.  Two discretizations of the kinetic part are provided:
//
//  - flux (default): the exact operator identity
//        sum_i pi_i^2 = sum_i p_i s^2 p_i - (N/2) lam + (lam^2/4) r^2/s^2
//    (derivable in the canonical algebra) is discretized with p s^2 p in
//    conservative flux form, coupling nearest neighbours.  Second order,
//    exactly symmetric, no spurious lattice doubling.
//  - literal: pi_i formed verbatim as -i K_i, K_i = (F A_i + A_i F)/2 with
//    A_i the antisymmetric central difference.  Also exactly symmetric, but
//    A_i only couples sites two apart, so the grid decouples into 2^N
//    checkerboard sublattices and every level appears 2^N times.
//
// The angular term uses L_ij = -i W_ij, W_ij = X_i A_j - X_j A_i; with real
// vectors the Hamiltonian action is real symmetric:
//   H v = kinetic(v) + (lam/2) sum_{i<j} W_ij(W_ij v) + V v.
class CartesianHamiltonian {
 public:
  CartesianHamiltonian(Family family, int N, double lam, const GridSpec& grid,
                       bool literal_pi = false)
      : family_(family), N_(N), M_(grid.points), literal_(literal_pi), lam_(lam) {
    if (N != 2 && N != 3) throw DimensionMismatch("cartesian_hamiltonian: N must be 2 or 3");
    if (M_ < 16) throw std::invalid_argument("cartesian_hamiltonian: need at least 16 points");
    if ((N == 2 && M_ > 512) || (N == 3 && M_ > 96))
      throw std::invalid_argument("cartesian_hamiltonian: grid exceeds resource limit");
    box_ = grid.extent / 2.0;
    h_ = grid.extent / M_;
    axis_.resize(M_);
    for (int j = 0; j < M_; ++j) axis_[j] = -box_ + (j + 0.5) * h_;
    dim_ = 1;
    for (int a = 0; a < N_; ++a) dim_ *= (std::size_t)M_;
    f_.resize(dim_);
    pot_.resize(dim_);
    for (std::size_t t = 0; t < dim_; ++t) {
      double r2 = r_squared(t);
      double s = std::sqrt(1.0 + lam * r2);
      f_[t] = s;
      double r = std::sqrt(r2);
      double v;
      if (family == Family::coulomb) {
        // -s/r = -1/r + (1-s)/r; the singular -1/r part is replaced by its
        // exact cell average (restores second-order convergence through the
        // cusp), the remainder is smooth and point-sampled
        double smooth = r2 > 0 ? (1.0 - s) / r : 0.0;
        double avg_inv_r = (N_ == 2) ? cell_avg_inv_r_2d(t) : 1.0 / r;
        v = -avg_inv_r + smooth;
      } else {
        v = 0.5 * r2 / (s * s);
      }
      if (!literal_)  // exact diagonal remainder of sum pi_i^2 over p s^2 p
        v += 0.5 * (-0.5 * N_ * lam + 0.25 * lam * lam * r2 / (s * s));
      pot_[t] = v;
    }
  }

  std::size_t dim() const { return dim_; }
  int points() const { return M_; }
  double spacing() const { return h_; }
  bool literal() const { return literal_; }

  // K_i v = (F A_i v + A_i (F v)) / 2   (real antisymmetric; literal mode)
  void apply_K(int a, const std::vector<double>& v, std::vector<double>& out) const {
    tmpk_.resize(dim_);
    for (std::size_t t = 0; t < dim_; ++t) tmpk_[t] = f_[t] * v[t];
    apply_A(a, tmpk_, out);
    apply_A(a, v, tmpk_);
    for (std::size_t t = 0; t < dim_; ++t) out[t] = 0.5 * (out[t] + f_[t] * tmpk_[t]);
  }

  // W_ij v = X_i A_j v - X_j A_i v   (real antisymmetric)
  void apply_W(int a, int b, const std::vector<double>& v, std::vector<double>& out) const {
    tmpw_.resize(dim_);
    apply_A(b, v, out);
    apply_A(a, v, tmpw_);
    for (std::size_t t = 0; t < dim_; ++t)
      out[t] = axis_[coord(t, a)] * out[t] - axis_[coord(t, b)] * tmpw_[t];
  }

  // conservative discretization of (p_a s^2 p_a) v  (positive semidefinite)
  void apply_flux(int a, const std::vector<double>& v, std::vector<double>& out) const {
    out.assign(dim_, 0.0);
    std::size_t stride = 1;
    for (int q = 0; q < a; ++q) stride *= (std::size_t)M_;
    double ih2 = 1.0 / (h_ * h_);
    for (std::size_t t = 0; t < dim_; ++t) {
      int j = coord(t, a);
      double up = (j + 1 < M_) ? v[t + stride] - v[t] : -v[t];
      double dn = (j > 0) ? v[t] - v[t - stride] : v[t];
      out[t] = -(face_s2(t, a, j + 1) * up - face_s2(t, a, j) * dn) * ih2;
    }
  }

  void apply(const std::vector<double>& v, std::vector<double>& out) const {
    out.assign(dim_, 0.0);
    std::vector<double> u(dim_), w(dim_);
    for (int a = 0; a < N_; ++a) {
      if (literal_) {
        apply_K(a, v, u);
        apply_K(a, u, w);
        for (std::size_t t = 0; t < dim_; ++t) out[t] -= 0.5 * w[t];
      } else {
        apply_flux(a, v, u);
        for (std::size_t t = 0; t < dim_; ++t) out[t] += 0.5 * u[t];
      }
    }
    if (lam_ != 0.0) {
      for (int a = 0; a < N_; ++a)
        for (int b = a + 1; b < N_; ++b) {
          apply_W(a, b, v, u);
          apply_W(a, b, u, w);
          for (std::size_t t = 0; t < dim_; ++t) out[t] += 0.5 * lam_ * w[t];
        }
    }
    for (std::size_t t = 0; t < dim_; ++t) out[t] += pot_[t] * v[t];
  }

  MatrixAction action() const {
    return [this](const std::vector<double>& v, std::vector<double>& out) { apply(v, out); };
  }

  // W_12 action, used for sector classification (<L12> = -i <v, W_12 v>)
  void apply_W12(const std::vector<double>& v, std::vector<double>& out) const {
    apply_W(0, 1, v, out);
  }

 private:
  int coord(std::size_t t, int a) const {
    for (int q = 0; q < a; ++q) t /= (std::size_t)M_;
    return (int)(t % (std::size_t)M_);
  }

  double r_squared(std::size_t t) const {
    double r2 = 0;
    for (int a = 0; a < N_; ++a) {
      double x = axis_[coord(t, a)];
      r2 += x * x;
    }
    return r2;
  }

  // s^2 = 1 + lam r^2 at the face j (axis-a coordinate -B + j h, the other
  // coordinates at the node values of site t)
  double face_s2(std::size_t t, int a, int j) const {
    double xa = axis_[coord(t, a)];
    double xf = -box_ + j * h_;
    double r2 = r_squared(t) - xa * xa + xf * xf;
    return 1.0 + lam_ * r2;
  }

  // exact mean of 1/r over the 2-D grid cell of site t, via the closed-form
  // primitive of the double integral: d^2/dxdy [x ln(y+r) + y ln(x+r)] = 1/r
  double cell_avg_inv_r_2d(std::size_t t) const {
    auto term = [](double a, double b) {
      if (a == 0.0) return 0.0;
      double r = std::sqrt(a * a + b * b);
      return a * std::log(b + r);
    };
    auto F = [&](double x, double y) { return term(x, y) + term(y, x); };
    double x1 = axis_[coord(t, 0)] - 0.5 * h_, x2 = x1 + h_;
    double y1 = axis_[coord(t, 1)] - 0.5 * h_, y2 = y1 + h_;
    return (F(x2, y2) - F(x1, y2) - F(x2, y1) + F(x1, y1)) / (h_ * h_);
  }

  // central difference with Dirichlet walls
  void apply_A(int a, const std::vector<double>& v, std::vector<double>& out) const {
    out.assign(dim_, 0.0);
    std::size_t stride = 1;
    for (int q = 0; q < a; ++q) stride *= (std::size_t)M_;
    double inv2h = 1.0 / (2.0 * h_);
    for (std::size_t t = 0; t < dim_; ++t) {
      int j = coord(t, a);
      double hi = (j + 1 < M_) ? v[t + stride] : 0.0;
      double lo = (j > 0) ? v[t - stride] : 0.0;
      out[t] = (hi - lo) * inv2h;
    }
  }

  Family family_;
  int N_, M_;
  bool literal_;
  double lam_, box_, h_;
  std::size_t dim_;
  std::vector<double> axis_, f_, pot_;
  mutable std::vector<double> tmpk_, tmpw_;
};

inline CartesianHamiltonian cartesian_hamiltonian(Family family, int N, double lam,
                                                  const GridSpec& grid, bool literal_pi = false) {
  return CartesianHamiltonian(family, N, lam, grid, literal_pi);
}

}  // namespace dynsym

#endif

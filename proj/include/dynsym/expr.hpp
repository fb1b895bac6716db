#ifndef DYNSYM_EXPR_HPP
#define DYNSYM_EXPR_HPP

#include <map>
#include <vector>

#include "dynsym/coeff.hpp"
#include "dynsym/errors.hpp"

namespace dynsym {

// x-exponents and p-exponents of a normally ordered monomial.  The x_N
// exponent is kept <= 1 via x_N^2 -> r^2 - sum_{i<N} x_i^2, so keys form a
// free-module basis and canonical forms are unique.
struct TermKey {
  std::vector<int> x, p;
  bool operator<(const TermKey& o) const {
    if (x != o.x) return x < o.x;
    return p < o.p;
  }
  bool operator==(const TermKey& o) const { return x == o.x && p == o.p; }
};

// Canonical element of the algebra generated by x_i, p_i, r^{+-1},
// s = sqrt(1 + lam r^2): a sum of RadialCoeff * x-monomial * p-monomial
// with all momenta to the right.
class OperatorExpr {
 public:
  OperatorExpr() : dim_(0) {}
  explicit OperatorExpr(int dim) : dim_(dim) {
    if (dim < 1) throw DimensionMismatch("OperatorExpr: dimension must be positive");
  }

  static OperatorExpr zero(int dim) { return OperatorExpr(dim); }
  static OperatorExpr constant(RadialCoeff c, int dim) {
    OperatorExpr e(dim);
    e.add_term(std::vector<int>(dim, 0), std::vector<int>(dim, 0), std::move(c));
    return e;
  }
  static OperatorExpr constant(GaussRat c, int dim) {
    return constant(RadialCoeff(std::move(c)), dim);
  }
  static OperatorExpr x(int i, int dim) {
    check_index(i, dim);
    OperatorExpr e(dim);
    std::vector<int> xe(dim, 0), pe(dim, 0);
    xe[i - 1] = 1;
    e.add_term(xe, pe, RadialCoeff(1L));
    return e;
  }
  static OperatorExpr p(int i, int dim) {
    check_index(i, dim);
    OperatorExpr e(dim);
    std::vector<int> xe(dim, 0), pe(dim, 0);
    pe[i - 1] = 1;
    e.add_term(xe, pe, RadialCoeff(1L));
    return e;
  }
  static OperatorExpr r_pow(int a, int dim) {
    return constant(RadialCoeff(Coeff::r_pow(a)), dim);
  }
  static OperatorExpr s_pow(int b, int dim) {
    return constant(RadialCoeff::s_pow(b), dim);
  }

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<TermKey, RadialCoeff>& terms() const { return terms_; }

  bool operator==(const OperatorExpr& o) const {
    return dim_ == o.dim_ && terms_ == o.terms_;
  }

  OperatorExpr operator-() const {
    OperatorExpr e(dim_);
    for (const auto& [k, c] : terms_) e.terms_.emplace(k, -c);
    return e;
  }
  OperatorExpr operator+(const OperatorExpr& o) const {
    check_dim(o);
    OperatorExpr e = *this;
    for (const auto& [k, c] : o.terms_) e.accumulate(k, c);
    return e;
  }
  OperatorExpr operator-(const OperatorExpr& o) const { return *this + (-o); }
  OperatorExpr& operator+=(const OperatorExpr& o) { *this = *this + o; return *this; }
  OperatorExpr& operator-=(const OperatorExpr& o) { *this = *this - o; return *this; }

  OperatorExpr scale(const RadialCoeff& c) const {
    OperatorExpr e(dim_);
    for (const auto& [k, t] : terms_) e.accumulate_mul_left(k, c, t);
    return e;
  }
  OperatorExpr scale(const GaussRat& c) const { return scale(RadialCoeff(c)); }

  OperatorExpr operator*(const OperatorExpr& o) const {
    check_dim(o);
    OperatorExpr acc(dim_);
    for (const auto& [k1, c1] : terms_)
      for (const auto& [k2, c2] : o.terms_) acc.accumulate_term_product(k1, c1, k2, c2);
    return acc;
  }

  OperatorExpr adjoint() const {
    // (c X^a P^b)^dag = P^b X^a conj(c); x_i, p_i, r, s are self-adjoint
    OperatorExpr acc(dim_);
    std::vector<int> zero(dim_, 0);
    for (const auto& [k, c] : terms_) {
      TermKey pk{zero, k.p};
      TermKey xk{k.x, zero};
      acc.accumulate_term_product_rc(pk, RadialCoeff(1L), xk, c.conj());
    }
    return acc;
  }

  OperatorExpr subst_lam(const GaussRat& lam) const {
    OperatorExpr e(dim_);
    for (const auto& [k, c] : terms_) {
      RadialCoeff sc = c.subst_lam(lam);
      if (!sc.is_zero()) e.terms_.emplace(k, std::move(sc));
    }
    return e;
  }

  // coefficient of a given key (zero RadialCoeff if absent)
  RadialCoeff coeff(const TermKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? RadialCoeff() : it->second;
  }
  RadialCoeff coeff(const std::vector<int>& xe, const std::vector<int>& pe) const {
    return coeff(TermKey{xe, pe});
  }

  // Insert c * X^xe * P^pe, applying the x_N reduction as needed.
  void add_term(std::vector<int> xe, std::vector<int> pe, RadialCoeff c) {
    if ((int)xe.size() != dim_ || (int)pe.size() != dim_)
      throw DimensionMismatch("OperatorExpr: exponent arity mismatch");
    if (c.is_zero()) return;
    if (dim_ >= 2 && xe[dim_ - 1] >= 2) {
      // x_N^2 = r^2 - sum_{i<N} x_i^2
      xe[dim_ - 1] -= 2;
      add_term(xe, pe, c * Coeff::r_pow(2));
      for (int i = 0; i < dim_ - 1; ++i) {
        auto xe2 = xe;
        xe2[i] += 2;
        add_term(xe2, pe, -c);
      }
      return;
    }
    if (dim_ == 1 && xe[0] >= 2) {  // x_1^2 = r^2 in dimension 1
      int k = xe[0];
      xe[0] = k % 2;
      add_term(xe, pe, c * Coeff::r_pow(2 * (k / 2)));
      return;
    }
    accumulate(TermKey{std::move(xe), std::move(pe)}, std::move(c));
  }

 private:
  static void check_index(int i, int dim) {
    if (i < 1 || i > dim) throw IndexError("OperatorExpr: index out of range");
  }
  void check_dim(const OperatorExpr& o) const {
    if (dim_ != o.dim_) throw DimensionMismatch("OperatorExpr: dimension mismatch");
  }

  void accumulate(const TermKey& k, const RadialCoeff& c) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(k, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  void accumulate_mul_left(const TermKey& k, const RadialCoeff& c, const RadialCoeff& t) {
    RadialCoeff prod = c * t;
    if (!prod.is_zero()) accumulate(k, prod);
  }

  // this += (c1 X^a1 P^b1) * (c2 X^a2 P^b2)
  void accumulate_term_product(const TermKey& k1, const RadialCoeff& c1, const TermKey& k2,
                               const RadialCoeff& c2) {
    accumulate_term_product_rc(k1, c1, k2, c2);
  }

  void accumulate_term_product_rc(const TermKey& k1, const RadialCoeff& c1, const TermKey& k2,
                                  const RadialCoeff& c2) {
    // normal-order P^b1 * (c2 X^a2), then prepend c1 X^a1 and append P^b2
    OperatorExpr mid(dim_);
    mid.add_term(k2.x, std::vector<int>(dim_, 0), c2);
    for (int i = 0; i < dim_; ++i)
      for (int n = 0; n < k1.p[i]; ++n) mid = mid.apply_p_left(i);
    for (const auto& [km, cm] : mid.terms_) {
      RadialCoeff cc = c1 * cm;
      if (cc.is_zero()) continue;
      std::vector<int> xe(dim_), pe(dim_);
      for (int i = 0; i < dim_; ++i) {
        xe[i] = k1.x[i] + km.x[i];
        pe[i] = km.p[i] + k2.p[i];
      }
      add_term(std::move(xe), std::move(pe), std::move(cc));
    }
  }

  // p_{i+1} * this, normal ordered:
  //   p_i (c X^a P^b) = c X^a P^{b+e_i} - i a_i c X^{a-e_i} P^b
  //                     - i (dc/dr) r^{-1} X^{a+e_i} P^b
  OperatorExpr apply_p_left(int i) const {
    OperatorExpr out(dim_);
    GaussRat mi = -GaussRat::i();
    for (const auto& [k, c] : terms_) {
      auto pe = k.p;
      pe[i] += 1;
      out.add_term(k.x, pe, c);
      if (k.x[i] > 0) {
        auto xe = k.x;
        xe[i] -= 1;
        out.add_term(xe, k.p, c * GaussRat(Rational(k.x[i])) * mi);
      }
      RadialCoeff dc = c.deriv_r();
      if (!dc.is_zero()) {
        auto xe = k.x;
        xe[i] += 1;
        out.add_term(xe, k.p, dc * Coeff::r_pow(-1) * mi);
      }
    }
    return out;
  }

  int dim_;
  std::map<TermKey, RadialCoeff> terms_;
};

inline OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b) {
  return a * b - b * a;
}
inline OperatorExpr anticommutator(const OperatorExpr& a, const OperatorExpr& b) {
  return a * b + b * a;
}
inline bool equals(const OperatorExpr& a, const OperatorExpr& b) {
  return (a - b).is_zero();
}

}  // namespace dynsym

#endif

#ifndef DYNSYM_POLY_HPP
#define DYNSYM_POLY_HPP

#include <algorithm>
#include <complex>
#include <vector>

#include "dynsym/rational.hpp"

namespace dynsym {

// Univariate polynomial in lam over Q(i), dense coefficients.
class UPoly {
 public:
  UPoly() {}
  UPoly(GaussRat c) { if (!c.is_zero()) c_.push_back(std::move(c)); }
  explicit UPoly(std::vector<GaussRat> c) : c_(std::move(c)) { trim(); }

  static UPoly lam_pow(int k, GaussRat c = GaussRat(1)) {
    std::vector<GaussRat> v(k + 1);
    v[k] = std::move(c);
    return UPoly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  GaussRat coeff(int k) const {
    return (k >= 0 && k < (int)c_.size()) ? c_[k] : GaussRat();
  }
  const GaussRat& lead() const { return c_.back(); }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  UPoly operator+(const UPoly& o) const {
    std::vector<GaussRat> v(std::max(c_.size(), o.c_.size()));
    for (size_t k = 0; k < v.size(); ++k) v[k] = coeff(k) + o.coeff(k);
    return UPoly(std::move(v));
  }
  UPoly operator-(const UPoly& o) const { return *this + (-o); }
  UPoly operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    std::vector<GaussRat> v(c_.size() + o.c_.size() - 1);
    for (size_t a = 0; a < c_.size(); ++a)
      for (size_t b = 0; b < o.c_.size(); ++b) v[a + b] += c_[a] * o.c_[b];
    return UPoly(std::move(v));
  }
  UPoly operator*(const GaussRat& s) const {
    if (s.is_zero()) return UPoly();
    UPoly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
  }
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  // Division with remainder; divisor nonzero.
  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.is_zero()) throw std::domain_error("UPoly: division by zero");
    std::vector<GaussRat> rem = a.c_, quot;
    int db = b.degree();
    if (a.degree() >= db) quot.resize(a.degree() - db + 1);
    for (int k = a.degree(); k >= db; --k) {
      if ((int)rem.size() <= k) continue;
      GaussRat f = rem[k] / b.lead();
      if (f.is_zero()) continue;
      quot[k - db] = f;
      for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.c_[j];
    }
    if (a.degree() >= db) rem.resize(db > 0 ? db : 0);
    q = UPoly(std::move(quot));
    r = UPoly(std::move(rem));
  }

  UPoly operator/(const UPoly& b) const {
    UPoly q, r;
    divmod(*this, b, q, r);
    if (!r.is_zero()) throw std::domain_error("UPoly: inexact division");
    return q;
  }

  // Monic gcd via Euclid (field coefficients).
  static UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
      UPoly q, r;
      divmod(a, b, q, r);
      a = std::move(b);
      b = std::move(r);
    }
    if (!a.is_zero()) a = a * (GaussRat(1) / a.lead());
    return a;
  }

  UPoly subst(const GaussRat& v) const {
    GaussRat acc;
    for (int k = degree(); k >= 0; --k) acc = acc * v + c_[k];
    return UPoly(acc);
  }

  std::complex<double> eval(std::complex<double> v) const {
    std::complex<double> acc = 0;
    for (int k = degree(); k >= 0; --k) acc = acc * v + c_[k].to_complex();
    return acc;
  }

  const std::vector<GaussRat>& coeffs() const { return c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<GaussRat> c_;  // c_[k] multiplies lam^k
};

// Polynomial in r with UPoly(lam) coefficients: an element of Q(i)[lam][r].
class BPoly {
 public:
  BPoly() {}
  BPoly(UPoly c) { if (!c.is_zero()) c_.push_back(std::move(c)); }
  BPoly(GaussRat c) : BPoly(UPoly(std::move(c))) {}
  explicit BPoly(std::vector<UPoly> c) : c_(std::move(c)) { trim(); }

  static BPoly r_pow(int k, UPoly c = UPoly(GaussRat(1))) {
    std::vector<UPoly> v(k + 1);
    v[k] = std::move(c);
    return BPoly(std::move(v));
  }
  // 1 + lam*r^2
  static BPoly one_plus_lam_r2() {
    std::vector<UPoly> v(3);
    v[0] = UPoly(GaussRat(1));
    v[2] = UPoly::lam_pow(1);
    return BPoly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_constant() && c_[0].coeff(0).is_one(); }
  UPoly coeff(int k) const { return (k >= 0 && k < (int)c_.size()) ? c_[k] : UPoly(); }
  const UPoly& lead() const { return c_.back(); }
  const std::vector<UPoly>& coeffs() const { return c_; }

  BPoly operator-() const {
    BPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  BPoly operator+(const BPoly& o) const {
    std::vector<UPoly> v(std::max(c_.size(), o.c_.size()));
    for (size_t k = 0; k < v.size(); ++k) v[k] = coeff(k) + o.coeff(k);
    return BPoly(std::move(v));
  }
  BPoly operator-(const BPoly& o) const { return *this + (-o); }
  BPoly operator*(const BPoly& o) const {
    if (is_zero() || o.is_zero()) return BPoly();
    std::vector<UPoly> v(c_.size() + o.c_.size() - 1);
    for (size_t a = 0; a < c_.size(); ++a)
      for (size_t b = 0; b < o.c_.size(); ++b) v[a + b] = v[a + b] + c_[a] * o.c_[b];
    return BPoly(std::move(v));
  }
  BPoly operator*(const UPoly& s) const {
    BPoly r;
    r.c_ = c_;
    for (auto& c : r.c_) c = c * s;
    r.trim();
    return r;
  }
  BPoly operator*(const GaussRat& s) const { return *this * UPoly(s); }
  bool operator==(const BPoly& o) const { return c_ == o.c_; }

  BPoly deriv_r() const {
    if (c_.size() <= 1) return BPoly();
    std::vector<UPoly> v(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * GaussRat((long)k);
    return BPoly(std::move(v));
  }

  // gcd of the lam-polynomial coefficients (monic).
  UPoly content() const {
    UPoly g;
    for (const auto& c : c_) g = UPoly::gcd(g, c);
    return g;
  }

  // Pseudo-remainder in r: prem(a, b) with the usual lead(b) powers.
  static BPoly pseudo_rem(const BPoly& a, const BPoly& b) {
    if (b.is_zero()) throw std::domain_error("BPoly: division by zero");
    int db = b.degree();
    BPoly rem = a;
    if (a.degree() < db) return rem;
    const UPoly& lb = b.lead();
    int e = a.degree() - db + 1;
    while (!rem.is_zero() && rem.degree() >= db) {
      BPoly t = BPoly::r_pow(rem.degree() - db, rem.lead());
      rem = rem * lb - b * t;
      --e;
    }
    // pseudo-remainder relation wants the full lb power; for gcd only the
    // r-dependence matters, the surplus lands in the content and is stripped
    for (; e > 0; --e) rem = rem * lb;
    return rem;
  }

  // Exact division (throws if not divisible).
  BPoly operator/(const BPoly& b) const {
    if (b.is_zero()) throw std::domain_error("BPoly: division by zero");
    if (is_zero()) return BPoly();
    // long division treating coefficients as rational functions in lam
    BPoly rem = *this, quot;
    int db = b.degree();
    while (!rem.is_zero() && rem.degree() >= db) {
      UPoly q1, r1;
      UPoly::divmod(rem.lead(), b.lead(), q1, r1);
      if (!r1.is_zero()) throw std::domain_error("BPoly: inexact division (lead)");
      BPoly t = BPoly::r_pow(rem.degree() - db, q1);
      quot = quot + t;
      rem = rem - b * t;
    }
    if (!rem.is_zero()) throw std::domain_error("BPoly: inexact division");
    return quot;
  }

  // Primitive-PRS gcd; result is primitive with monic leading lam-coefficient.
  static BPoly gcd(BPoly a, BPoly b) {
    if (a.is_zero()) return normalize(b);
    if (b.is_zero()) return normalize(a);
    UPoly ca = a.content(), cb = b.content();
    a = a.div_content(ca);
    b = b.div_content(cb);
    UPoly cg = UPoly::gcd(ca, cb);
    while (!b.is_zero()) {
      BPoly r = pseudo_rem(a, b);
      a = std::move(b);
      if (!r.is_zero()) r = r.div_content(r.content());
      b = std::move(r);
    }
    BPoly g = normalize(a);
    return g * cg;
  }

  GaussRat subst_lam_eval(const GaussRat& lam, const GaussRat& r) const {
    GaussRat acc;
    for (int k = degree(); k >= 0; --k) acc = acc * r + c_[k].subst(lam).coeff(0);
    return acc;
  }

  // Substitute lam -> value; result a polynomial in r alone (as BPoly).
  BPoly subst_lam(const GaussRat& lam) const {
    std::vector<UPoly> v(c_.size());
    for (size_t k = 0; k < c_.size(); ++k) v[k] = c_[k].subst(lam);
    return BPoly(std::move(v));
  }

  std::complex<double> eval(std::complex<double> lam, std::complex<double> r) const {
    std::complex<double> acc = 0;
    for (int k = degree(); k >= 0; --k) acc = acc * r + c_[k].eval(lam);
    return acc;
  }

  int lam_degree() const {
    int d = -1;
    for (const auto& c : c_) d = std::max(d, c.degree());
    return d;
  }

 private:
  BPoly div_content(const UPoly& c) const {
    if (c.is_zero() || is_zero()) return *this;
    std::vector<UPoly> v(c_.size());
    for (size_t k = 0; k < c_.size(); ++k) v[k] = c_[k] / c;
    return BPoly(std::move(v));
  }
  static BPoly normalize(BPoly p) {
    if (p.is_zero()) return p;
    p = p.div_content(p.content());
    GaussRat lc = p.lead().lead();
    return p * (GaussRat(1) / lc);
  }
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<UPoly> c_;  // c_[k] multiplies r^k
};

}  // namespace dynsym

#endif

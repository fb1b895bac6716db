#ifndef DYNSYM_COEFF_HPP
#define DYNSYM_COEFF_HPP

#include <cmath>
#include <complex>
#include <cstdlib>
#include <optional>
#include <utility>

#include "dynsym/errors.hpp"
#include "dynsym/poly.hpp"

namespace dynsym {

// Rational function in (lam, r) over Q(i), kept gcd-reduced with a
// scalar-normalized denominator so that equal values have equal
// representations.
class Coeff {
 public:
  Coeff() : num_(), den_(GaussRat(1)) {}
  Coeff(GaussRat c) : num_(std::move(c)), den_(GaussRat(1)) {}
  Coeff(long n) : Coeff(GaussRat(n)) {}
  Coeff(BPoly num) : num_(std::move(num)), den_(GaussRat(1)) {}
  Coeff(BPoly num, BPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("Coeff: zero denominator");
    reduce();
  }

  static Coeff r_pow(int k) {
    if (k >= 0) return Coeff(BPoly::r_pow(k));
    return Coeff(BPoly(GaussRat(1)), BPoly::r_pow(-k));
  }
  static Coeff lam() { return Coeff(BPoly(UPoly::lam_pow(1))); }
  static Coeff i() { return Coeff(GaussRat::i()); }

  const BPoly& num() const { return num_; }
  const BPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  Coeff operator-() const { return Coeff(-num_, den_, nullptr); }
  Coeff operator+(const Coeff& o) const {
    return Coeff(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Coeff operator-(const Coeff& o) const {
    return Coeff(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  Coeff operator*(const Coeff& o) const { return Coeff(num_ * o.num_, den_ * o.den_); }
  Coeff operator/(const Coeff& o) const {
    if (o.is_zero()) throw std::domain_error("Coeff: division by zero");
    return Coeff(num_ * o.den_, den_ * o.num_);
  }
  Coeff& operator+=(const Coeff& o) { *this = *this + o; return *this; }
  Coeff& operator-=(const Coeff& o) { *this = *this - o; return *this; }
  Coeff& operator*=(const Coeff& o) { *this = *this * o; return *this; }

  // cross-multiplication equality
  bool operator==(const Coeff& o) const { return num_ * o.den_ == o.num_ * den_; }
  bool operator!=(const Coeff& o) const { return !(*this == o); }

  Coeff inverse() const {
    if (is_zero()) throw std::domain_error("Coeff: inverse of zero");
    return Coeff(den_, num_);
  }

  Coeff deriv_r() const {
    return Coeff(num_.deriv_r() * den_ - num_ * den_.deriv_r(), den_ * den_);
  }

  Coeff conj() const {
    return Coeff(conj_poly(num_), conj_poly(den_));
  }

  Coeff subst_lam(const GaussRat& lam) const {
    BPoly d = den_.subst_lam(lam);
    if (d.is_zero())
      throw DegenerateSubstitution("Coeff: denominator vanishes at substituted lambda");
    return Coeff(num_.subst_lam(lam), d);
  }

  std::complex<double> eval(std::complex<double> lam, std::complex<double> r) const {
    return num_.eval(lam, r) / den_.eval(lam, r);
  }
  GaussRat eval_exact(const GaussRat& lam, const GaussRat& r) const {
    GaussRat d = den_.subst_lam_eval(lam, r);
    if (d.is_zero()) throw std::domain_error("Coeff: pole at evaluation point");
    return num_.subst_lam_eval(lam, r) / d;
  }

 private:
  Coeff(BPoly num, BPoly den, std::nullptr_t) : num_(std::move(num)), den_(std::move(den)) {}

  static BPoly conj_poly(const BPoly& p) {
    std::vector<UPoly> rc(p.degree() + 1);
    for (int k = 0; k <= p.degree(); ++k) {
      std::vector<GaussRat> cc(p.coeff(k).degree() + 1);
      for (int j = 0; j <= p.coeff(k).degree(); ++j) cc[j] = p.coeff(k).coeff(j).conj();
      rc[k] = UPoly(std::move(cc));
    }
    return BPoly(std::move(rc));
  }

  void reduce() {
    if (num_.is_zero()) {
      den_ = BPoly(GaussRat(1));
      return;
    }
    BPoly g = BPoly::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    UPoly cg = UPoly::gcd(num_.content(), den_.content());
    if (!(cg.is_constant() && cg.coeff(0).is_one())) {
      num_ = num_ / BPoly(cg);
      den_ = den_ / BPoly(cg);
    }
    // monic leading coefficient in the denominator
    GaussRat lc = den_.lead().lead();
    if (!lc.is_one()) {
      GaussRat inv = GaussRat(1) / lc;
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }

  BPoly num_, den_;
};

// plain + s_part * s  with  s = sqrt(1 + lam r^2);  the s-degree stays in
// {0, 1} because s^2 rewrites to 1 + lam r^2.  After lambda substitution the
// coefficient carries the specialized value so that the s^2 rewrite (and the
// chain rule for d/dr) uses 1 + lam0 r^2 instead of reintroducing symbolic
// lam; mixing two different specializations is a domain error.
class RadialCoeff {
 public:
  RadialCoeff() {}
  RadialCoeff(Coeff plain) : a_(std::move(plain)) {}
  RadialCoeff(GaussRat c) : a_(Coeff(std::move(c))) {}
  RadialCoeff(long n) : a_(Coeff(n)) {}
  RadialCoeff(Coeff plain, Coeff s_part) : a_(std::move(plain)), b_(std::move(s_part)) {}

  static RadialCoeff s() { return RadialCoeff(Coeff(), Coeff(GaussRat(1))); }
  static Coeff s_squared() { return Coeff(BPoly::one_plus_lam_r2()); }
  // s^k for any integer k, reduced to s-degree 0 or 1
  static RadialCoeff s_pow(int k) {
    Coeff s2 = s_squared();
    bool odd = (k % 2) != 0;
    int half = (k - (odd ? (k > 0 ? 1 : -1) : 0)) / 2;
    Coeff even_part(GaussRat(1));
    for (int j = 0; j < std::abs(half); ++j)
      even_part = (half > 0) ? even_part * s2 : even_part / s2;
    if (!odd) return RadialCoeff(even_part);
    if (k > 0) return RadialCoeff(Coeff(), even_part);
    // s^-1 = s / (1 + lam r^2)
    return RadialCoeff(Coeff(), even_part / s2);
  }

  const Coeff& plain() const { return a_; }
  const Coeff& s_part() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool operator==(const RadialCoeff& o) const { return a_ == o.a_ && b_ == o.b_; }

  RadialCoeff operator-() const { return tagged(-a_, -b_, spec_); }
  RadialCoeff operator+(const RadialCoeff& o) const {
    return tagged(a_ + o.a_, b_ + o.b_, merge(spec_, o.spec_));
  }
  RadialCoeff operator-(const RadialCoeff& o) const {
    return tagged(a_ - o.a_, b_ - o.b_, merge(spec_, o.spec_));
  }
  RadialCoeff operator*(const RadialCoeff& o) const {
    auto tag = merge(spec_, o.spec_);
    return tagged(a_ * o.a_ + b_ * o.b_ * s2(tag), a_ * o.b_ + b_ * o.a_, tag);
  }
  RadialCoeff operator*(const Coeff& c) const { return tagged(a_ * c, b_ * c, spec_); }
  RadialCoeff operator*(const GaussRat& c) const { return *this * Coeff(c); }
  RadialCoeff& operator+=(const RadialCoeff& o) { *this = *this + o; return *this; }
  RadialCoeff& operator-=(const RadialCoeff& o) { *this = *this - o; return *this; }

  RadialCoeff inverse() const {
    // (a + b s)^-1 = (a - b s) / (a^2 - b^2 s^2)
    Coeff d = a_ * a_ - b_ * b_ * s2(spec_);
    if (d.is_zero()) throw std::domain_error("RadialCoeff: inverse of zero");
    return tagged(a_ / d, -(b_ / d), spec_);
  }

  // d/dr, using ds/dr = lam r s / (1 + lam r^2)
  RadialCoeff deriv_r() const {
    Coeff lr = (spec_ ? Coeff(*spec_) : Coeff::lam()) * Coeff::r_pow(1);
    return tagged(a_.deriv_r(), b_.deriv_r() + b_ * (lr / s2(spec_)), spec_);
  }

  RadialCoeff conj() const { return tagged(a_.conj(), b_.conj(), spec_); }

  RadialCoeff subst_lam(const GaussRat& lam) const {
    if (spec_ && !(*spec_ - lam).is_zero())
      throw std::domain_error("RadialCoeff: conflicting lambda substitution");
    if (lam.is_zero())  // s -> 1
      return RadialCoeff(a_.subst_lam(lam) + b_.subst_lam(lam));
    return tagged(a_.subst_lam(lam), b_.subst_lam(lam), lam);
  }

  // numeric value at real lam, r > 0 with s = +sqrt(1+lam r^2)
  std::complex<double> eval(double lam, double r) const {
    double s = std::sqrt(1.0 + lam * r * r);
    return a_.eval(lam, r) + b_.eval(lam, r) * s;
  }

 private:
  static RadialCoeff tagged(Coeff a, Coeff b, std::optional<GaussRat> tag) {
    RadialCoeff c(std::move(a), std::move(b));
    if (tag && !c.b_.is_zero()) c.spec_ = std::move(tag);
    return c;
  }
  static std::optional<GaussRat> merge(const std::optional<GaussRat>& x,
                                       const std::optional<GaussRat>& y) {
    if (x && y) {
      if (!(*x - *y).is_zero())
        throw std::domain_error("RadialCoeff: mixed lambda specializations");
      return x;
    }
    return x ? x : y;
  }
  // the s^2 rewrite target: 1 + lam r^2, with lam specialized when tagged
  static Coeff s2(const std::optional<GaussRat>& tag) {
    Coeff sym = s_squared();
    return tag ? sym.subst_lam(*tag) : sym;
  }

  Coeff a_, b_;
  std::optional<GaussRat> spec_;
};

}  // namespace dynsym

#endif

#ifndef DYNSYM_RATIONAL_HPP
#define DYNSYM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>

namespace dynsym {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) {
  return q.convert_to<double>();
}

inline std::string rational_str(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << "/" << denominator(q);
  return os.str();
}

// Returns true and sets root if q is the square of a rational (q >= 0).
inline bool rational_sqrt(const Rational& q, Rational& root) {
  if (q < 0) return false;
  BigInt n = numerator(q), d = denominator(q);
  BigInt rn = sqrt(n), rd = sqrt(d);
  if (rn * rn != n || rd * rd != d) return false;
  root = Rational(rn, rd);
  return true;
}

// Element of Q(i): re + im*i with exact rational parts.
class GaussRat {
 public:
  GaussRat() : re_(0), im_(0) {}
  GaussRat(long n) : re_(n), im_(0) {}
  GaussRat(const Rational& re) : re_(re), im_(0) {}
  GaussRat(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRat i() { return GaussRat(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }

  GaussRat conj() const { return GaussRat(re_, -im_); }

  GaussRat operator-() const { return GaussRat(-re_, -im_); }
  GaussRat operator+(const GaussRat& o) const { return GaussRat(re_ + o.re_, im_ + o.im_); }
  GaussRat operator-(const GaussRat& o) const { return GaussRat(re_ - o.re_, im_ - o.im_); }
  GaussRat operator*(const GaussRat& o) const {
    return GaussRat(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
  }
  GaussRat operator/(const GaussRat& o) const {
    Rational n2 = o.re_ * o.re_ + o.im_ * o.im_;
    if (n2 == 0) throw std::domain_error("GaussRat: division by zero");
    return GaussRat((re_ * o.re_ + im_ * o.im_) / n2, (im_ * o.re_ - re_ * o.im_) / n2);
  }

  GaussRat& operator+=(const GaussRat& o) { re_ += o.re_; im_ += o.im_; return *this; }
  GaussRat& operator-=(const GaussRat& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  GaussRat& operator*=(const GaussRat& o) { *this = *this * o; return *this; }
  GaussRat& operator/=(const GaussRat& o) { *this = *this / o; return *this; }

  bool operator==(const GaussRat& o) const { return re_ == o.re_ && im_ == o.im_; }
  bool operator!=(const GaussRat& o) const { return !(*this == o); }

  std::complex<double> to_complex() const { return {to_double(re_), to_double(im_)}; }

  std::string str() const {
    if (im_ == 0) return rational_str(re_);
    std::string im_part;
    if (im_ == 1) im_part = "i";
    else if (im_ == -1) im_part = "-i";
    else im_part = rational_str(im_) + "*i";
    if (re_ == 0) return im_part;
    std::string s = rational_str(re_);
    if (im_ > 0) s += "+" + im_part;
    else s += im_part;  // leading '-' already present
    return "(" + s + ")";
  }

 private:
  Rational re_, im_;
};

inline GaussRat operator*(const Rational& q, const GaussRat& g) { return GaussRat(q) * g; }

}  // namespace dynsym

#endif

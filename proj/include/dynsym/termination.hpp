#ifndef DYNSYM_TERMINATION_HPP
#define DYNSYM_TERMINATION_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "dynsym/fit.hpp"

namespace dynsym {

// Dense univariate polynomial over the rationals.
class RatPoly {
 public:
  RatPoly() {}
  RatPoly(Rational c) { if (c != 0) c_.push_back(std::move(c)); }
  explicit RatPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

  int degree() const { return (int)c_.size() - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int k) const { return (k >= 0 && k < (int)c_.size()) ? c_[k] : Rational(0); }

  RatPoly operator+(const RatPoly& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t k = 0; k < v.size(); ++k) v[k] = coeff(k) + o.coeff(k);
    return RatPoly(std::move(v));
  }
  RatPoly operator-() const {
    RatPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  RatPoly operator-(const RatPoly& o) const { return *this + (-o); }
  RatPoly operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t a = 0; a < c_.size(); ++a)
      for (size_t b = 0; b < o.c_.size(); ++b) v[a + b] += c_[a] * o.c_[b];
    return RatPoly(std::move(v));
  }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (int k = degree(); k >= 0; --k) acc = acc * x + c_[k];
    return acc;
  }
  double eval(double x) const {
    double acc = 0;
    for (int k = degree(); k >= 0; --k) acc = acc * x + to_double(c_[k]);
    return acc;
  }

  static void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
    if (b.is_zero()) throw std::domain_error("RatPoly: division by zero");
    std::vector<Rational> rem = a.c_, quot;
    int db = b.degree();
    if (a.degree() >= db) quot.assign(a.degree() - db + 1, Rational(0));
    for (int k = a.degree(); k >= db; --k) {
      Rational f = rem[k] / b.c_[db];
      if (f == 0) continue;
      quot[k - db] = f;
      for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.c_[j];
    }
    if ((int)rem.size() > db) rem.resize(db > 0 ? db : 0);
    q = RatPoly(std::move(quot));
    r = RatPoly(std::move(rem));
  }

  static RatPoly gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
      RatPoly q, r;
      divmod(a, b, q, r);
      a = std::move(b);
      b = std::move(r);
    }
    if (!a.is_zero()) {  // monic
      Rational lc = a.c_.back();
      for (auto& c : a.c_) c /= lc;
    }
    return a;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

// Bivariate polynomial in (E, m): coefficient of E^a is a RatPoly in m.
struct PolyEM {
  std::vector<RatPoly> e;  // e[a] multiplies E^a

  bool is_zero() const {
    for (const auto& p : e)
      if (!p.is_zero()) return false;
    return true;
  }
  void add_term(int a, int mdeg, const Rational& c) {
    if ((int)e.size() <= a) e.resize(a + 1);
    std::vector<Rational> v(mdeg + 1, Rational(0));
    v[mdeg] = c;
    e[a] = e[a] + RatPoly(std::move(v));
  }
  // specialize m, leaving a polynomial in E
  RatPoly at_m(const Rational& m) const {
    std::vector<Rational> v(e.size(), Rational(0));
    for (size_t a = 0; a < e.size(); ++a) v[a] = e[a].eval(m);
    return RatPoly(std::move(v));
  }
  double eval(double E, double m) const {
    double acc = 0;
    for (int a = (int)e.size() - 1; a >= 0; --a) acc = acc * E + e[a].eval(m);
    return acc;
  }
};

// FitResult -> polynomial in (E, m) via H -> E, Lsq -> m^2, L12 -> m
// (2-D half-convention weight bookkeeping), with lam specialized.
inline PolyEM fit_to_poly_em(const FitResult& fit, const Rational& lam) {
  PolyEM out;
  for (const auto& [abc, up] : fit.coeffs) {
    GaussRat c = up.subst(GaussRat(lam)).coeff(0);
    if (!c.is_real())
      throw std::domain_error("fit_to_poly_em: non-real coefficient in scalar fit");
    if (c.is_zero()) continue;
    out.add_term(abc[0], 2 * abc[1] + abc[2], c.re());
  }
  return out;
}

struct EnergyValue {
  std::optional<Rational> exact;
  double value = 0;

  static EnergyValue from_rational(Rational q) {
    EnergyValue v;
    v.value = to_double(q);
    v.exact = std::move(q);
    return v;
  }
  static EnergyValue from_double(double d) {
    EnergyValue v;
    v.value = d;
    return v;
  }
};

struct TerminationSolution {
  int n = 0;
  EnergyValue E;
  Rational m_high, m_low;
  long degeneracy = 0;
};

namespace detail {

inline std::vector<EnergyValue> poly_roots(const RatPoly& p) {
  std::vector<EnergyValue> roots;
  int d = p.degree();
  if (d <= 0) return roots;
  if (d == 1) {
    roots.push_back(EnergyValue::from_rational(-p.coeff(0) / p.coeff(1)));
    return roots;
  }
  if (d == 2) {
    Rational a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
    Rational disc = b * b - 4 * a * c;
    if (disc < 0) return roots;
    Rational sq;
    if (rational_sqrt(disc, sq)) {
      roots.push_back(EnergyValue::from_rational((-b - sq) / (2 * a)));
      if (disc != 0) roots.push_back(EnergyValue::from_rational((-b + sq) / (2 * a)));
    } else {
      double sd = std::sqrt(to_double(disc));
      double ad = to_double(a), bd = to_double(b);
      roots.push_back(EnergyValue::from_double((-bd - sd) / (2 * ad)));
      roots.push_back(EnergyValue::from_double((-bd + sd) / (2 * ad)));
    }
    return roots;
  }
  // degree >= 3: bisection on sign changes inside a Cauchy bound
  double bound = 0;
  for (int k = 0; k < d; ++k)
    bound = std::max(bound, std::fabs(to_double(p.coeff(k) / p.coeff(d))));
  bound += 1.0;
  const int samples = 4000;
  double prev_x = -bound, prev_f = p.eval(prev_x);
  for (int k = 1; k <= samples; ++k) {
    double x = -bound + 2 * bound * k / samples;
    double f = p.eval(x);
    if (prev_f == 0) roots.push_back(EnergyValue::from_double(prev_x));
    else if (prev_f * f < 0) {
      double lo = prev_x, hi = x;
      for (int it = 0; it < 200 && hi - lo > 1e-12 * std::max(1.0, std::fabs(lo)); ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = p.eval(mid);
        if (fm == 0) { lo = hi = mid; break; }
        if (fm * p.eval(lo) < 0) hi = mid;
        else lo = mid;
      }
      roots.push_back(EnergyValue::from_double(0.5 * (lo + hi)));
    }
    prev_x = x;
    prev_f = f;
  }
  return roots;
}

}  // namespace detail

// Solves the two termination conditions G(E, m_high) - F(E, m_high) = 0 and
// G(E, m_low) + F(E, m_low) = 0 on the admissible weight lattice.  The level-n
// multiplet carries weights m_low .. m_high with m_high - m_low = 2n (the text
// states a spread of n; the computed ladders span 2n, which is what the
// degeneracy counts require).
inline std::vector<TerminationSolution> solve_termination(const PolyEM& F, const PolyEM& G,
                                                          int step, int n, int window = 10) {
  if (step != 1 && step != 2) throw std::invalid_argument("solve_termination: step must be 1 or 2");
  if (n < 0) throw std::invalid_argument("solve_termination: n must be >= 0");
  if (F.is_zero() && G.is_zero()) throw NoSolution("solve_termination: F = G = 0");

  std::vector<TerminationSolution> sols;
  long spread = 2L * n;
  for (long mh = -(n + window); mh <= n + window; ++mh) {
    if (step == 2 && ((mh % 2 + 2) % 2) != (n % 2)) continue;
    long ml = mh - spread;
    if (ml < -(n + window)) continue;
    if ((spread % step) != 0) continue;
    RatPoly A = G.at_m(Rational(mh)) - F.at_m(Rational(mh));
    RatPoly B = G.at_m(Rational(ml)) + F.at_m(Rational(ml));
    if (A.is_zero() && B.is_zero()) continue;  // no constraint, not a discrete level
    RatPoly g = A.is_zero() ? B : (B.is_zero() ? A : RatPoly::gcd(A, B));
    for (auto& root : detail::poly_roots(g)) {
      // verify both termination conditions
      if (root.exact) {
        if (A.eval(*root.exact) != 0 || B.eval(*root.exact) != 0) continue;
      } else {
        double scale = std::max(1.0, std::fabs(root.value));
        if (std::fabs(A.eval(root.value)) > 1e-10 * scale ||
            std::fabs(B.eval(root.value)) > 1e-10 * scale)
          continue;
      }
      TerminationSolution s;
      s.n = n;
      s.E = root;
      s.m_high = Rational(mh);
      s.m_low = Rational(ml);
      s.degeneracy = spread / step + 1;
      sols.push_back(std::move(s));
    }
  }
  if (sols.empty()) {
    // check for a continuous (off-lattice) extremal weight before giving up
    for (int k = 0; k <= 800; ++k) {
      double mh = -(n + window) + (2.0 * (n + window)) * k / 800.0;
      double ml = mh - to_double(Rational(spread));
      bool near_lattice = std::fabs(mh - std::round(mh)) < 1e-3;
      if (near_lattice) continue;
      // common root indicator: min over roots of A of |B|
      RatPoly A;  // A, B at real m via double evaluation of the E-coefficients
      std::vector<Rational> va, vb;
      size_t ne = std::max(F.e.size(), G.e.size());
      double best = 1e300;
      std::vector<double> ac(ne, 0.0), bc(ne, 0.0);
      for (size_t a = 0; a < ne; ++a) {
        double Fa = a < F.e.size() ? F.e[a].eval(mh) : 0.0;
        double Ga = a < G.e.size() ? G.e[a].eval(mh) : 0.0;
        ac[a] = Ga - Fa;
        double Fl = a < F.e.size() ? F.e[a].eval(ml) : 0.0;
        double Gl = a < G.e.size() ? G.e[a].eval(ml) : 0.0;
        bc[a] = Gl + Fl;
      }
      // roots of the double-precision A via companion-free bisection
      auto evald = [&](const std::vector<double>& c, double x) {
        double acc = 0;
        for (int a = (int)c.size() - 1; a >= 0; --a) acc = acc * x + c[a];
        return acc;
      };
      double bound = 1.0;
      for (size_t a = 0; a + 1 < ne; ++a)
        if (ac.back() != 0) bound = std::max(bound, std::fabs(ac[a] / ac.back()) + 1);
      double px = -bound, pf = evald(ac, px);
      for (int kk = 1; kk <= 400; ++kk) {
        double x = -bound + 2 * bound * kk / 400.0;
        double f = evald(ac, x);
        if (pf * f <= 0 && (pf != 0 || f != 0)) {
          double lo = px, hi = x;
          for (int it = 0; it < 100; ++it) {
            double mid = 0.5 * (lo + hi);
            if (evald(ac, mid) * evald(ac, lo) <= 0) hi = mid;
            else lo = mid;
          }
          best = std::min(best, std::fabs(evald(bc, 0.5 * (lo + hi))));
        }
        px = x;
        pf = f;
      }
      if (best < 1e-8)
        throw NonLatticeWeights("solve_termination: common root found only at non-lattice weight");
    }
    throw NoSolution("solve_termination: no solution in window");
  }
  std::sort(sols.begin(), sols.end(), [](const TerminationSolution& a, const TerminationSolution& b) {
    return a.E.value < b.E.value;
  });
  return sols;
}

}  // namespace dynsym

#endif

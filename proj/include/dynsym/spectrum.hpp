#ifndef DYNSYM_SPECTRUM_HPP
#define DYNSYM_SPECTRUM_HPP

#include <cmath>
#include <optional>
#include <vector>

#include "dynsym/termination.hpp"

namespace dynsym {

namespace detail {

// Reference closed forms, transcribed per dimension exactly as printed
// (including the unreduced (n+1)/(n+1)^2 factor in the 3-D case).

inline Rational coulomb_printed_2d(const Rational& lam, long n) {
  Rational half(1, 2);
  Rational t1 = Rational(-2) / Rational((2 * n + 1) * (2 * n + 1));
  Rational t2 = -half * lam * Rational(n * (n + 1));
  Rational t3 = Rational(-2) * lam * Rational(n * (n + 1)) * Rational(2 * n + 2) /
                Rational((2 * n + 1) * (2 * n + 1));
  return t1 + t2 + t3;
}

inline Rational coulomb_printed_3d(const Rational& lam, long n) {
  Rational half(1, 2);
  Rational t1 = Rational(-1) / (Rational(2) * Rational((n + 1) * (n + 1)));
  Rational t2 = -half * lam * Rational(n * (n + 2));
  Rational t3 = -lam * Rational(n * (n + 2)) * Rational(n + 1) / Rational((n + 1) * (n + 1));
  return t1 + t2 + t3;
}

inline Rational coulomb_printed_ndim(const Rational& lam, int N, long n) {
  Rational half(1, 2);
  Rational nu = Rational(n) + Rational(N - 1, 2);  // n + (N-1)/2
  Rational ll = Rational(n) * Rational(n + N - 1);
  Rational t1 = Rational(-1) / (Rational(2) * nu * nu);
  Rational t2 = -half * lam * ll;
  Rational t3 = -lam * ll * Rational(n + 1) / (nu * nu);
  return t1 + t2 + t3;
}

}  // namespace detail

// Closed-form level energies from the reference expressions.  Coulomb values
// are exact rationals; the oscillator value is exact when 1 + lam^2/4 is a
// rational square and double-precision otherwise.
inline EnergyValue paper_spectrum(Family family, int N, const Rational& lam, long n) {
  if (n < 0) throw IndexError("paper_spectrum: n must be >= 0");
  if (N < 2) throw DimensionMismatch("paper_spectrum: need dim >= 2");
  if (family == Family::coulomb) {
    if (N == 2) return EnergyValue::from_rational(detail::coulomb_printed_2d(lam, n));
    if (N == 3) return EnergyValue::from_rational(detail::coulomb_printed_3d(lam, n));
    return EnergyValue::from_rational(detail::coulomb_printed_ndim(lam, N, n));
  }
  // oscillator: (n + N/2) sqrt(1 + lam^2/4) - (lam/2)(n^2 + N n + N/2)
  Rational pref = Rational(n) + Rational(N, 2);
  Rational under = Rational(1) + lam * lam / Rational(4);
  Rational shift = (lam / Rational(2)) * (Rational(n * n) + Rational(N) * Rational(n) + Rational(N, 2));
  Rational root;
  if (rational_sqrt(under, root)) return EnergyValue::from_rational(pref * root - shift);
  return EnergyValue::from_double(to_double(pref) * std::sqrt(to_double(under)) - to_double(shift));
}

struct SpectrumRow {
  long n = 0;
  Rational m_high, m_low;
  long degeneracy = 0;
  EnergyValue E_algebraic;
  EnergyValue E_paper;
  std::optional<double> E_radial;
  std::optional<double> E_cartesian;
  double abs_diff = 0;  // |E_algebraic - E_paper|
  double rel_diff = 0;
  bool pass = false;
};

struct SpectrumComparison {
  std::vector<SpectrumRow> rows;
  double abs_tol = 1e-9;
  double rel_tol = 1e-9;
  bool all_pass = true;
};

// Pairs the algebraic termination solutions with the reference closed form.
// Numeric columns (radial / cartesian) are filled in by the caller when a
// numeric cross-check was requested.
inline SpectrumComparison compare_spectra(Family family, int N, const Rational& lam,
                                          const std::vector<TerminationSolution>& algebraic,
                                          double abs_tol = 1e-9, double rel_tol = 1e-9) {
  SpectrumComparison cmp;
  cmp.abs_tol = abs_tol;
  cmp.rel_tol = rel_tol;
  for (const auto& sol : algebraic) {
    SpectrumRow row;
    row.n = sol.n;
    row.m_high = sol.m_high;
    row.m_low = sol.m_low;
    row.degeneracy = sol.degeneracy;
    row.E_algebraic = sol.E;
    row.E_paper = paper_spectrum(family, N, lam, sol.n);
    if (row.E_algebraic.exact && row.E_paper.exact) {
      Rational d = *row.E_algebraic.exact - *row.E_paper.exact;
      row.abs_diff = std::fabs(to_double(d));
    } else {
      row.abs_diff = std::fabs(row.E_algebraic.value - row.E_paper.value);
    }
    double scale = std::max(std::fabs(row.E_algebraic.value), std::fabs(row.E_paper.value));
    row.rel_diff = scale > 0 ? row.abs_diff / scale : 0.0;
    row.pass = row.abs_diff <= abs_tol || row.rel_diff <= rel_tol;
    cmp.all_pass = cmp.all_pass && row.pass;
    cmp.rows.push_back(std::move(row));
  }
  return cmp;
}

}  // namespace dynsym

#endif

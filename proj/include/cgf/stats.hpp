// Exact cumulants, moments, and characteristic-function machinery for
// rational forms. A rational form with value f describes the distribution
// with probability mass c_k / f(1) at k; everything here is that
// distribution's calculus, done in exact rational arithmetic where possible.
#pragma once

#include <complex>
#include <vector>

#include "cgf/forms.hpp"

namespace cgf {

// sum a^d - sum b^d over the form's multisets.
Int power_sum_delta(const RationalForm& rf, int d);

// kappa_1 = sum(a - b)/2 + beta; kappa_d = (B_d / d) * sum(a^d - b^d) for
// d >= 2 (zero for odd d >= 3). Independent of alpha.
Rat cumulant(const RationalForm& rf, int d);

// kappa_1 .. kappa_max_d.
std::vector<Rat> cumulants(const RationalForm& rf, int max_d);

// Raw moment E[X^d] via the set-partition moment-cumulant sum: partitions
// of d whose parts are 1 or even, each weighted by the number of set
// partitions of that type.
Rat moment(const RationalForm& rf, int d);

// Central moment E[(X - mu)^d]: same sum restricted to all-even partitions.
Rat central_moment(const RationalForm& rf, int d);

// Independent oracles that work directly on expanded coefficients:
// sum_k k^d c_k / f(1) and sum_k (k - mu)^d c_k / f(1).
Rat moment_oracle(const IntPoly& p, int d);
Rat central_moment_oracle(const IntPoly& p, int d);

// Cumulant of a single Phi_n (n >= 2) as a CGF: phi(n)/2 for d = 1, else
// (B_d / d) * J_d(n) with the Jordan totient J_d.
Rat cyclo_cumulant(long n, int d);

// Characteristic function f(e^it) / f(1); with standardized = true,
// exp(-it mu / sigma) * phi(t / sigma) using the exact mean and deviation.
std::complex<double> charfun_eval(const IntPoly& p, double t,
                                  bool standardized = false);

// Same value through the product formula
// e^(it mu) * prod_j (b_j sin(a_j t/2)) / (a_j sin(b_j t/2)).
// Valid away from zeros of the denominator sines.
std::complex<double> charfun_sinc(const RationalForm& rf, double t);

struct LogCharfunCoeff {
  int two_d = 0;
  Rat kappa;          // kappa_{2d}, exact
  Rat sigma_pow;      // sigma^{2d} = kappa_2^d, exact
  Rat signed_coeff;   // (-1)^d * kappa / sigma_pow, the z^{2d}/(2d)! weight
  double standardized = 0.0;  // kappa / sigma_pow as a double
};

// Standardized even cumulants kappa*_{2d} = kappa_{2d} / sigma^{2d} for
// 2d <= max_two_d, the coefficients in
// log phi*(z) = sum_d (-1)^d kappa*_{2d} z^{2d} / (2d)!.
// Requires positive variance.
std::vector<LogCharfunCoeff> log_charfun_coeffs(const RationalForm& rf,
                                                int max_two_d);

Rat mean(const RationalForm& rf);
Rat variance(const RationalForm& rf);

}  // namespace cgf

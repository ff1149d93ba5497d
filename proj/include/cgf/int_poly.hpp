// Dense univariate polynomials over arbitrary-precision integers, with the
// exact-division and coefficient-profile operations the rest of the library
// is built on. The zero polynomial is represented by an empty coefficient
// vector; nonzero polynomials always have a nonzero leading coefficient.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cgf/numbers.hpp"

namespace cgf {

struct CoeffProfile {
  bool nonnegative = false;
  bool monic = false;
  // c_k == c_(n-k) over the full coefficient vector.
  bool palindromic = false;
  // Weakly increasing then weakly decreasing over the full vector.
  bool unimodal = false;
  // Contiguous support and c_k^2 >= c_(k-1) * c_(k+1) at interior points.
  bool log_concave_no_internal_zeros = false;
  Int content = 0;  // gcd of coefficients, positive
  long zero_order = 0;  // multiplicity of the root q = 0
};

class IntPoly {
 public:
  IntPoly() = default;  // zero polynomial
  explicit IntPoly(std::vector<Int> coeffs);  // low to high degree; normalized

  static IntPoly constant(const Int& c);
  static IntPoly one() { return constant(1); }
  // c * q^k
  static IntPoly monomial(long k, const Int& c = Int(1));

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return c_; }
  // Coefficient of q^k; zero outside the stored range.
  const Int& coeff(long k) const;

  IntPoly operator+(const IntPoly& rhs) const;
  IntPoly operator-(const IntPoly& rhs) const;
  IntPoly operator*(const IntPoly& rhs) const;
  IntPoly& operator*=(const IntPoly& rhs);
  bool operator==(const IntPoly& rhs) const { return c_ == rhs.c_; }

  // Exact division: returns the quotient when divisor * quotient == *this
  // over Z[q], nullopt otherwise. Divisor must be nonzero.
  std::optional<IntPoly> divexact(const IntPoly& divisor) const;

  Int eval_int(const Int& x) const;
  Int value_at_one() const;

  // *this * q^k
  IntPoly shifted(long k) const;

  // Coefficient statistics; rejects the zero polynomial.
  CoeffProfile profile() const;

 private:
  std::vector<Int> c_;
};

}  // namespace cgf

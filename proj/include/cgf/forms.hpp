// Canonical forms of cyclotomic generating functions and the conversions
// between them: membership testing on expanded polynomials, cyclotomic and
// q-integer (rational) index forms, expansion back to polynomials through
// cyclotomic multiplicity space, direct coefficient extraction, and the
// necessary-condition battery on rational forms.
#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cgf/cyclotomic.hpp"
#include "cgf/int_poly.hpp"

namespace cgf {

// alpha * q^beta * prod_j Phi_(indices[j]), indices sorted ascending.
struct CycloForm {
  Int alpha = 1;
  long beta = 0;
  std::vector<long> indices;
};

IntPoly cyclo_form_to_poly(const CycloForm& form);

// alpha * q^beta * prod_j [numer[j]]_q / prod_j [denom[j]]_q.
struct RationalForm {
  Int alpha = 1;
  long beta = 0;
  std::vector<long> numer;
  std::vector<long> denom;
};

// Cancels common elements, strips 1's, sorts descending, then pads the
// shorter side with 1's so both sides have equal length. For genuine CGFs
// the padding always lands in the denominator.
RationalForm canonical(const RationalForm& rf);

enum class CgfFailure { NegativeCoefficient, NonCyclotomicResidue };

struct CgfCheckResult {
  bool is_cgf = false;
  CycloForm form;       // valid when is_cgf
  CgfFailure reason = CgfFailure::NegativeCoefficient;
};

// Decides whether p is a CGF (nonnegative coefficients, every root zero or
// a root of unity) by content/zero-order extraction followed by ascending
// exact division by Phi_n for n up to twice the squared residual degree.
// p must be nonzero.
CgfCheckResult cgf_check(const IntPoly& p);

// Mobius expansion of each Phi_(n_j) into q-integer brackets, merged and
// canonicalized. Indices must all be >= 2.
RationalForm cyclo_to_rational(const CycloForm& form);

enum class ExpandStatus { Polynomial, NotPolynomial, NotNonnegative };

struct ExpandResult {
  ExpandStatus status = ExpandStatus::Polynomial;
  // The expansion when status != NotPolynomial; for NotNonnegative this is
  // the witness polynomial with a negative coefficient.
  IntPoly poly;
  // Witness modulus when status == NotPolynomial: Phi_witness has negative
  // multiplicity in the quotient.
  long witness = 0;
};

// Expands a rational form exactly via cyclotomic multiplicities: the
// multiplicity of Phi_l in prod [a] / prod [b] is #{a : l | a} - #{b : l | b}.
ExpandResult rational_to_poly(const RationalForm& rf);

// Returns the smallest l >= 2 with negative cyclotomic multiplicity, or
// nullopt when the rational form expands to a polynomial.
std::optional<long> polynomiality_check(const RationalForm& rf);

// Coefficient of q^k in the expansion, computed without expanding: writes
// the form as prod_i (1 - q^i)^(-M_i) and sums over partitions of k - beta
// with parts in the support of M, each part i capped at -M_i when M_i < 0.
Int coeff_via_partitions(const RationalForm& rf, long k);

struct NecessaryReport {
  // Per canonical numerator element: is it a nonnegative integer combination
  // of the denominator elements?
  std::vector<long> numer;  // canonical order, matches span_ok
  std::vector<char> span_ok;
  bool span_all_ok = false;
  // Smallest vs smallest and largest vs largest after sorting.
  bool ends_ok = false;
  // mu/2 <= sigma^2 <= mu^2 with mu = sum(a-b)/2, sigma^2 = sum(a^2-b^2)/12.
  bool variance_ok = false;
  // sum(a^4-b^4) <= (5/3) * (sum(a^2-b^2))^2.
  bool kurtosis_ok = false;
  // sum a^d >= sum b^d for d in {1,2,4,6,8}.
  std::array<bool, 5> power_sums_ok{};
  bool power_sums_all_ok = false;
  // Conjectured conditions, reported but not counted as mandatory.
  bool majorization_ok = false;  // sorted prefix sums dominate from both ends
  bool gale_ok = false;          // sorted pointwise a_k >= b_k
  bool pointwise_ok = false;     // alias of gale_ok

  bool mandatory_ok() const {
    return span_all_ok && ends_ok && variance_ok && kurtosis_ok &&
           power_sums_all_ok;
  }
};

// Evaluates the necessary-condition battery on the canonicalized form.
// Every mandatory condition holds for genuine CGFs; the conjectured ones
// are reported for scans.
NecessaryReport necessary_conditions(const RationalForm& rf);

struct SmallClassification {
  long m = 0;  // canonical length
  bool polynomial = false;
  bool cgf = false;
  // For m == 2: which divisibility case applies (1..4), 0 if none.
  int divisibility_case = 0;
  bool span_ok = false;
};

// Complete CGF decision for canonical forms of length m <= 2 by the
// divisibility/span case analysis. Agrees with rational_to_poly.
SmallClassification classify_small(const RationalForm& rf);

}  // namespace cgf

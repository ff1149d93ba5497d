// Asymptotic-normality diagnostics for sequences of rational forms: the
// scalar summaries used to judge whether standardized coefficient profiles
// approach a Gaussian, plus small helpers for rescaled multisets and
// uniform-sum cumulants.
#pragma once

#include <string>
#include <vector>

#include "cgf/stats.hpp"

namespace cgf {

struct Diagnostics {
  double ratio = 0.0;     // sum_b (b^2 - 1) / sum_a (a^2 - 1)
  double quartic = 0.0;   // sum_a (a / max_a)^4
  double std_k3 = 0.0;    // kappa_3 / sigma^3, identically zero
  double std_k4 = 0.0;    // kappa_4 / sigma^4
  double ms_bound = 0.0;  // max_a / sqrt(sum a^2 - sum b^2)
  double sigma = 0.0;
  double mu = 0.0;
};

// Diagnostics are representation-sensitive by design: the multisets are
// used exactly as given, after the denominator (or shorter side) is padded
// with 1's to equal length. No cancellation is performed, so an unreduced
// product form keeps its own ratio.
Diagnostics diaconis_diagnostics(const RationalForm& rf);

struct ScanPoint {
  long label = 0;  // the family parameter N for reporting
  RationalForm rf;
};

// A labeled sequence of rational forms indexed by a family parameter.
// Every point must be an actual polynomial (polynomiality_check passes);
// normality_scan enforces this.
struct MultisetSeq {
  std::string label;
  std::vector<ScanPoint> points;
};

struct ScanThresholds {
  double ratio_max = 0.95;
  double quartic_min = 10.0;
};

struct ScanReport {
  std::vector<std::pair<long, Diagnostics>> table;
  bool ratio_ok = false;
  bool quartic_increasing = false;
  bool quartic_min_ok = false;
  bool std_k4_decreasing = false;  // strictly, in absolute value
  bool eventually_constant = false;
  std::string verdict;  // "normal-consistent" or "inconclusive"
};

// Heuristic screen, not a proof: a sequence passes when every ratio stays
// below ratio_max, the quartic sums rise strictly and end above
// quartic_min, and |kappa_4 / sigma^4| falls strictly. Requires at least
// three points, each of which must expand to an actual polynomial.
ScanReport normality_scan(const MultisetSeq& seq,
                          const ScanThresholds& thresholds = {});
ScanReport normality_scan(const std::vector<ScanPoint>& points,
                          const ScanThresholds& thresholds = {});

// Multiset divided by its own l_2 norm, sorted descending; the second
// component is the requested l_p norm of the original multiset (p may be
// infinity). This elementwise view is the working interpretation of
// pointwise convergence of rescaled numerator multisets.
std::pair<std::vector<double>, double> rescaled_multiset(
    const std::vector<long>& a, double p = 2.0);

// d-th cumulant of a sum of independent uniform[0, t_i] variables:
// (B_d / d) * sum t_i^d for d >= 2, and 0 for d = 1 (centered convention).
double uniform_sum_cumulant(const std::vector<double>& t, int d);

}  // namespace cgf

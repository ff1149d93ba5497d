#include "cgf/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cgf {

Diagnostics diaconis_diagnostics(const RationalForm& rf) {
  RationalForm padded = rf;
  while (padded.numer.size() < padded.denom.size()) padded.numer.push_back(1);
  while (padded.denom.size() < padded.numer.size()) padded.denom.push_back(1);

  Int sa2 = 0, sb2 = 0, s2 = 0, s4 = 0, s1 = 0;
  long amax = 0;
  for (long a : padded.numer) {
    if (a < 1) throw std::invalid_argument("diagnostics: bad element");
    sa2 += Int(a) * a - 1;
    amax = std::max(amax, a);
  }
  for (long b : padded.denom) {
    if (b < 1) throw std::invalid_argument("diagnostics: bad element");
    sb2 += Int(b) * b - 1;
  }
  s1 = power_sum_delta(padded, 1);
  s2 = power_sum_delta(padded, 2);
  s4 = power_sum_delta(padded, 4);
  if (s2 <= 0)
    throw std::invalid_argument("diagnostics: nonpositive variance");

  Diagnostics d;
  d.ratio = sa2 == 0 ? 0.0 : Rat(sb2, sa2).convert_to<double>();
  Rat quart = 0;
  Int amax4 = int_pow(Int(amax), 4);
  for (long a : padded.numer) quart += Rat(int_pow(Int(a), 4), amax4);
  d.quartic = quart.convert_to<double>();
  Rat sigma2 = Rat(s2) / 12;
  d.sigma = std::sqrt(sigma2.convert_to<double>());
  d.mu = Rat(Rat(s1) / 2 + padded.beta).convert_to<double>();
  d.std_k3 = 0.0;
  Rat k4 = bernoulli(4) / 4 * Rat(s4);
  d.std_k4 = Rat(k4 / (sigma2 * sigma2)).convert_to<double>();
  d.ms_bound = amax / std::sqrt(Int(s2).convert_to<double>());
  return d;
}

ScanReport normality_scan(const MultisetSeq& seq,
                          const ScanThresholds& thresholds) {
  return normality_scan(seq.points, thresholds);
}

ScanReport normality_scan(const std::vector<ScanPoint>& points,
                          const ScanThresholds& thresholds) {
  if (points.size() < 3)
    throw std::invalid_argument("normality_scan: needs at least 3 points");
  ScanReport rep;
  for (const ScanPoint& pt : points) {
    if (polynomiality_check(pt.rf))
      throw std::invalid_argument("normality_scan: point is not a polynomial");
    rep.table.emplace_back(pt.label, diaconis_diagnostics(pt.rf));
  }

  rep.ratio_ok = true;
  for (const auto& [label, d] : rep.table) {
    (void)label;
    if (!(d.ratio <= thresholds.ratio_max)) rep.ratio_ok = false;
  }
  rep.quartic_increasing = true;
  rep.std_k4_decreasing = true;
  rep.eventually_constant = false;
  for (size_t i = 1; i < rep.table.size(); ++i) {
    const Diagnostics& prev = rep.table[i - 1].second;
    const Diagnostics& cur = rep.table[i].second;
    if (!(cur.quartic > prev.quartic)) rep.quartic_increasing = false;
    if (!(std::fabs(cur.std_k4) < std::fabs(prev.std_k4)))
      rep.std_k4_decreasing = false;
    if (cur.ratio == prev.ratio && cur.quartic == prev.quartic &&
        cur.std_k4 == prev.std_k4 && cur.sigma == prev.sigma &&
        cur.mu == prev.mu)
      rep.eventually_constant = true;
  }
  rep.quartic_min_ok = rep.table.back().second.quartic > thresholds.quartic_min;
  bool pass = rep.ratio_ok && rep.quartic_increasing && rep.quartic_min_ok &&
              rep.std_k4_decreasing;
  rep.verdict = pass ? "normal-consistent" : "inconclusive";
  return rep;
}

std::pair<std::vector<double>, double> rescaled_multiset(
    const std::vector<long>& a, double p) {
  if (a.empty()) throw std::invalid_argument("rescaled_multiset: empty");
  if (!(p >= 1.0)) throw std::invalid_argument("rescaled_multiset: p < 1");
  double pnorm;
  if (std::isinf(p)) {
    long mx = *std::max_element(a.begin(), a.end());
    pnorm = static_cast<double>(mx);
  } else {
    double s = 0.0;
    for (long x : a) s += std::pow(std::fabs(static_cast<double>(x)), p);
    pnorm = std::pow(s, 1.0 / p);
  }
  double s2 = 0.0;
  for (long x : a) s2 += static_cast<double>(x) * static_cast<double>(x);
  double norm2 = std::sqrt(s2);
  if (norm2 == 0.0) throw std::invalid_argument("rescaled_multiset: zero norm");
  std::vector<double> out;
  out.reserve(a.size());
  for (long x : a) out.push_back(static_cast<double>(x) / norm2);
  std::sort(out.rbegin(), out.rend());
  return {out, pnorm};
}

double uniform_sum_cumulant(const std::vector<double>& t, int d) {
  if (d < 1) throw std::invalid_argument("uniform_sum_cumulant: d < 1");
  if (d == 1) return 0.0;
  if (d % 2 == 1) return 0.0;
  double s = 0.0;
  for (double ti : t) s += std::pow(std::fabs(ti), d);
  return (bernoulli(d) / d).convert_to<double>() * s;
}

}  // namespace cgf

#include "cgf/forms.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cgf {

namespace {

std::map<long, long> count_multiset(const std::vector<long>& v) {
  std::map<long, long> counts;
  for (long x : v) ++counts[x];
  return counts;
}

// Nonnegative integer combinations of coins, reachability up to limit.
std::vector<char> coin_reachable(const std::vector<long>& coins, long limit) {
  std::vector<char> reach(limit + 1, 0);
  reach[0] = 1;
  for (long c : coins) {
    if (c <= 0) continue;
    for (long v = c; v <= limit; ++v)
      if (reach[v - c]) reach[v] = 1;
  }
  return reach;
}

Int power_sum(const std::vector<long>& v, int d) {
  Int s = 0;
  for (long x : v) s += int_pow(Int(x), d);
  return s;
}

}  // namespace

IntPoly cyclo_form_to_poly(const CycloForm& form) {
  IntPoly p = IntPoly::constant(form.alpha);
  for (long n : form.indices) p *= cyclo(n);
  return p.shifted(form.beta);
}

RationalForm canonical(const RationalForm& rf) {
  for (long a : rf.numer)
    if (a < 1) throw std::invalid_argument("canonical: elements must be >= 1");
  for (long b : rf.denom)
    if (b < 1) throw std::invalid_argument("canonical: elements must be >= 1");
  auto na = count_multiset(rf.numer);
  auto nb = count_multiset(rf.denom);
  for (auto& [val, cnt] : na) {
    auto it = nb.find(val);
    if (it == nb.end()) continue;
    long common = std::min(cnt, it->second);
    cnt -= common;
    it->second -= common;
  }
  RationalForm out;
  out.alpha = rf.alpha;
  out.beta = rf.beta;
  for (auto [val, cnt] : na)
    if (val != 1)
      for (long i = 0; i < cnt; ++i) out.numer.push_back(val);
  for (auto [val, cnt] : nb)
    if (val != 1)
      for (long i = 0; i < cnt; ++i) out.denom.push_back(val);
  while (out.numer.size() < out.denom.size()) out.numer.push_back(1);
  while (out.denom.size() < out.numer.size()) out.denom.push_back(1);
  std::sort(out.numer.rbegin(), out.numer.rend());
  std::sort(out.denom.rbegin(), out.denom.rend());
  return out;
}

CgfCheckResult cgf_check(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("cgf_check: zero polynomial");
  CgfCheckResult res;
  for (const Int& c : p.coeffs()) {
    if (c < 0) {
      res.reason = CgfFailure::NegativeCoefficient;
      return res;
    }
  }
  CoeffProfile prof = p.profile();
  CycloForm form;
  form.beta = prof.zero_order;
  form.alpha = prof.content;
  std::vector<Int> scaled;
  scaled.reserve(p.degree() - prof.zero_order + 1);
  for (long k = prof.zero_order; k <= p.degree(); ++k)
    scaled.push_back(p.coeff(k) / prof.content);
  IntPoly residue{std::move(scaled)};
  long n = 2;
  while (residue.degree() > 0) {
    long d = residue.degree();
    if (n > 2 * d * d) {
      res.reason = CgfFailure::NonCyclotomicResidue;
      return res;
    }
    if (euler_phi(n) <= d) {
      while (auto quot = residue.divexact(cyclo(n))) {
        residue = std::move(*quot);
        form.indices.push_back(n);
        if (residue.degree() == 0) break;
      }
    }
    ++n;
  }
  // The residue is primitive with positive coefficients, so it is 1.
  if (!(residue == IntPoly::one()))
    throw std::logic_error("cgf_check: nontrivial constant residue");
  res.is_cgf = true;
  res.form = std::move(form);
  return res;
}

RationalForm cyclo_to_rational(const CycloForm& form) {
  RationalForm rf;
  rf.alpha = form.alpha;
  rf.beta = form.beta;
  for (long n : form.indices) {
    if (n < 2)
      throw std::invalid_argument("cyclo_to_rational: indices must be >= 2");
    auto [numer, denom] = cyclo_rational(n);
    rf.numer.insert(rf.numer.end(), numer.begin(), numer.end());
    rf.denom.insert(rf.denom.end(), denom.begin(), denom.end());
  }
  return canonical(rf);
}

namespace {

// Multiplicity of Phi_l in prod [a] / prod [b] for each l >= 2, i.e.
// #{a : l | a} - #{b : l | b}, over l up to the largest element.
std::map<long, long> cyclo_multiplicities(const RationalForm& rf) {
  long mx = 1;
  for (long a : rf.numer) mx = std::max(mx, a);
  for (long b : rf.denom) mx = std::max(mx, b);
  std::map<long, long> mult;
  for (long l = 2; l <= mx; ++l) {
    long m = 0;
    for (long a : rf.numer)
      if (a % l == 0) ++m;
    for (long b : rf.denom)
      if (b % l == 0) --m;
    if (m != 0) mult[l] = m;
  }
  return mult;
}

}  // namespace

std::optional<long> polynomiality_check(const RationalForm& rf) {
  for (long a : rf.numer)
    if (a < 1) throw std::invalid_argument("polynomiality_check: bad element");
  for (long b : rf.denom)
    if (b < 1) throw std::invalid_argument("polynomiality_check: bad element");
  for (const auto& [l, m] : cyclo_multiplicities(rf))
    if (m < 0) return l;
  return std::nullopt;
}

ExpandResult rational_to_poly(const RationalForm& rf) {
  for (long a : rf.numer)
    if (a < 1) throw std::invalid_argument("rational_to_poly: bad element");
  for (long b : rf.denom)
    if (b < 1) throw std::invalid_argument("rational_to_poly: bad element");
  ExpandResult res;
  auto mult = cyclo_multiplicities(rf);
  for (const auto& [l, m] : mult) {
    if (m < 0) {
      res.status = ExpandStatus::NotPolynomial;
      res.witness = l;
      return res;
    }
  }
  IntPoly p = IntPoly::constant(rf.alpha);
  for (const auto& [l, m] : mult)
    for (long i = 0; i < m; ++i) p *= cyclo(l);
  res.poly = p.shifted(rf.beta);
  for (const Int& c : res.poly.coeffs()) {
    if (c < 0) {
      res.status = ExpandStatus::NotNonnegative;
      return res;
    }
  }
  res.status = ExpandStatus::Polynomial;
  return res;
}

Int coeff_via_partitions(const RationalForm& rf, long k) {
  RationalForm c = canonical(rf);
  k -= c.beta;
  if (k < 0) return 0;
  if (k == 0) return c.alpha;
  // Net exponents M_i of (1 - q^i)^(-1); equal side lengths make the
  // bookkeeping for the [i] = (1 - q^i)/(1 - q) brackets cancel at i = 1.
  std::map<long, long> M;
  for (long b : c.denom) ++M[b];
  for (long a : c.numer) --M[a];
  std::vector<std::pair<long, long>> support;  // (part value, M_i)
  for (auto [i, m] : M)
    if (m != 0) support.emplace_back(i, m);
  // Larger parts first so the remaining weight shrinks fast.
  std::sort(support.rbegin(), support.rend());

  Int total = 0;
  // Depth-first over multiplicities m_i of each part; the factor for part i
  // used m_i times is binomial(M_i + m_i - 1, m_i), which vanishes exactly
  // when M_i <= 0 and m_i > -M_i.
  std::function<void(size_t, long, const Int&)> walk = [&](size_t pos,
                                                           long rem,
                                                           const Int& acc) {
    if (rem == 0) {
      total += acc;
      return;
    }
    if (pos == support.size()) return;
    auto [part, m_cap] = support[pos];
    walk(pos + 1, rem, acc);
    long max_mult = rem / part;
    if (m_cap < 0) max_mult = std::min(max_mult, -m_cap);
    for (long mult = 1; mult <= max_mult; ++mult) {
      Int fac = binomial(Int(m_cap + mult - 1), mult);
      if (fac == 0) break;
      walk(pos + 1, rem - mult * part, acc * fac);
    }
  };
  walk(0, k, Int(1));
  return total * c.alpha;
}

NecessaryReport necessary_conditions(const RationalForm& rf) {
  RationalForm c = canonical(rf);
  NecessaryReport rep;
  rep.numer = c.numer;

  std::vector<long> a_sorted = c.numer;
  std::vector<long> b_sorted = c.denom;
  std::sort(a_sorted.begin(), a_sorted.end());
  std::sort(b_sorted.begin(), b_sorted.end());
  size_t m = a_sorted.size();

  long amax = 0;
  for (long a : c.numer) amax = std::max(amax, a);
  std::vector<char> reach = coin_reachable(c.denom, amax);
  rep.span_all_ok = true;
  for (long a : c.numer) {
    bool ok = reach[a];
    rep.span_ok.push_back(ok);
    if (!ok) rep.span_all_ok = false;
  }

  rep.ends_ok = m == 0 || (a_sorted.front() >= b_sorted.front() &&
                           a_sorted.back() >= b_sorted.back());

  Int s1 = power_sum(a_sorted, 1) - power_sum(b_sorted, 1);
  Int s2 = power_sum(a_sorted, 2) - power_sum(b_sorted, 2);
  Int s4 = power_sum(a_sorted, 4) - power_sum(b_sorted, 4);
  Rat mu = Rat(s1) / 2;
  Rat sigma2 = Rat(s2) / 12;
  rep.variance_ok = (mu / 2 <= sigma2) && (sigma2 <= mu * mu);
  // Vacuous for constant forms, where the kurtosis is undefined.
  rep.kurtosis_ok = s2 == 0 ? true : Rat(s4) <= Rat(5, 3) * Rat(s2 * s2);

  const int ds[5] = {1, 2, 4, 6, 8};
  rep.power_sums_all_ok = true;
  for (int i = 0; i < 5; ++i) {
    rep.power_sums_ok[i] =
        power_sum(a_sorted, ds[i]) >= power_sum(b_sorted, ds[i]);
    if (!rep.power_sums_ok[i]) rep.power_sums_all_ok = false;
  }

  rep.majorization_ok = true;
  {
    Int pa = 0, pb = 0;
    for (size_t i = 0; i < m; ++i) {
      pa += a_sorted[i];
      pb += b_sorted[i];
      if (pa < pb) rep.majorization_ok = false;
    }
    Int sa = 0, sb = 0;
    for (size_t i = m; i-- > 0;) {
      sa += a_sorted[i];
      sb += b_sorted[i];
      if (sa < sb) rep.majorization_ok = false;
    }
  }

  rep.gale_ok = true;
  for (size_t i = 0; i < m; ++i)
    if (a_sorted[i] < b_sorted[i]) rep.gale_ok = false;
  rep.pointwise_ok = rep.gale_ok;

  return rep;
}

SmallClassification classify_small(const RationalForm& rf) {
  RationalForm c = canonical(rf);
  SmallClassification out;
  out.m = static_cast<long>(c.numer.size());
  if (out.m > 2)
    throw std::invalid_argument("classify_small: canonical length must be <= 2");
  out.polynomial = !polynomiality_check(c).has_value();
  if (out.m == 0) {
    out.cgf = true;
    out.span_ok = true;
    return out;
  }
  if (out.m == 1) {
    long a = c.numer[0], b = c.denom[0];
    out.divisibility_case = (a % b == 0) ? 1 : 0;
    out.span_ok = (a % b == 0);
    out.cgf = out.divisibility_case != 0 && out.span_ok;
    return out;
  }
  long a1 = std::min(c.numer[0], c.numer[1]);
  long a2 = std::max(c.numer[0], c.numer[1]);
  long b1 = std::min(c.denom[0], c.denom[1]);
  long b2 = std::max(c.denom[0], c.denom[1]);
  long g = std::gcd(b1, b2);
  if (a1 % b1 == 0 && a2 % b2 == 0)
    out.divisibility_case = 1;
  else if (a2 % b1 == 0 && a1 % b2 == 0)
    out.divisibility_case = 2;
  else if (a1 % b1 == 0 && a1 % b2 == 0 && a2 % g == 0)
    out.divisibility_case = 3;
  else if (a2 % b1 == 0 && a2 % b2 == 0 && a1 % g == 0)
    out.divisibility_case = 4;
  std::vector<char> reach = coin_reachable({b1, b2}, a2);
  out.span_ok = reach[a1] && reach[a2];
  out.cgf = out.divisibility_case != 0 && out.span_ok;
  return out;
}

}  // namespace cgf

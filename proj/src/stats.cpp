#include "cgf/stats.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace cgf {

namespace {

// Partitions of d as (part, multiplicity) pairs, parts descending, filtered
// by `admit` on each part value.
void for_each_partition(
    int d, const std::function<bool(int)>& admit,
    const std::function<void(const std::vector<std::pair<int, int>>&)>& emit) {
  std::vector<std::pair<int, int>> current;
  std::function<void(int, int)> walk = [&](int rem, int max_part) {
    if (rem == 0) {
      emit(current);
      return;
    }
    for (int part = std::min(rem, max_part); part >= 1; --part) {
      if (!admit(part)) continue;
      for (int mult = 1; mult * part <= rem; ++mult) {
        current.emplace_back(part, mult);
        walk(rem - mult * part, part - 1);
        current.pop_back();
      }
    }
  };
  walk(d, d);
}

// Number of set partitions of a d-element set with type (part, mult) pairs:
// d! / prod (part!)^mult * mult!.
Rat set_partition_count(int d, const std::vector<std::pair<int, int>>& type) {
  Int denom = 1;
  for (auto [part, mult] : type)
    denom *= int_pow(factorial(part), mult) * factorial(mult);
  return Rat(factorial(d), denom);
}

Rat moment_by_partitions(const RationalForm& rf, int d, bool central) {
  if (d == 0) return 1;
  auto admit = central ? std::function<bool(int)>([](int part) {
    return part % 2 == 0;
  })
                       : std::function<bool(int)>([](int part) {
                           return part == 1 || part % 2 == 0;
                         });
  Rat total = 0;
  for_each_partition(d, admit, [&](const std::vector<std::pair<int, int>>& t) {
    Rat term = set_partition_count(d, t);
    for (auto [part, mult] : t) {
      Rat kappa = cumulant(rf, part);
      for (int i = 0; i < mult; ++i) term *= kappa;
    }
    total += term;
  });
  return total;
}

}  // namespace

Int power_sum_delta(const RationalForm& rf, int d) {
  Int s = 0;
  for (long a : rf.numer) s += int_pow(Int(a), d);
  for (long b : rf.denom) s -= int_pow(Int(b), d);
  return s;
}

// The power-sum formula assumes equal-length multisets (each [a]/[b] pair a
// difference of uniforms). Unequal representations are handled by the count
// correction, which is what padding the shorter side with 1's would add.
Rat cumulant(const RationalForm& rf, int d) {
  if (d < 1) throw std::invalid_argument("cumulant: d must be >= 1");
  Int pad = Int(rf.numer.size()) - Int(rf.denom.size());
  if (d == 1) return Rat(power_sum_delta(rf, 1) - pad) / 2 + rf.beta;
  return bernoulli(d) / d * Rat(power_sum_delta(rf, d) - pad);
}

std::vector<Rat> cumulants(const RationalForm& rf, int max_d) {
  std::vector<Rat> out;
  for (int d = 1; d <= max_d; ++d) out.push_back(cumulant(rf, d));
  return out;
}

Rat moment(const RationalForm& rf, int d) {
  return moment_by_partitions(rf, d, false);
}

Rat central_moment(const RationalForm& rf, int d) {
  return moment_by_partitions(rf, d, true);
}

Rat moment_oracle(const IntPoly& p, int d) {
  if (p.is_zero()) throw std::invalid_argument("moment_oracle: zero poly");
  Int num = 0;
  for (long k = 0; k <= p.degree(); ++k) num += int_pow(Int(k), d) * p.coeff(k);
  return Rat(num, p.value_at_one());
}

Rat central_moment_oracle(const IntPoly& p, int d) {
  if (p.is_zero())
    throw std::invalid_argument("central_moment_oracle: zero poly");
  Rat mu = moment_oracle(p, 1);
  Rat num = 0;
  for (long k = 0; k <= p.degree(); ++k) {
    Rat dev = Rat(k) - mu;
    Rat pw = 1;
    for (int i = 0; i < d; ++i) pw *= dev;
    num += pw * Rat(p.coeff(k));
  }
  return num / Rat(p.value_at_one());
}

Rat cyclo_cumulant(long n, int d) {
  if (n < 2) throw std::invalid_argument("cyclo_cumulant: n must be >= 2");
  if (d < 1) throw std::invalid_argument("cyclo_cumulant: d must be >= 1");
  if (d == 1) return Rat(euler_phi(n)) / 2;
  return bernoulli(d) / d * Rat(jordan_totient(d, n));
}

std::complex<double> charfun_eval(const IntPoly& p, double t,
                                  bool standardized) {
  if (p.is_zero()) throw std::invalid_argument("charfun_eval: zero poly");
  Int f1 = p.value_at_one();
  if (f1 == 0) throw std::invalid_argument("charfun_eval: f(1) = 0");
  double shift = 0.0;
  if (standardized) {
    Rat mu = moment_oracle(p, 1);
    Rat var = moment_oracle(p, 2) - mu * mu;
    if (var <= 0)
      throw std::invalid_argument("charfun_eval: nonpositive variance");
    double sigma = std::sqrt(var.convert_to<double>());
    shift = -t * mu.convert_to<double>() / sigma;
    t /= sigma;
  }
  std::complex<double> sum = 0.0;
  for (long k = 0; k <= p.degree(); ++k) {
    if (p.coeff(k) == 0) continue;
    double w = Rat(p.coeff(k), f1).convert_to<double>();
    sum += w * std::polar(1.0, t * static_cast<double>(k));
  }
  if (standardized) sum *= std::polar(1.0, shift);
  return sum;
}

std::complex<double> charfun_sinc(const RationalForm& rf, double t) {
  RationalForm c = canonical(rf);
  if (t == 0.0) return 1.0;
  double mu = Rat(Rat(power_sum_delta(c, 1)) / 2 + c.beta).convert_to<double>();
  double prod = 1.0;
  for (long a : c.numer) {
    double s = std::sin(a * t / 2);
    prod *= s / a;
  }
  for (long b : c.denom) {
    double s = std::sin(b * t / 2);
    if (std::fabs(s) < 1e-300)
      throw std::invalid_argument("charfun_sinc: t at a denominator zero");
    prod *= b / s;
  }
  return std::polar(1.0, mu * t) * prod;
}

std::vector<LogCharfunCoeff> log_charfun_coeffs(const RationalForm& rf,
                                                int max_two_d) {
  Rat var = cumulant(rf, 2);
  if (var <= 0)
    throw std::invalid_argument("log_charfun_coeffs: nonpositive variance");
  std::vector<LogCharfunCoeff> out;
  Rat sigma_pow = 1;
  int sign = 1;
  for (int two_d = 2; two_d <= max_two_d; two_d += 2) {
    sigma_pow *= var;
    sign = -sign;
    LogCharfunCoeff c;
    c.two_d = two_d;
    c.kappa = cumulant(rf, two_d);
    c.sigma_pow = sigma_pow;
    c.signed_coeff = Rat(sign) * c.kappa / sigma_pow;
    c.standardized = Rat(c.kappa / sigma_pow).convert_to<double>();
    out.push_back(std::move(c));
  }
  return out;
}

Rat mean(const RationalForm& rf) { return cumulant(rf, 1); }

Rat variance(const RationalForm& rf) { return cumulant(rf, 2); }

}  // namespace cgf

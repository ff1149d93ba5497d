#include "cgf/numbers.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace cgf {

std::vector<std::pair<long, int>> factorize(long n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<long> divisors(long n) {
  auto fac = factorize(n);
  std::vector<long> divs{1};
  for (auto [p, e] : fac) {
    size_t base = divs.size();
    long pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

long euler_phi(long n) {
  long result = n;
  for (auto [p, e] : factorize(n)) {
    (void)e;
    result -= result / p;
  }
  return result;
}

int mobius(long n) {
  int sign = 1;
  for (auto [p, e] : factorize(n)) {
    (void)p;
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

Int int_pow(const Int& p, long e) {
  if (e < 0) throw std::invalid_argument("int_pow: negative exponent");
  Int result = 1;
  Int base = p;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Int jordan_totient(int d, long n) {
  if (d < 1) throw std::invalid_argument("jordan_totient: d must be >= 1");
  Int result = 1;
  for (auto [p, e] : factorize(n)) {
    Int pd = int_pow(Int(p), d);
    result *= int_pow(pd, e - 1) * (pd - 1);
  }
  return result;
}

NTProfile nt_profile(long n, int max_d) {
  NTProfile prof;
  prof.n = n;
  prof.phi = euler_phi(n);
  prof.mu = mobius(n);
  prof.factors = factorize(n);
  for (int d = 1; d <= max_d; ++d) prof.jordan[d] = jordan_totient(d, n);
  return prof;
}

Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: n must be >= 0");
  Int result = 1;
  for (long i = 2; i <= n; ++i) result *= i;
  return result;
}

Int binomial(const Int& n, long k) {
  if (k < 0) throw std::invalid_argument("binomial: k must be >= 0");
  Int num = 1;
  for (long i = 0; i < k; ++i) num *= n - i;
  Int den = factorial(k);
  // A product of k consecutive integers is divisible by k!.
  return num / den;
}

Rat bernoulli(int d) {
  if (d < 0) throw std::invalid_argument("bernoulli: d must be >= 0");
  static std::mutex mtx;
  static std::vector<Rat> cache{Rat(1)};
  std::lock_guard<std::mutex> lock(mtx);
  while (static_cast<int>(cache.size()) <= d) {
    long m = static_cast<long>(cache.size());
    // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j, standard convention.
    Rat sum = 0;
    for (long j = 0; j < m; ++j) {
      Rat bj = cache[j];
      if (j == 1) bj = -bj;  // cache holds B_1 = +1/2; recurrence wants -1/2
      sum += Rat(binomial(Int(m + 1), j)) * bj;
    }
    Rat bm = -sum / Rat(m + 1);
    if (m == 1) bm = -bm;  // store the +1/2 convention
    cache.push_back(bm);
  }
  return cache[d];
}

}  // namespace cgf

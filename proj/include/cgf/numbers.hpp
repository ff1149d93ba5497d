// Exact integer/rational arithmetic and elementary number theory used
// throughout the library: factorization, Euler phi, Mobius mu, Jordan
// totients, Bernoulli numbers, and generalized binomial coefficients.
#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cgf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Prime factorization by trial division, ascending primes. n >= 1.
std::vector<std::pair<long, int>> factorize(long n);

// Divisors of n in ascending order. n >= 1.
std::vector<long> divisors(long n);

long euler_phi(long n);

// Mobius function: 0 if n has a squared prime factor, else (-1)^(#primes).
int mobius(long n);

// Jordan totient J_d(n) = n^d * prod_{p | n} (1 - p^-d), computed as the
// integer product prod_{p^e || n} (p^(d e) - p^(d(e-1))). J_d(1) = 1.
Int jordan_totient(int d, long n);

struct NTProfile {
  long n = 0;
  long phi = 0;
  int mu = 0;
  std::vector<std::pair<long, int>> factors;
  std::map<int, Int> jordan;  // J_d(n) for 1 <= d <= max_d
};

NTProfile nt_profile(long n, int max_d);

// Bernoulli number B_d in the convention B_1 = +1/2 (all other values match
// the standard recurrence sum_{j<=m} C(m+1,j) B_j = 0). Memoized.
Rat bernoulli(int d);

Int factorial(long n);

// Binomial coefficient with arbitrary (possibly negative) integer top and
// nonnegative k: prod_{i<k} (n - i) / k!. Always an exact integer.
Int binomial(const Int& n, long k);

// Power p^e for exact integers, e >= 0.
Int int_pow(const Int& p, long e);

}  // namespace cgf
